#include "g52/reference_tables.hpp"

namespace g52::reference {

Mat7 table_ad(const FamilyId& id, const AlgebraElement& u) {
  validate(id);
  const double x1 = u.x1(), x2 = u.x2(), x3 = u.x3(), x4 = u.x4(), x5 = u.x5();
  const double x = u.x(), y = u.y();
  const double l = id.lam1, l1 = id.lam1, l2 = id.lam2;
  Mat7 m = Mat7::Zero();
  switch (id.tag) {
    case Tag::G1:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 1) = -x;    m(1, 5) = x2;
      m(2, 2) = y;     m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 5) = -l * y;  m(3, 6) = l * x;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = x + y;   m(4, 5) = -x5;  m(4, 6) = -x5;
      break;
    case Tag::G2:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(2, 2) = y;     m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x;       m(3, 5) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = x + y;   m(4, 5) = -x5;  m(4, 6) = -x5;
      break;
    case Tag::G3:
      m(1, 1) = x;     m(1, 5) = -x2;
      m(2, 2) = y;     m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x;       m(3, 5) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = y;       m(4, 6) = -x5;
      break;
    case Tag::G4:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 1) = y;     m(1, 6) = -x2;
      m(2, 2) = l1 * x + l2 * y;        m(2, 5) = -l1 * x3;        m(2, 6) = -l2 * x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x + y;           m(3, 5) = -x4;  m(3, 6) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = (1 + l1) * x + l2 * y;
      m(4, 5) = -(1 + l1) * x5;        m(4, 6) = -l2 * x5;
      break;
    case Tag::G5:
      m(0, 0) = y;     m(0, 6) = -x1;
      m(1, 0) = y;     m(1, 1) = y;    m(1, 6) = -x1 - x2;
      m(2, 2) = x;     m(2, 5) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = 2 * y;   m(3, 6) = -2 * x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = x + y;   m(4, 5) = -x5;  m(4, 6) = -x5;
      break;
    case Tag::G6:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 0) = y;     m(1, 1) = x;    m(1, 5) = -x2;     m(1, 6) = -x1;
      m(2, 2) = l * x + y;             m(2, 5) = -l * x3; m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = 2 * x;   m(3, 5) = -2 * x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 4) = (1 + l) * x + y;
      m(4, 5) = -(1 + l) * x5;         m(4, 6) = -x5;
      break;
    case Tag::G7:
      m(0, 0) = y;     m(0, 6) = -x1;
      m(1, 1) = x + y; m(1, 5) = -x2;  m(1, 6) = -x2;
      m(2, 2) = x;     m(2, 5) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x + 2 * y;  m(3, 5) = -x4;  m(3, 6) = -2 * x4;
      m(4, 0) = -x3;   m(4, 1) = y;    m(4, 2) = x1;      m(4, 4) = x + y;
      m(4, 5) = -x5;   m(4, 6) = -x2 - x5;
      break;
    case Tag::G8:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 1) = l * x + x + y;         m(1, 5) = -l * x2 - x2;    m(1, 6) = -x2;
      m(2, 2) = l * x + y;             m(2, 5) = -l * x3;         m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = l * x + 2 * x + y;
      m(3, 5) = -l * x4 - x4;          m(3, 6) = -x4;
      m(4, 0) = -x3;   m(4, 1) = y;    m(4, 2) = x1;      m(4, 4) = l * x + x + y;
      m(4, 5) = -l * x5 - x5;          m(4, 6) = -x2 - x5;
      break;
    case Tag::G9:
      m(1, 1) = y;     m(1, 6) = -x2;
      m(2, 2) = x;     m(2, 5) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = y;       m(3, 6) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1 + y;                  m(4, 4) = x;
      m(4, 5) = -x5;   m(4, 6) = -x3;
      break;
    case Tag::G10:
      m(1, 1) = x;     m(1, 5) = -x2;
      m(2, 2) = l * x + y;             m(2, 5) = -l * x3; m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x;       m(3, 5) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1 + y;                  m(4, 4) = l * x + y;
      m(4, 5) = -l * x5;               m(4, 6) = -x3 - x5;
      break;
    case Tag::G11:
      m(0, 0) = y;     m(0, 6) = -x1;
      m(1, 1) = x;     m(1, 5) = -x2;
      m(2, 1) = y;     m(2, 2) = x;    m(2, 5) = -x3;     m(2, 6) = -x2;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x + y;   m(3, 5) = -x4;  m(3, 6) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 3) = y;       m(4, 4) = x + y;
      m(4, 5) = -x5;   m(4, 6) = -x4 - x5;
      break;
    case Tag::G12:
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 1) = l * x + y;             m(1, 5) = -l * x2; m(1, 6) = -x2;
      m(2, 1) = y;     m(2, 2) = l * x + y;               m(2, 5) = -l * x3;
      m(2, 6) = -x2 - x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = l * x + x + y;
      m(3, 5) = -(l + 1) * x4;         m(3, 6) = -x4;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 3) = y;       m(4, 4) = l * x + x + y;
      m(4, 5) = -(l + 1) * x5;         m(4, 6) = -x4 - x5;
      break;
    case Tag::G13:
      m(0, 0) = l * y; m(0, 6) = -l * x1;
      m(1, 1) = x;     m(1, 2) = -y;   m(1, 5) = -x2;     m(1, 6) = x3;
      m(2, 1) = y;     m(2, 2) = x;    m(2, 5) = -x3;     m(2, 6) = -x2;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = x + l * y;  m(3, 4) = -y;
      m(3, 5) = -x4;   m(3, 6) = -l * x4 + x5;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 3) = y;       m(4, 4) = x + l * y;
      m(4, 5) = -x5;   m(4, 6) = -x4 - l * x5;
      break;
    case Tag::G14:
      // The printed (4,2) entry reads "x"; the bracket [X1, X2] = X4 forces
      // x1 there, consistent with every sibling family.
      m(0, 0) = x;     m(0, 5) = -x1;
      m(1, 1) = l1 * x + l2 * y;       m(1, 2) = -y;
      m(1, 5) = -l1 * x2;              m(1, 6) = -l2 * x2 + x3;
      m(2, 1) = y;     m(2, 2) = l1 * x + l2 * y;
      m(2, 5) = -l1 * x3;              m(2, 6) = -x2 - l2 * x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 3) = l1 * x + x + l2 * y;  m(3, 4) = -y;
      m(3, 5) = -l1 * x4 - x4;         m(3, 6) = -l2 * x4 + x5;
      m(4, 0) = -x3;   m(4, 2) = x1;   m(4, 3) = y;       m(4, 4) = l1 * x + x + l2 * y;
      m(4, 5) = -l1 * x5 - x5;         m(4, 6) = -x4 - l2 * x5;
      break;
    case Tag::G15:
      m(1, 1) = y;     m(1, 2) = -x;   m(1, 5) = x3;      m(1, 6) = -x2;
      m(2, 1) = x;     m(2, 2) = y;    m(2, 5) = -x2;     m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 2) = -y;      m(3, 3) = y;  m(3, 4) = -x;
      m(3, 5) = x5;    m(3, 6) = -x4 + x3;
      m(4, 0) = -x3;   m(4, 1) = y;    m(4, 2) = x1;      m(4, 3) = x;  m(4, 4) = y;
      m(4, 5) = -x4;   m(4, 6) = -x2 - x5;
      break;
    case Tag::G16:
      m(1, 1) = y;     m(1, 2) = -x;   m(1, 5) = x3;      m(1, 6) = -x2;
      m(2, 1) = x;     m(2, 2) = y;    m(2, 5) = -x2;     m(2, 6) = -x3;
      m(3, 0) = -x2;   m(3, 1) = x1;   m(3, 2) = -l * y;  m(3, 3) = y;  m(3, 4) = -x;
      m(3, 5) = x5;    m(3, 6) = -x4 + l * x3;
      m(4, 0) = -x3;   m(4, 1) = l * y + x;               m(4, 2) = x1;
      m(4, 3) = x;     m(4, 4) = y;    m(4, 5) = -x2 - x4;  m(4, 6) = -l * x2 - x5;
      break;
  }
  return m;
}

Mat7 table_kirillov(const FamilyId& id, const Covector& f) {
  if (!is_studied_family(id))
    throw InvalidFamily("no tabulated B_F for " + to_string(id));
  const double a1 = f.a1(), a2 = f.a2(), a3 = f.a3(), a4 = f.a4(), a5 = f.a5();
  const double l = id.lam1;
  Mat7 b = Mat7::Zero();
  const auto set = [&b](int i, int j, double v) {
    b(i, j) = v;
    b(j, i) = -v;
  };
  switch (id.tag) {
    case Tag::G2:
      set(0, 1, a4);  set(0, 2, a5);  set(0, 5, -a1);
      set(2, 6, -a3);
      set(3, 5, -a4);
      set(4, 5, -a5); set(4, 6, -a5);
      break;
    case Tag::G3:
      set(0, 1, a4);  set(0, 2, a5);
      set(1, 5, -a2); set(2, 6, -a3);
      set(3, 5, -a4); set(4, 6, -a5);
      break;
    case Tag::G4:
      set(0, 1, a4);  set(0, 2, a5);  set(0, 5, -a1);
      set(1, 6, -a2);
      set(3, 5, -a4); set(3, 6, -a4);
      set(4, 5, -a5);
      break;
    case Tag::G9:
      set(0, 1, a4);  set(0, 2, a5);
      set(1, 6, -a2);
      set(2, 5, -a3); set(2, 6, -a5);
      set(3, 6, -a4);
      set(4, 5, -a5);
      break;
    case Tag::G10:
      set(0, 1, a4);  set(0, 2, a5);
      set(1, 5, -a2);
      set(2, 5, -l * a3);  set(2, 6, -a3 - a5);
      set(3, 5, -a4);
      set(4, 5, -l * a5);  set(4, 6, -a5);
      break;
    default:
      break;
  }
  return b;
}

bool rank6_predicate(const FamilyId& id, const Covector& f) {
  if (!is_studied_family(id))
    throw InvalidFamily("no tabulated rank condition for " + to_string(id));
  const double a2 = f.a2(), a3 = f.a3(), a4 = f.a4(), a5 = f.a5();
  switch (id.tag) {
    case Tag::G2:
      return a4 != 0.0 && (a3 != 0.0 || a5 != 0.0);
    case Tag::G4:
      return a5 != 0.0 && (a2 != 0.0 || a4 != 0.0);
    default:  // G3, G9, G10
      return (a4 == 0.0 && a2 != 0.0 && a5 != 0.0) ||
             (a4 != 0.0 && (a3 != 0.0 || a5 != 0.0));
  }
}

}  // namespace g52::reference
