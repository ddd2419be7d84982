#include "g52/families.hpp"

#include <Eigen/Dense>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

namespace g52 {

int param_arity(Tag tag) {
  switch (tag) {
    case Tag::G1:
    case Tag::G6:
    case Tag::G8:
    case Tag::G10:
    case Tag::G12:
    case Tag::G13:
    case Tag::G16:
      return 1;
    case Tag::G4:
    case Tag::G14:
      return 2;
    default:
      return 0;
  }
}

const char* tag_name(Tag tag) {
  static const char* names[] = {"G1", "G2",  "G3",  "G4",  "G5",  "G6",  "G7",  "G8",
                                "G9", "G10", "G11", "G12", "G13", "G14", "G15", "G16"};
  return names[static_cast<int>(tag)];
}

void validate(const FamilyId& id) {
  const auto bad = [&](const std::string& why) {
    throw InvalidParams(std::string(tag_name(id.tag)) + ": " + why);
  };
  if (!std::isfinite(id.lam1) || !std::isfinite(id.lam2)) bad("non-finite parameter");
  switch (id.tag) {
    case Tag::G1:
      if (id.lam1 != 0.0 && id.lam1 != 1.0) bad("lambda must be 0 or 1");
      break;
    case Tag::G4:
      if (id.lam1 == -1.0 && id.lam2 == 0.0) bad("(lambda1, lambda2) = (-1, 0) is excluded");
      break;
    case Tag::G13:
      if (id.lam1 < 0.0) bad("lambda must be >= 0");
      break;
    case Tag::G14:
      if (id.lam2 < 0.0) bad("lambda2 must be >= 0");
      break;
    case Tag::G16:
      if (id.lam1 < 0.0) bad("lambda must be >= 0");
      break;
    default:
      break;
  }
}

std::string to_string(const FamilyId& id) {
  const int arity = param_arity(id.tag);
  std::string s = tag_name(id.tag);
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  if (arity == 1) s += ":lambda=" + num(id.lam1);
  if (arity == 2) s += ":lambda1=" + num(id.lam1) + ",lambda2=" + num(id.lam2);
  return s;
}

FamilyId parse_family(const std::string& spec) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) { throw ParseError(why, pos); };

  std::string tag;
  while (pos < spec.size() && spec[pos] != ':') tag += spec[pos++];
  static const std::map<std::string, Tag> tags = {
      {"G1", Tag::G1},   {"G2", Tag::G2},   {"G3", Tag::G3},   {"G4", Tag::G4},
      {"G5", Tag::G5},   {"G6", Tag::G6},   {"G7", Tag::G7},   {"G8", Tag::G8},
      {"G9", Tag::G9},   {"G10", Tag::G10}, {"G11", Tag::G11}, {"G12", Tag::G12},
      {"G13", Tag::G13}, {"G14", Tag::G14}, {"G15", Tag::G15}, {"G16", Tag::G16}};
  const auto it = tags.find(tag);
  if (it == tags.end()) {
    pos = 0;
    fail("unknown family tag '" + tag + "'");
  }
  FamilyId id(it->second);
  const int arity = param_arity(id.tag);

  bool have1 = false, have2 = false;
  if (pos < spec.size()) {
    ++pos;  // skip ':'
    while (true) {
      std::string key;
      while (pos < spec.size() && spec[pos] != '=') key += spec[pos++];
      if (pos >= spec.size()) fail("expected '=' after key '" + key + "'");
      ++pos;
      const std::size_t valstart = pos;
      std::string val;
      while (pos < spec.size() && spec[pos] != ',') val += spec[pos++];
      char* end = nullptr;
      const double x = std::strtod(val.c_str(), &end);
      if (val.empty() || end != val.c_str() + val.size()) {
        pos = valstart;
        fail("bad numeric value '" + val + "'");
      }
      if (key == "lambda" && arity == 1) {
        id.lam1 = x;
        have1 = true;
      } else if (key == "lambda1" && arity == 2) {
        id.lam1 = x;
        have1 = true;
      } else if (key == "lambda2" && arity == 2) {
        id.lam2 = x;
        have2 = true;
      } else {
        pos = valstart > key.size() ? valstart - key.size() - 1 : 0;
        fail("unexpected key '" + key + "' for " + tag);
      }
      if (pos >= spec.size()) break;
      ++pos;  // skip ','
    }
  }
  if (arity >= 1 && !have1) fail(tag + " requires " + (arity == 1 ? "lambda" : "lambda1"));
  if (arity == 2 && !have2) fail(tag + " requires lambda2");
  validate(id);
  return id;
}

namespace {

Mat5 diag5(double a1, double a2, double a3, double a4, double a5) {
  Mat5 m = Mat5::Zero();
  m(0, 0) = a1;
  m(1, 1) = a2;
  m(2, 2) = a3;
  m(3, 3) = a4;
  m(4, 4) = a5;
  return m;
}

// E_ij with 1-based row i, column j.
Mat5 unit5(int i, int j) {
  Mat5 m = Mat5::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

// S_ab = [[a, b], [-b, a]] placed on rows/cols (2,3) for slot 0 or (4,5)
// for slot 1 (1-based).
Mat5 sblock(double a, double b, int slot) {
  Mat5 m = Mat5::Zero();
  const int p = slot == 0 ? 1 : 3;
  m(p, p) = a;
  m(p, p + 1) = b;
  m(p + 1, p) = -b;
  m(p + 1, p + 1) = a;
  return m;
}

}  // namespace

FamilySpec family_spec(const FamilyId& id) {
  validate(id);
  const double l = id.lam1, l1 = id.lam1, l2 = id.lam2;
  FamilySpec s;
  switch (id.tag) {
    case Tag::G1:
      s.aX = diag5(1, -1, 0, 0, 1);
      s.aY = diag5(0, 0, 1, 0, 1);
      s.xy[3] = l;  // lambda X4
      break;
    case Tag::G2:
      s.aX = diag5(1, 0, 0, 1, 1);
      s.aY = diag5(0, 0, 1, 0, 1);
      break;
    case Tag::G3:
      s.aX = diag5(0, 1, 0, 1, 0);
      s.aY = diag5(0, 0, 1, 0, 1);
      break;
    case Tag::G4:
      s.aX = diag5(1, 0, l1, 1, 1 + l1);
      s.aY = diag5(0, 1, l2, 1, l2);
      break;
    case Tag::G5:
      s.aX = diag5(0, 0, 1, 0, 1);
      s.aY = diag5(1, 1, 0, 2, 1) + unit5(1, 2);
      break;
    case Tag::G6:
      s.aX = diag5(1, 1, l, 2, 1 + l);
      s.aY = diag5(0, 0, 1, 0, 1) + unit5(1, 2);
      break;
    case Tag::G7:
      s.aX = diag5(0, 1, 1, 1, 1);
      s.aY = diag5(1, 1, 0, 2, 1) + unit5(2, 5);
      break;
    case Tag::G8:
      s.aX = diag5(1, 1 + l, l, 2 + l, 1 + l);
      s.aY = diag5(0, 1, 1, 1, 1) + unit5(2, 5);
      break;
    case Tag::G9:
      s.aX = diag5(0, 0, 1, 0, 1);
      s.aY = diag5(0, 1, 0, 1, 0) + unit5(3, 5);
      break;
    case Tag::G10:
      s.aX = diag5(0, 1, l, 1, l);
      s.aY = diag5(0, 0, 1, 0, 1) + unit5(3, 5);
      break;
    case Tag::G11:
      s.aX = diag5(0, 1, 1, 1, 1);
      s.aY = diag5(1, 0, 0, 1, 1) + unit5(2, 3) + unit5(4, 5);
      break;
    case Tag::G12:
      s.aX = diag5(1, l, l, 1 + l, 1 + l);
      s.aY = diag5(0, 1, 1, 1, 1) + unit5(2, 3) + unit5(4, 5);
      break;
    case Tag::G13:
      s.aX = diag5(0, 1, 1, 1, 1);
      s.aY = diag5(l, 0, 0, 0, 0) + sblock(0, 1, 0) + sblock(l, 1, 1);
      break;
    case Tag::G14:
      s.aX = diag5(1, l1, l1, 1 + l1, 1 + l1);
      s.aY = sblock(l2, 1, 0) + sblock(l2, 1, 1);
      break;
    case Tag::G15:
      s.aX = sblock(0, 1, 0) + sblock(0, 1, 1);
      s.aY = diag5(0, 1, 1, 1, 1) + unit5(2, 5) - unit5(3, 4);
      break;
    case Tag::G16:
      s.aX = sblock(0, 1, 0) + sblock(0, 1, 1) + unit5(2, 5);
      s.aY = diag5(0, 1, 1, 1, 1) + l * (unit5(2, 5) - unit5(3, 4));
      break;
  }
  return s;
}

StructureConstants build_algebra(const FamilyId& id) {
  const FamilySpec spec = family_spec(id);
  StructureConstants sc{};
  sc.set(0, 1, 3, 1.0);  // [X1, X2] = X4
  sc.set(0, 2, 4, 1.0);  // [X1, X3] = X5
  // Coefficient of X_i in [X, X_j] is aX(j, i); same pattern for Y.
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 5; ++i) {
      if (spec.aX(j, i) != 0.0) sc.set(5, j, i, spec.aX(j, i));
      if (spec.aY(j, i) != 0.0) sc.set(6, j, i, spec.aY(j, i));
    }
  for (int k = 0; k < 5; ++k)
    if (spec.xy[k] != 0.0) sc.set(5, 6, k, spec.xy[k]);
  return sc;
}

int derived_ideal_dimension(const FamilyId& id) {
  const StructureConstants c = build_algebra(id);
  Eigen::Matrix<double, 21, 7> span;
  int row = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) span(row, k) = c(i, j, k);
      ++row;
    }
  Eigen::JacobiSVD<Eigen::Matrix<double, 21, 7>> svd(span);
  const auto& sv = svd.singularValues();
  const double tol = 1e-9 * std::max(1.0, sv[0]);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++rank;
  return rank;
}

std::vector<FamilyTemplate> list_families() {
  std::vector<FamilyTemplate> out;
  static const char* constraints[] = {
      "lambda in {0, 1}", "", "", "(lambda1, lambda2) != (-1, 0)", "", "lambda real", "",
      "lambda real", "", "lambda real", "", "lambda real", "lambda >= 0",
      "lambda2 >= 0", "", "lambda >= 0"};
  for (int t = 0; t < 16; ++t) {
    const Tag tag = static_cast<Tag>(t);
    out.push_back({tag, param_arity(tag), constraints[t]});
  }
  return out;
}

bool is_studied_family(const FamilyId& id) {
  switch (id.tag) {
    case Tag::G2:
    case Tag::G3:
    case Tag::G9:
    case Tag::G10:
      return true;
    case Tag::G4:
      return id.lam1 == 0.0 && id.lam2 == 0.0;
    default:
      return false;
  }
}

bool is_exponential_tag(Tag tag) {
  return static_cast<int>(tag) <= static_cast<int>(Tag::G12);
}

}  // namespace g52
