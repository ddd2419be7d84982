#ifndef G52_LIE_CORE_HPP
#define G52_LIE_CORE_HPP

#include <Eigen/Dense>
#include <array>

#include "g52/errors.hpp"

namespace g52 {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

// Basis order is fixed as (X1, X2, X3, X4, X5, X, Y), indices 0..6 internally.
// All user-facing output is 1-based in the nilradical part and uses X, Y for
// the last two slots.

/// Element U = x1 X1 + ... + x5 X5 + x X + y Y.
struct AlgebraElement {
  Vec7 v = Vec7::Zero();

  AlgebraElement() = default;
  explicit AlgebraElement(const Vec7& coords) : v(coords) {}
  AlgebraElement(double x1, double x2, double x3, double x4, double x5, double x, double y) {
    v << x1, x2, x3, x4, x5, x, y;
  }
  static AlgebraElement basis(int i) {
    AlgebraElement e;
    e.v[i] = 1.0;
    return e;
  }

  double x1() const { return v[0]; }
  double x2() const { return v[1]; }
  double x3() const { return v[2]; }
  double x4() const { return v[3]; }
  double x5() const { return v[4]; }
  double x() const { return v[5]; }
  double y() const { return v[6]; }
};

/// Covector F = a1 X1* + ... + a5 X5* + a X* + b Y*. Also used for orbit
/// points (x*_1, ..., x*_5, x*, y*).
struct Covector {
  Vec7 v = Vec7::Zero();

  Covector() = default;
  explicit Covector(const Vec7& coords) : v(coords) {}
  Covector(double a1, double a2, double a3, double a4, double a5, double a, double b) {
    v << a1, a2, a3, a4, a5, a, b;
  }
  static Covector basis(int i) {
    Covector f;
    f.v[i] = 1.0;
    return f;
  }

  double a1() const { return v[0]; }
  double a2() const { return v[1]; }
  double a3() const { return v[2]; }
  double a4() const { return v[3]; }
  double a5() const { return v[4]; }
  double ax() const { return v[5]; }
  double beta() const { return v[6]; }
};

/// Structure constants c[i][j][k]: coefficient of X_k in [X_i, X_j].
/// Antisymmetric in (i, j) by construction.
struct StructureConstants {
  std::array<std::array<std::array<double, 7>, 7>, 7> c{};

  double operator()(int i, int j, int k) const { return c[i][j][k]; }

  // Sets [X_i, X_j] coefficient of X_k, and the antisymmetric counterpart.
  void set(int i, int j, int k, double value) {
    c[i][j][k] = value;
    c[j][i][k] = -value;
  }
};

/// [u, v] computed from the structure constants. Bilinear, antisymmetric.
AlgebraElement bracket(const StructureConstants& c, const AlgebraElement& u,
                       const AlgebraElement& v);

/// Matrix of ad_u: column j holds the coordinates of [u, X_j].
Mat7 ad_matrix(const StructureConstants& c, const AlgebraElement& u);

/// Kirillov form B_F: entry (i, j) = <f, [X_i, X_j]>. Skew-symmetric.
Mat7 kirillov_form(const StructureConstants& c, const Covector& f);

/// Numerical rank of a skew-symmetric matrix (singular values above
/// 1e-9 * max(1, sigma_max)). Throws NotSkew if |m + m^T| exceeds 1e-12.
int skew_rank(const Mat7& m);

/// Max |c[i][j][k] + c[j][i][k]| over all indices.
double antisymmetry_residual(const StructureConstants& c);

/// Max Jacobi residual over all basis triples (i, j, k) and output slots.
double jacobi_residual(const StructureConstants& c);

}  // namespace g52

#endif
