#include "g52/lie_core.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace g52 {

AlgebraElement bracket(const StructureConstants& c, const AlgebraElement& u,
                       const AlgebraElement& v) {
  AlgebraElement out;
  for (int i = 0; i < 7; ++i) {
    if (u.v[i] == 0.0) continue;
    for (int j = 0; j < 7; ++j) {
      if (v.v[j] == 0.0) continue;
      const double w = u.v[i] * v.v[j];
      for (int k = 0; k < 7; ++k) out.v[k] += w * c(i, j, k);
    }
  }
  return out;
}

Mat7 ad_matrix(const StructureConstants& c, const AlgebraElement& u) {
  Mat7 m = Mat7::Zero();
  // Column j is [u, X_j]; accumulate over i in ascending order so entries
  // reproduce the per-family reference matrices bit for bit.
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) {
      if (u.v[i] == 0.0) continue;
      for (int k = 0; k < 7; ++k) {
        const double cc = c(i, j, k);
        if (cc != 0.0) m(k, j) += u.v[i] * cc;
      }
    }
  return m;
}

Mat7 kirillov_form(const StructureConstants& c, const Covector& f) {
  Mat7 b = Mat7::Zero();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      double s = 0.0;
      for (int k = 0; k < 7; ++k) s += c(i, j, k) * f.v[k];
      b(i, j) = s;
    }
  return b;
}

int skew_rank(const Mat7& m) {
  const double skew = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12) throw NotSkew("matrix is not skew-symmetric, residual " + std::to_string(skew));

  Eigen::JacobiSVD<Mat7> svd(m);
  const auto& sv = svd.singularValues();
  const double tol = 1e-9 * std::max(1.0, sv[0]);
  int rank = 0;
  for (int i = 0; i < 7; ++i)
    if (sv[i] > tol) ++rank;
  // Singular values of a skew matrix pair up; never let rounding split a pair.
  if (rank % 2 != 0) {
    if (rank < 7 && sv[rank] > 0.5 * tol)
      ++rank;
    else
      --rank;
  }
  return rank;
}

double antisymmetry_residual(const StructureConstants& c) {
  double r = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) r = std::max(r, std::abs(c(i, j, k) + c(j, i, k)));
  return r;
}

double jacobi_residual(const StructureConstants& c) {
  double r = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) {
          double s = 0.0;
          for (int m = 0; m < 7; ++m)
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          r = std::max(r, std::abs(s));
        }
  return r;
}

}  // namespace g52
