#include "g52/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace g52 {

std::array<EigenvalueForm, 7> closed_spectrum_forms(const FamilyId& id) {
  validate(id);
  const double l = id.lam1, l1 = id.lam1, l2 = id.lam2;
  const auto re = [](double ax, double ay) { return EigenvalueForm{ax, ay, 0, 0}; };
  const auto zero = EigenvalueForm{};
  const auto X = re(1, 0), Y = re(0, 1), XY = re(1, 1);
  switch (id.tag) {
    case Tag::G1:
      return {zero, zero, zero, Y, X, re(-1, 0), XY};
    case Tag::G2:
      return {Y, XY, X, X, zero, zero, zero};
    case Tag::G3:
      return {Y, Y, X, X, zero, zero, zero};
    case Tag::G4:
      return {zero, zero, Y, X, XY, re(l1, l2), re(l1 + 1, l2)};
    case Tag::G5:
      return {re(0, 2), X, XY, zero, zero, Y, Y};
    case Tag::G6:
      return {re(l, 1), re(2, 0), re(l + 1, 1), zero, zero, X, X};
    case Tag::G7:
      return {Y, X, re(1, 2), zero, zero, XY, XY};
    case Tag::G8:
      return {X, re(l, 1), re(l + 2, 1), zero, zero, re(l + 1, 1), re(l + 1, 1)};
    case Tag::G9:
      return {Y, Y, X, X, zero, zero, zero};
    case Tag::G10:
      return {re(l, 1), re(l, 1), X, X, zero, zero, zero};
    case Tag::G11:
      return {Y, XY, XY, zero, zero, X, X};
    case Tag::G12:
      return {X, re(l + 1, 1), re(l + 1, 1), zero, zero, re(l, 1), re(l, 1)};
    case Tag::G13:
      return {zero, zero, re(0, l),
              {1, 0, 0, 1}, {1, 0, 0, -1},
              {1, l, 0, 1}, {1, l, 0, -1}};
    case Tag::G14:
      return {zero, zero, X,
              {l1, l2, 0, 1}, {l1, l2, 0, -1},
              {l1 + 1, l2, 0, 1}, {l1 + 1, l2, 0, -1}};
    case Tag::G15:
    case Tag::G16:
      return {zero, zero, zero,
              {0, 1, 1, 0}, {0, 1, -1, 0},
              {0, 1, 1, 0}, {0, 1, -1, 0}};
  }
  return {};
}

EigenvalueMultiset eigenvalues_closed(const FamilyId& id, const AlgebraElement& u) {
  const auto forms = closed_spectrum_forms(id);
  EigenvalueMultiset out;
  for (int i = 0; i < 7; ++i) out[i] = forms[i].eval(u.x(), u.y());
  return out;
}

EigenvalueMultiset eigenvalues_numeric(const Mat7& m) {
  // Balancing-style isolation: a row or column whose off-diagonal part is
  // zero carries its diagonal entry as an exact eigenvalue and can be
  // removed. The ad_U matrices deflate almost entirely this way, which keeps
  // multiple eigenvalues exact instead of sqrt(eps)-perturbed.
  std::vector<int> active(7);
  std::iota(active.begin(), active.end(), 0);
  std::vector<std::complex<double>> found;

  bool changed = true;
  while (changed && !active.empty()) {
    changed = false;
    for (std::size_t p = 0; p < active.size(); ++p) {
      const int i = active[p];
      bool row_clear = true, col_clear = true;
      for (const int j : active) {
        if (j == i) continue;
        if (m(i, j) != 0.0) row_clear = false;
        if (m(j, i) != 0.0) col_clear = false;
      }
      if (row_clear || col_clear) {
        found.emplace_back(m(i, i), 0.0);
        active.erase(active.begin() + p);
        changed = true;
        break;
      }
    }
  }

  if (!active.empty()) {
    const int n = static_cast<int>(active.size());
    Eigen::MatrixXd core(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) core(r, c) = m(active[r], active[c]);
    // The spectrum is invariant under transposition; the transposed core of
    // an ad_U matrix is block upper triangular, which QR deflates exactly.
    Eigen::EigenSolver<Eigen::MatrixXd> solver(core.transpose(), false);
    if (solver.info() != Eigen::Success)
      throw NoConvergence("QR iteration failed to converge");
    for (int k = 0; k < n; ++k) found.push_back(solver.eigenvalues()[k]);
  }

  EigenvalueMultiset out;
  std::copy_n(found.begin(), 7, out.begin());
  return out;
}

namespace {

double pairing_cost(const EigenvalueMultiset& a, const EigenvalueMultiset& b,
                    const std::array<int, 7>& perm) {
  double worst = 0.0;
  for (int i = 0; i < 7; ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
  return worst;
}

}  // namespace

double multiset_distance(const EigenvalueMultiset& a, const EigenvalueMultiset& b) {
  const auto lex = [](const std::complex<double>& p, const std::complex<double>& q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  };
  EigenvalueMultiset sa = a, sb = b;
  std::sort(sa.begin(), sa.end(), lex);
  std::sort(sb.begin(), sb.end(), lex);
  std::array<int, 7> ident{0, 1, 2, 3, 4, 5, 6};
  double best = pairing_cost(sa, sb, ident);
  if (best < 1e-12) return best;  // greedy lexicographic pairing suffices
  // Near-degenerate clusters may sort differently; fall back to the optimal
  // assignment (7! is small enough to enumerate).
  std::array<int, 7> perm = ident;
  do {
    best = std::min(best, pairing_cost(sa, sb, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

ExponentialityVerdict is_exponential(const FamilyId& id) {
  const auto forms = closed_spectrum_forms(id);
  for (const auto& f : forms) {
    if (!f.has_imaginary_part()) continue;
    // Find (x, y) with zero real part and nonzero imaginary part.
    double wx, wy;
    if (f.ax == 0.0 && f.ay == 0.0) {
      wx = f.bx;
      wy = f.by;
    } else {
      wx = -f.ay;
      wy = f.ax;
      if (f.bx * wx + f.by * wy == 0.0) continue;  // imaginary part vanishes on the line
    }
    const double scale = std::max(std::abs(wx), std::abs(wy));
    wx /= scale;
    wy /= scale;
    if (wx < 0.0 || (wx == 0.0 && wy < 0.0)) {
      wx = -wx;
      wy = -wy;
    }
    const AlgebraElement witness(0, 0, 0, 0, 0, wx, wy);
    // Numeric confirmation on ad(witness).
    const auto spectrum = eigenvalues_numeric(ad_matrix(build_algebra(id), witness));
    for (const auto& ev : spectrum)
      if (std::abs(ev.real()) < 1e-9 && std::abs(ev.imag()) > 1e-6)
        return {false, witness};
  }
  return {true, std::nullopt};
}

}  // namespace g52
