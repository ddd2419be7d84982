#ifndef G52_SPECTRAL_HPP
#define G52_SPECTRAL_HPP

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "g52/families.hpp"
#include "g52/lie_core.hpp"

namespace g52 {

/// Seven eigenvalues with multiplicity, unordered. Conjugation-closed for
/// real input matrices.
using EigenvalueMultiset = std::array<std::complex<double>, 7>;

/// Eigenvalue of ad_U as a linear form in (x, y):
/// (ax*x + ay*y) + i (bx*x + by*y).
struct EigenvalueForm {
  double ax = 0, ay = 0, bx = 0, by = 0;
  std::complex<double> eval(double x, double y) const {
    return {ax * x + ay * y, bx * x + by * y};
  }
  bool has_imaginary_part() const { return bx != 0.0 || by != 0.0; }
};

/// The closed-form spectrum of ad_U as linear forms in (x, y).
std::array<EigenvalueForm, 7> closed_spectrum_forms(const FamilyId& id);

/// Eigenvalues via a dense nonsymmetric solve: a balancing-style isolation
/// pass peels eigenvalues that are exact by structure, QR iteration handles
/// the remaining core. Throws NoConvergence if the QR phase fails.
EigenvalueMultiset eigenvalues_numeric(const Mat7& m);

/// The tabulated closed-form spectrum evaluated at u's (x, y).
EigenvalueMultiset eigenvalues_closed(const FamilyId& id, const AlgebraElement& u);

/// Distance between two eigenvalue multisets under the optimal pairing
/// (exhaustive over the 7! assignments; greedy lexicographic first).
double multiset_distance(const EigenvalueMultiset& a, const EigenvalueMultiset& b);

struct ExponentialityVerdict {
  bool exponential = true;
  /// For non-exponential families: a U whose spectrum contains a nonzero
  /// purely imaginary eigenvalue, confirmed by the numeric solver.
  std::optional<AlgebraElement> witness;
};

/// Exponential for G1..G12; NotExponential with witness for G13..G16.
ExponentialityVerdict is_exponential(const FamilyId& id);

}  // namespace g52

#endif
