#ifndef G52_SAMPLING_HPP
#define G52_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "g52/families.hpp"
#include "g52/lie_core.hpp"

namespace g52 {

/// Deterministic uniform generator. Doubles are built from the raw 64-bit
/// stream directly so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool chance(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 eng_;
};

/// U with all seven coordinates uniform in [lo, hi].
AlgebraElement random_element(Rng& rng, double lo = -2.0, double hi = 2.0);

/// F with all seven coordinates uniform in [lo, hi].
Covector random_covector(Rng& rng, double lo = -2.0, double hi = 2.0);

/// F with each coordinate zeroed with probability 1/3, otherwise
/// uniform in [-2, 2]; exercises the rank-condition boundaries.
Covector random_structured_covector(Rng& rng);

/// Generic F for orbit work: |a4|, |a5| in [0.2, 2] with random signs,
/// other coordinates uniform in [-2, 2].
Covector random_generic_covector(Rng& rng);

/// Orbit-space point v in V with |x4|, |x5| in [mag_lo, mag_hi].
Covector random_v_point(Rng& rng, double mag_lo = 0.2, double mag_hi = 3.0);

/// Valid parameters for the tag, drawn uniform in the valid region
/// intersected with [-2, 2] ({0, 1} for G1).
FamilyId random_family(Tag tag, Rng& rng);

}  // namespace g52

#endif
