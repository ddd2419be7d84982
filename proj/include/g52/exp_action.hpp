#ifndef G52_EXP_ACTION_HPP
#define G52_EXP_ACTION_HPP

#include "g52/families.hpp"
#include "g52/kernels.hpp"
#include "g52/lie_core.hpp"

namespace g52 {

/// Dense matrix exponential (scaling-and-squaring with a Pade kernel).
/// Throws Overflow on non-finite input or output.
Mat7 expm(const Mat7& m);

/// Closed-form exp(ad_U) for G2, G3, G4^{00}, G9, G10^lambda, written
/// through the divided-difference kernels so every removable singularity
/// (x, y, x+y, lambda x + y -> 0) is continuous. Throws InvalidFamily for
/// the other families and Overflow when |x| or |y| exceeds 30.
Mat7 exp_ad_closed(const FamilyId& id, const AlgebraElement& u);

/// Coadjoint action: F_U = exp(ad_U)^T F via the expm oracle.
/// Throws NotExponentialFamily for G13..G16.
Covector coadjoint_point(const FamilyId& id, const Covector& f, const AlgebraElement& u);

/// Same point through the closed-form exp(ad_U) of the five studied
/// families. Throws InvalidFamily otherwise.
Covector coadjoint_point_closed(const FamilyId& id, const Covector& f, const AlgebraElement& u);

/// Probes for suspect closed-form entries: evaluates the printed reading
/// and the corrected reading of one exp(ad_U) entry against the expm
/// oracle over seeded random draws.
struct ErratumProbe {
  std::string name;          // e.g. "G3.B3"
  std::string printed;       // the reading as printed
  std::string corrected;     // the reading the implementation uses
  double printed_residual;   // max |printed - oracle| over the draws
  double corrected_residual; // max |corrected - oracle|
  bool corrected_wins;
};

std::vector<ErratumProbe> run_erratum_probes(unsigned seed, int draws);

}  // namespace g52

#endif
