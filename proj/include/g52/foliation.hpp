#ifndef G52_FOLIATION_HPP
#define G52_FOLIATION_HPP

#include <vector>

#include "g52/families.hpp"
#include "g52/lie_core.hpp"
#include "g52/orbits.hpp"

namespace g52 {

/// One of the six fields of the system S_G on V. Fields 1, 5 and 6 are the
/// constant unit fields along x1*, x* and y* for every family.
struct VectorField {
  FamilyId family;  // one of the five studied families
  int index = 1;    // 1..6
};

/// Field value at v (NotInV outside V).
Vec7 s_g_eval(const VectorField& field, const Covector& v);

/// Classical fixed-step RK4; throws LeftV when the trajectory leaves V.
Covector integrate_flow(const VectorField& field, const Covector& v0, double t, int steps);

/// The explicit flow of the field at parameter t.
Covector closed_flow(const VectorField& field, const Covector& v0, double t);

enum class HomeoTag { h1, h2, h3, h };

/// Leaf-preserving homeomorphism of V:
///   h1: swap (x2*, x3*) and (x4*, x5*)            G2 -> G4^{00}
///   h2: x2* -> x2* - x4* ln|x4*|                  G3 -> G9
///   h3: x2* += l x4* ln|x4*|, x3* += x5* ln|x5*|  G3 -> G10^l
///   h : x2* -> x2* x4*, x5* -> x5*/x4*            G2 -> G3
struct Homeomorphism {
  HomeoTag tag = HomeoTag::h1;
  double lambda = 0.0;  // h3 only
};

Covector homeo_apply(const Homeomorphism& h, const Covector& v);
Covector homeo_inverse(const Homeomorphism& h, const Covector& v);

/// Base coordinate of the trivializing fibration; equals invariant(id, v).
double fibration_p(const FamilyId& id, const Covector& v);

struct JacobianReport {
  double analytic = 1.0;              // e^{trace ad_U}
  std::vector<double> numeric;        // det of the finite-difference Jacobian per sample
  double max_rel_err = 0.0;
  double rel_std = 0.0;
  bool pass = false;
};

/// Checks that the Jacobian determinant of f -> F_U is the constant
/// e^{trace ad_U}: central differences, step 1e-5 (1 + |f_i|), pass when
/// every sample matches within 1e-6 relative and their spread is below
/// 1e-6 relative.
JacobianReport jacobian_constancy(const FamilyId& id, const AlgebraElement& u,
                                  const std::vector<Covector>& f_samples);

/// The four leaf-correspondence pairs of the topological classification.
struct EquivalencePair {
  Homeomorphism map;
  FamilyId source;
  FamilyId target;
};

/// h1: G2 -> G4^{00}; h2: G3 -> G9; h3(lambda): G3 -> G10^lambda; h: G2 -> G3.
EquivalencePair equivalence_pair(HomeoTag tag, double lambda = 0.5);

struct CorrespondenceReport {
  double max_residual = 0.0;          // max |inv_target(h(v)) - inv_source(v)| (relative)
  double max_roundtrip = 0.0;         // max coordinate error of inverse(forward(v))
  // Observed quadrant images under the map, indexed ++, -+, --, +-.
  std::array<std::string, 4> quadrant_image;
};

CorrespondenceReport leaf_correspondence_check(const EquivalencePair& pair,
                                               const std::vector<Covector>& v_samples);

}  // namespace g52

#endif
