#ifndef G52_ORBITS_HPP
#define G52_ORBITS_HPP

#include <string>
#include <vector>

#include "g52/families.hpp"
#include "g52/lie_core.hpp"

namespace g52 {

/// Membership threshold for the foliated manifold V = {x4* x5* != 0}.
inline constexpr double kEpsV = 1e-12;

bool in_foliated_manifold(const Covector& v);

enum class OrbitKind { TypeIHyperplane, TypeIIHypersurface, NonGeneric };

const char* orbit_kind_name(OrbitKind k);

struct OrbitClass {
  int dimension = 0;
  OrbitKind kind = OrbitKind::NonGeneric;
  std::string detail;  // which sub-case fired, empty for NonGeneric
};

/// Component signs (sign x4*, sign x5*) of a point of V.
struct Quadrant {
  int s4 = +1;
  int s5 = +1;
  bool operator==(const Quadrant&) const = default;
};

Quadrant quadrant(const Covector& v);
std::string quadrant_name(const Quadrant& q);

/// Leaf of the foliation: family, component, and invariant value.
struct LeafId {
  FamilyId family;
  Quadrant quad;
  double c = 0.0;
};

/// rank(B_F) for the family's algebra; equals dim of the orbit through f.
int orbit_dimension(const FamilyId& id, const Covector& f);

/// Orbit classification per the maximal-dimension orbit conditions of the
/// five studied families. Throws InvalidFamily otherwise.
OrbitClass classify(const FamilyId& id, const Covector& f);

/// The leaf invariant of the five studied families:
///   G2:      x2 - x3 x4 / x5
///   G3:      x2/x4 - x3/x5
///   G4^{00}: x3 - x2 x5 / x4
///   G9:      x2/x4 - x3/x5 + ln|x4|
///   G10^l:   x2/x4 - x3/x5 + ln(|x5| / |x4|^l)
/// Requires v in V (NotInV otherwise).
double invariant(const FamilyId& id, const Covector& v);

LeafId leaf_id(const FamilyId& id, const Covector& v);

/// True iff same quadrant and |c1 - c2| <= tol * (1 + max(|c1|, |c2|)).
bool same_leaf(const FamilyId& id, const Covector& v1, const Covector& v2, double tol = 1e-6);

/// n coadjoint images of f under U drawn i.i.d. uniform in [-2,2]^7 from
/// the seeded generator. Deterministic given the seed. Exponential
/// families only.
std::vector<Covector> sample_orbit(const FamilyId& id, const Covector& f, int n,
                                   std::uint64_t seed);

}  // namespace g52

#endif
