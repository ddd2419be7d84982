#include "g52/orbits.hpp"

#include <cmath>

#include "g52/exp_action.hpp"
#include "g52/sampling.hpp"

namespace g52 {

bool in_foliated_manifold(const Covector& v) {
  return std::abs(v.v[3]) > kEpsV && std::abs(v.v[4]) > kEpsV;
}

const char* orbit_kind_name(OrbitKind k) {
  switch (k) {
    case OrbitKind::TypeIHyperplane: return "TypeIHyperplane";
    case OrbitKind::TypeIIHypersurface: return "TypeIIHypersurface";
    default: return "NonGeneric";
  }
}

Quadrant quadrant(const Covector& v) {
  if (!in_foliated_manifold(v)) throw NotInV("quadrant undefined: |x4*| or |x5*| below 1e-12");
  return {v.v[3] > 0 ? +1 : -1, v.v[4] > 0 ? +1 : -1};
}

std::string quadrant_name(const Quadrant& q) {
  return std::string(1, q.s4 > 0 ? '+' : '-') + (q.s5 > 0 ? '+' : '-');
}

int orbit_dimension(const FamilyId& id, const Covector& f) {
  return skew_rank(kirillov_form(build_algebra(id), f));
}

OrbitClass classify(const FamilyId& id, const Covector& f) {
  if (!is_studied_family(id))
    throw InvalidFamily("orbit classification is tabulated only for G2, G3, G4^{00}, G9, G10");
  const double a2 = f.a2(), a3 = f.a3(), a4 = f.a4(), a5 = f.a5();
  OrbitClass out;
  out.dimension = orbit_dimension(id, f);

  const bool hypersurface = a4 != 0.0 && a5 != 0.0;
  switch (id.tag) {
    case Tag::G2:
      if (hypersurface) {
        out.kind = OrbitKind::TypeIIHypersurface;
        out.detail = "a4*a5 != 0: degree-two hypersurface";
      } else if (a3 != 0.0 && a4 != 0.0 && a5 == 0.0) {
        out.kind = OrbitKind::TypeIHyperplane;
        out.detail = "a3*a4 != 0 = a5: part of {x5* = 0}";
      }
      break;
    case Tag::G4:
      if (hypersurface) {
        out.kind = OrbitKind::TypeIIHypersurface;
        out.detail = "a4*a5 != 0: degree-two hypersurface";
      } else if (a2 != 0.0 && a5 != 0.0 && a4 == 0.0) {
        out.kind = OrbitKind::TypeIHyperplane;
        out.detail = "a2*a5 != 0 = a4: part of {x4* = 0}";
      }
      break;
    default:  // G3, G9, G10
      if (hypersurface) {
        out.kind = OrbitKind::TypeIIHypersurface;
        out.detail = id.tag == Tag::G3 ? "a4*a5 != 0: degree-two hypersurface"
                                       : "a4*a5 != 0: transcendental hypersurface";
      } else if (a4 == 0.0 && a2 != 0.0 && a5 != 0.0) {
        out.kind = OrbitKind::TypeIHyperplane;
        out.detail = "a4 = 0 != a2*a5: part of {x4* = 0}";
      } else if (a5 == 0.0 && a3 != 0.0 && a4 != 0.0) {
        out.kind = OrbitKind::TypeIHyperplane;
        out.detail = "a5 = 0 != a3*a4: part of {x5* = 0}";
      }
      break;
  }
  return out;
}

double invariant(const FamilyId& id, const Covector& v) {
  if (!is_studied_family(id))
    throw InvalidFamily("leaf invariant defined only for G2, G3, G4^{00}, G9, G10");
  if (!in_foliated_manifold(v)) throw NotInV("point outside V = {x4* x5* != 0}");
  const double x2 = v.v[1], x3 = v.v[2], x4 = v.v[3], x5 = v.v[4];
  switch (id.tag) {
    case Tag::G2:
      return x2 - x3 * x4 / x5;
    case Tag::G3:
      return x2 / x4 - x3 / x5;
    case Tag::G4:
      return x3 - x2 * x5 / x4;
    case Tag::G9:
      return x2 / x4 - x3 / x5 + std::log(std::abs(x4));
    default:  // G10
      return x2 / x4 - x3 / x5 + std::log(std::abs(x5)) - id.lam1 * std::log(std::abs(x4));
  }
}

LeafId leaf_id(const FamilyId& id, const Covector& v) {
  return {id, quadrant(v), invariant(id, v)};
}

bool same_leaf(const FamilyId& id, const Covector& v1, const Covector& v2, double tol) {
  const LeafId l1 = leaf_id(id, v1);
  const LeafId l2 = leaf_id(id, v2);
  if (!(l1.quad == l2.quad)) return false;
  const double scale = 1.0 + std::max(std::abs(l1.c), std::abs(l2.c));
  return std::abs(l1.c - l2.c) <= tol * scale;
}

std::vector<Covector> sample_orbit(const FamilyId& id, const Covector& f, int n,
                                   std::uint64_t seed) {
  validate(id);
  if (!is_exponential_tag(id.tag))
    throw NotExponentialFamily(to_string(id) + " is not exponential; cannot sample the orbit");
  Rng rng(seed);
  std::vector<Covector> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) out.push_back(coadjoint_point(id, f, random_element(rng)));
  return out;
}

}  // namespace g52
