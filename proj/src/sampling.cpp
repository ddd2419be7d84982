#include "g52/sampling.hpp"

namespace g52 {

AlgebraElement random_element(Rng& rng, double lo, double hi) {
  AlgebraElement u;
  for (int i = 0; i < 7; ++i) u.v[i] = rng.uniform(lo, hi);
  return u;
}

Covector random_covector(Rng& rng, double lo, double hi) {
  Covector f;
  for (int i = 0; i < 7; ++i) f.v[i] = rng.uniform(lo, hi);
  return f;
}

Covector random_structured_covector(Rng& rng) {
  Covector f;
  for (int i = 0; i < 7; ++i) {
    const bool zero = rng.chance(1.0 / 3.0);
    const double value = rng.uniform(-2.0, 2.0);
    f.v[i] = zero ? 0.0 : value;
  }
  return f;
}

Covector random_generic_covector(Rng& rng) {
  Covector f = random_covector(rng);
  f.v[3] = (rng.chance(0.5) ? 1.0 : -1.0) * rng.uniform(0.2, 2.0);
  f.v[4] = (rng.chance(0.5) ? 1.0 : -1.0) * rng.uniform(0.2, 2.0);
  return f;
}

Covector random_v_point(Rng& rng, double mag_lo, double mag_hi) {
  Covector v = random_covector(rng, -3.0, 3.0);
  v.v[3] = (rng.chance(0.5) ? 1.0 : -1.0) * rng.uniform(mag_lo, mag_hi);
  v.v[4] = (rng.chance(0.5) ? 1.0 : -1.0) * rng.uniform(mag_lo, mag_hi);
  return v;
}

FamilyId random_family(Tag tag, Rng& rng) {
  switch (param_arity(tag)) {
    case 0:
      return FamilyId(tag);
    case 1: {
      double lo = -2.0;
      if (tag == Tag::G13 || tag == Tag::G16) lo = 0.0;
      double lambda = rng.uniform(lo, 2.0);
      if (tag == Tag::G1) lambda = rng.chance(0.5) ? 0.0 : 1.0;
      return FamilyId(tag, lambda);
    }
    default: {
      double l1 = rng.uniform(-2.0, 2.0);
      const double lo2 = tag == Tag::G14 ? 0.0 : -2.0;
      double l2 = rng.uniform(lo2, 2.0);
      if (tag == Tag::G4 && l1 == -1.0 && l2 == 0.0) l1 = 0.0;
      return FamilyId(tag, l1, l2);
    }
  }
}

}  // namespace g52
