#ifndef G52_REFERENCE_TABLES_HPP
#define G52_REFERENCE_TABLES_HPP

#include "g52/families.hpp"
#include "g52/lie_core.hpp"

namespace g52::reference {

/// Transcribed closed-form ad_U matrix for each family, used as ground
/// truth when validating build_algebra and the a_X/a_Y transpose
/// convention. Any mismatch is reported per family and entry by the tests.
Mat7 table_ad(const FamilyId& id, const AlgebraElement& u);

/// Transcribed closed-form B_F matrix for the five studied families
/// (G2, G3, G4^{00}, G9, G10^lambda). Throws InvalidFamily otherwise.
Mat7 table_kirillov(const FamilyId& id, const Covector& f);

/// The per-family condition equivalent to rank(B_F) = 6, for the five
/// studied families. Exact comparisons against 0 by design: the rank drop
/// is structural, not numerical.
bool rank6_predicate(const FamilyId& id, const Covector& f);

}  // namespace g52::reference

#endif
