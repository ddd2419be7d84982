#ifndef G52_FAMILIES_HPP
#define G52_FAMILIES_HPP

#include <string>
#include <vector>

#include "g52/lie_core.hpp"

namespace g52 {

enum class Tag {
  G1, G2, G3, G4, G5, G6, G7, G8,
  G9, G10, G11, G12, G13, G14, G15, G16,
};

/// Number of real parameters carried by a tag (0, 1 or 2).
int param_arity(Tag tag);

const char* tag_name(Tag tag);

/// One of the sixteen families, with its parameters where applicable.
/// lam1 holds lambda for one-parameter tags; (lam1, lam2) holds
/// (lambda1, lambda2) for G4 and G14.
struct FamilyId {
  Tag tag = Tag::G2;
  double lam1 = 0.0;
  double lam2 = 0.0;

  FamilyId() = default;
  explicit FamilyId(Tag t) : tag(t) {}
  FamilyId(Tag t, double lambda) : tag(t), lam1(lambda) {}
  FamilyId(Tag t, double lambda1, double lambda2) : tag(t), lam1(lambda1), lam2(lambda2) {}

  bool operator==(const FamilyId&) const = default;
};

/// Throws InvalidParams when the parameter constraints are violated:
/// G1: lambda in {0,1}; G4: (l1,l2) != (-1,0); G13, G14 (lambda2), G16: >= 0.
void validate(const FamilyId& id);

/// Canonical spec string, e.g. "G10:lambda=0.5".
std::string to_string(const FamilyId& id);

/// Parses the CLI grammar TAG[":" key "=" value {"," key "=" value}].
/// Throws ParseError with the offending position.
FamilyId parse_family(const std::string& spec);

/// Operator blocks of the family: a_X, a_Y (transposed adjoint restrictions
/// to the nilradical) and the [X, Y] coefficient vector.
struct FamilySpec {
  Mat5 aX = Mat5::Zero();
  Mat5 aY = Mat5::Zero();
  Vec5 xy = Vec5::Zero();
};

FamilySpec family_spec(const FamilyId& id);

/// Materializes the structure constants: nilradical brackets
/// [X1,X2]=X4, [X1,X3]=X5, plus [X,Xj], [Y,Xj] from a_X, a_Y and [X,Y].
StructureConstants build_algebra(const FamilyId& id);

/// Dimension of [G, G], computed as the rank of the span of all basis
/// brackets (4 or 5 for every family).
int derived_ideal_dimension(const FamilyId& id);

struct FamilyTemplate {
  Tag tag;
  int arity;
  std::string constraint;  // human-readable parameter constraint, empty if none
};

/// The sixteen tags with parameter arity and constraints.
std::vector<FamilyTemplate> list_families();

/// True for G2, G3, G4^{00}, G9, G10^lambda: the families whose generic
/// orbit geometry and foliations are implemented in closed form.
bool is_studied_family(const FamilyId& id);

/// True for G1..G12 (exponential groups), false for G13..G16.
bool is_exponential_tag(Tag tag);

}  // namespace g52

#endif
