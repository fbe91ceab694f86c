#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"
#include "bipolar/parts.hpp"

namespace bipolar {

enum class FibrationKind { df, dof, bifibration, neither };
const char* to_string(FibrationKind k);

struct Classification {
  std::optional<Presheaf> contra;  // present iff the part is a df
  std::optional<Presheaf> co;      // present iff the part is a dof
  bool df() const { return contra.has_value(); }
  bool dof() const { return co.has_value(); }
  FibrationKind kind() const;
};

// Extracted fibres are named by the total objects lying over each base object.
Classification classify_part(const Part& p);

Part opposite(const Part& p);

// closed targets dofs (covariant), open targets dfs (contravariant).
enum class Side { open, closed };
const char* to_string(Side s);
inline Variance variance_of(Side s) { return s == Side::closed ? Variance::co : Variance::contra; }

struct ReflectionResult {
  Presheaf presheaf;
  Elements elements;  // elements of `presheaf`
  // P -> elements for reflections, elements -> P for coreflections.
  PartMorphism unit;
};

// ↑P = Γ!(P/-) on the closed side, ↓P = Γ!(-/P) on the open side, with the
// transposition maps of the adjunction hom(reflection, D) ≅ hom(P, D).
class Reflector {
 public:
  Reflector(const Part& p, Side side);
  const ReflectionResult& result() const { return result_; }
  // φ: P -> elements(D) gives α: reflection -> D, α_x[(a, f)] = D(f)(φ a).
  NatTrans transpose(const Presheaf& d, const PartMorphism& phi) const;
  // α gives φ(a) = α_{πa}[(a, id)].
  PartMorphism untranspose(const Presheaf& d, const NatTrans& alpha) const;

 private:
  Side side_;
  Part work_;  // p, or its opposite for the open side
  std::vector<std::vector<int>> class_at_;  // [x][comma object] -> fibre index
  std::vector<Comma> commas_;
  ReflectionResult work_result_, result_;
};

// P↑ x = hom(↑x, P) on the closed side, P↓ x = hom(↓x, P) on the open side.
class Coreflector {
 public:
  Coreflector(const Part& p, Side side);
  const ReflectionResult& result() const { return result_; }
  // φ: elements(D) -> P gives α: D -> P↑, (α_x a)(f) = φ(D(f) a).
  NatTrans transpose(const Presheaf& d, const PartMorphism& phi) const;
  // α gives φ(a) = (α_x a)(id_x).
  PartMorphism untranspose(const Presheaf& d, const NatTrans& alpha) const;

 private:
  Side side_;
  Part work_;
  std::vector<Elements> reps_;                  // elements of ↑x
  std::vector<int> id_at_;                      // index of id_x in (↑x)(x)
  std::vector<std::vector<PartMorphism>> homs_;  // fibre at x
  std::vector<std::map<PartMorphism, int>> lookup_;
  ReflectionResult work_result_, result_;
};

ReflectionResult reflect(const Part& p, Side side);
ReflectionResult coreflect(const Part& p, Side side);

// Θ(x) sends a function Bx -> S_x to a function Ax -> S_x; functions are value vectors.
struct ContraFamily {
  std::vector<std::map<std::vector<int>, std::vector<int>>> at;
};

// The action of ¬α at the sample sets S_x of the given sizes: h -> h∘α_x.
ContraFamily negated_action(const Presheaf& a, const Presheaf& b, const NatTrans& alpha,
                            const std::vector<int>& sample_sizes);
// ¬α at the sets S_x = Bx used by the Yoneda argument.
ContraFamily contrapose(const Presheaf& a, const Presheaf& b, const NatTrans& alpha);
// Recovers α_x = Θ(x)(id_{Bx}); throws NotNatural naming the failing square.
NatTrans contrapose_inverse(const Presheaf& a, const Presheaf& b, const ContraFamily& theta);

struct GroupoidReflection {
  CatPtr groupoid;
  FinFunctor quotient;  // base -> groupoid
};

bool is_groupoid(const FinCat& c);
GroupoidReflection groupoid_reflection(const CatPtr& x, long long budget = kDefaultPathBudget);

// (↕P)x = ten(↕x, P) where ↕x is G_X(-, x) pulled back to the base. The
// result is covariant with invertible transitions.
Presheaf clopen_reflect(const Part& p, long long budget = kDefaultPathBudget);

}  // namespace bipolar
