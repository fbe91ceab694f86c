#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipolar/fibrations.hpp"
#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"
#include "bipolar/parts.hpp"

namespace bipolar {

// Returns the least n0 >= 1 with f^(n0+1) = f^n0, or nullopt when the powers cycle.
std::optional<int> eventually_idempotent(const FinCat& c, int f);  // throws NotEndo
// f^n0 for an eventually idempotent f.
int idempotent_power(const FinCat& c, int f);

struct FamilyMember {
  std::string name;
  Presheaf presheaf;  // contravariant members are tested as dfs, covariant ones as dofs
};

// ↓x, ↑x, ↓e, ↑e for every non-identity idempotent e, and Γ★S as both a df
// and a dof for |S| = 0, 1, 2.
std::vector<FamilyMember> default_family(const CatPtr& base);

struct BiuniversalWitness {
  Part part;
  int u = -1;  // class in tensor(part, part)
  std::string u_name;
  std::vector<std::string> checked_family;
};

// For a df A: α ↦ ten(α, p)u is a bijection hom(p, A) -> ten(A, p); for a dof
// D: α ↦ ten(p, α)u is a bijection hom(p, D) -> ten(p, D).
bool is_biuniversal(const Part& p, const TensorSet& pp, int u, const Presheaf& member);
std::optional<BiuniversalWitness> atom_check(const Part& p, const std::vector<FamilyMember>& family);
std::optional<BiuniversalWitness> atom_check(const Part& p);  // default family

// Objects are idempotents (named by the arrow), arrows f: (x,e) -> (y,e')
// with f∘e = f = e'∘f are named "<e,f,e'>".
struct KaroubiCat {
  CatPtr cat;
  FinFunctor embedding;
  std::vector<int> idempotent_of;  // object -> idempotent arrow of the base
  std::vector<int> arrow_of;       // arrow -> arrow of the base
};

KaroubiCat karoubi(const CatPtr& x);

// Every idempotent e factors as i∘r with r∘i an identity.
bool idempotents_split(const FinCat& c, std::string* witness = nullptr);
bool is_equivalence(const FinFunctor& f);

struct RetractWitness {
  NatTrans section;     // ↑e -> ↑x
  NatTrans retraction;  // ↑x -> ↑e
};

// The reflection of the idempotent part e on the given side, presented as
// a retract of the representable at src(e) splitting -∘e (or e∘- when open).
Presheaf idempotent_atom(const CatPtr& base, int e, Side side);
std::optional<RetractWitness> retract_of_representable(const CatPtr& base, int e, Side side);

// The class of ten(↓e, ↑e) named by e itself.
struct AtomicPair {
  int idempotent;
  Presheaf down, up;
  TensorSet pairing;  // tensor(elements(down), elements(up))
  int u;
};

AtomicPair atomic_pair(const CatPtr& base, int e);

// σ_{e,e'}: hom(↓e, ↓e') -> hom(↑e', ↑e) via ten(α, ↑e)u_e = ten(↓e', σα)u_e'.
class DualitySigma {
 public:
  explicit DualitySigma(const CatPtr& base);
  const std::vector<AtomicPair>& pairs() const { return pairs_; }
  const std::vector<NatTrans>& down_homs(int i, int j) const { return down_[i][j]; }
  const std::vector<NatTrans>& up_homs(int j, int i) const { return up_[j][i]; }
  // Index into up_homs(j, i) of σ applied to down_homs(i, j)[k].
  int sigma(int i, int j, int k) const { return sigma_[i][j][k]; }
  // Bijective, σ(id) = id and σ(β∘α) = σ(α)∘σ(β) on every pair.
  bool functorial(std::string* witness = nullptr) const;

 private:
  CatPtr base_;
  std::vector<AtomicPair> pairs_;
  std::vector<std::vector<std::vector<NatTrans>>> down_, up_;
  std::vector<std::vector<std::vector<int>>> sigma_;
};

// A★x = Nat(A, ↓x) for contravariant A; D#x = Nat(D, ↑x) for covariant D.
Presheaf isbell_conjugate(const Presheaf& a);
// (A, D) with A contravariant and D covariant, A ≅ D# and D ≅ A★.
bool is_dedekind_cut(const Presheaf& a, const Presheaf& d);

// Elements of Dx fixed by D(e), x = src(e).
std::vector<std::string> evaluate_at_atom(const CatPtr& base, int e, const Presheaf& d);

// A′(x,e) = fixed set of A(e); arrows act by restriction.
Presheaf extend_to_karoubi(const KaroubiCat& k, const Presheaf& a);

}  // namespace bipolar
