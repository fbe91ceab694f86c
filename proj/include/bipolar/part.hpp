#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bipolar/fincat.hpp"

namespace bipolar {

// An object of Cat/X: a total category with a projection functor to the base.
class Part {
 public:
  Part() = default;
  Part(CatPtr base, CatPtr total, std::vector<int> obj_proj, std::vector<int> arr_proj, bool check = true);
  Part(FinFunctor proj);  // NOLINT: a functor into the base is a part

  const CatPtr& base() const { return base_; }
  const CatPtr& total() const { return total_; }
  int over(int a) const { return obj_[a]; }       // object of the base under total object a
  int over_arrow(int u) const { return arr_[u]; }  // arrow of the base under total arrow u
  const std::vector<int>& obj_proj() const { return obj_; }
  const std::vector<int>& arr_proj() const { return arr_; }
  FinFunctor proj() const;
  std::vector<int> fibre(int x) const;  // total objects over x

 private:
  CatPtr base_, total_;
  std::vector<int> obj_, arr_;
};

// A functor between totals commuting with the projections. The domain and
// codomain parts are carried by whatever produced the morphism.
struct PartMorphism {
  std::vector<int> obj;
  std::vector<int> arr;
  auto operator<=>(const PartMorphism&) const = default;
};

PartMorphism compose(const PartMorphism& g, const PartMorphism& f);
PartMorphism identity_morphism(const Part& p);
// Throws NotFunctor / BaseMismatch when `m` is not a morphism of parts.
void check_morphism(const Part& dom, const Part& cod, const PartMorphism& m);
void require_same_base(const Part& p, const Part& q);

enum class Variance { contra, co };

inline Variance flip(Variance v) { return v == Variance::co ? Variance::contra : Variance::co; }
const char* to_string(Variance v);

// A set-valued functor on the base. For an arrow f: x -> y, trans(f) maps
// fibre(x) -> fibre(y) when covariant and fibre(y) -> fibre(x) when contravariant.
class Presheaf {
 public:
  Presheaf() = default;
  // Fibres are sorted by name; transitions are given against the input order.
  Presheaf(CatPtr base, Variance variance, std::vector<std::vector<std::string>> fibres,
           std::vector<std::vector<int>> trans, bool check = true);

  const CatPtr& base() const { return base_; }
  Variance variance() const { return variance_; }
  int size(int x) const { return static_cast<int>(fibres_[x].size()); }
  const std::vector<std::string>& fibre(int x) const { return fibres_[x]; }
  const std::vector<std::vector<std::string>>& fibres() const { return fibres_; }
  const std::vector<int>& trans(int f) const { return trans_[f]; }
  const std::vector<std::vector<int>>& transitions() const { return trans_; }
  int act(int f, int s) const { return trans_[f][s]; }
  // Source and target of trans(f) as objects of the base.
  int trans_src(int f) const;
  int trans_tgt(int f) const;
  int find(int x, const std::string& element) const;
  std::vector<int> sizes() const;
  long long total_size() const;

  // The same data read as a presheaf on the opposite base.
  Presheaf on_opposite(const CatPtr& base_op) const;

  bool operator==(const Presheaf& other) const;

 private:
  CatPtr base_;
  Variance variance_ = Variance::co;
  std::vector<std::vector<std::string>> fibres_;
  std::vector<std::vector<int>> trans_;
};

// comps[x][s] is the image of element s of the source fibre at x.
struct NatTrans {
  std::vector<std::vector<int>> comps;
  auto operator<=>(const NatTrans&) const = default;
};

bool is_natural(const Presheaf& a, const Presheaf& b, const NatTrans& t, int* bad_arrow = nullptr);
std::vector<NatTrans> natural_transformations(const Presheaf& a, const Presheaf& b);
NatTrans compose(const NatTrans& g, const NatTrans& f);
NatTrans identity_nat(const Presheaf& a);
bool isomorphic(const Presheaf& a, const Presheaf& b);

struct Elements {
  Part part;
  Variance variance = Variance::co;
  std::vector<std::pair<int, int>> element_of;  // total object -> (x, s)
  std::vector<std::vector<int>> object_at;      // [x][s] -> total object
  std::vector<std::vector<int>> lift;           // [f][s] -> total arrow over f at s (lifting position)
};

Elements elements_of(const Presheaf& p);
Part elements(const Presheaf& p);
// Presheaf morphisms correspond to part morphisms between the element parts.
PartMorphism to_part_morphism(const Elements& a, const Elements& b, const NatTrans& t);
NatTrans to_nat_trans(const Elements& a, const Elements& b, const PartMorphism& m);

namespace presheaves {
Presheaf representable(const CatPtr& base, int x, Variance v);  // ↓x = X(-,x) or ↑x = X(x,-)
Presheaf constant(const CatPtr& base, const std::vector<std::string>& s);
Presheaf terminal(const CatPtr& base);
Presheaf empty(const CatPtr& base, Variance v);
Presheaf product(const Presheaf& a, const Presheaf& b);
Presheaf sum(const Presheaf& a, const Presheaf& b);
// All presheaves of the given variance whose fibres have at most `max_size` elements.
std::vector<Presheaf> enumerate(const CatPtr& base, Variance v, int max_size);
}  // namespace presheaves

namespace parts {
Part identity(const CatPtr& base);
Part object(const CatPtr& base, int x);            // the one-object part at x
Part arrow(const CatPtr& base, int f);             // 2 -> X picking f (f not an identity)
Part idempotent(const CatPtr& base, int e);        // {1, e} -> X
Part collapse(const CatPtr& base, int x);          // 2 -> X with both ends at x
Part total_over_terminal(const FinCat& c);         // c -> 1
Part empty(const CatPtr& base);
Part sum(const Part& p, const Part& q);
}  // namespace parts

}  // namespace bipolar
