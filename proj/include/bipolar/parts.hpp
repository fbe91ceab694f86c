#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bipolar/part.hpp"

namespace bipolar {

// Pullback of two parts over a common base.
struct FibreProduct {
  Part part;
  PartMorphism to_p, to_q;
  std::vector<std::pair<int, int>> pair_of;  // total object -> (a, b)
  std::map<std::pair<int, int>, int> object_of;

  int find(int a, int b) const {
    auto it = object_of.find({a, b});
    return it == object_of.end() ? -1 : it->second;
  }
};

FibreProduct fibre_product(const Part& p, const Part& q);

enum class CommaSide { over, under };

// P/x has objects (a, f: πa -> x); x/P has objects (a, f: x -> πa).
struct Comma {
  FinCat cat;
  std::vector<std::pair<int, int>> object_of;  // object -> (total object, base arrow)
  std::map<std::pair<int, int>, int> index;

  int find(int a, int f) const {
    auto it = index.find({a, f});
    return it == index.end() ? -1 : it->second;
  }
};

Comma comma(const Part& p, int x, CommaSide side);

std::vector<PartMorphism> hom_over(const Part& p, const Part& q);

struct TensorSet {
  FibreProduct product;
  ComponentPartition classes;

  int size() const { return classes.size(); }
  int class_of(int a, int b) const {
    int o = product.find(a, b);
    return o < 0 ? -1 : classes.class_of[o];
  }
  std::pair<int, int> representative(int c) const { return product.pair_of[classes.rep(c)]; }
};

TensorSet tensor(const Part& p, const Part& q);

// ten(α, β) on classes: [<l, r>] -> [<αl, βr>].
std::vector<int> tensor_map(const TensorSet& from, const TensorSet& to, const PartMorphism& alpha,
                            const PartMorphism& beta);

constexpr int kFunctionSetLimit = 6;

// Name of the function [0,n) -> S given by `h`, e.g. "[b,a]".
std::string function_name(const std::vector<int>& h, const std::vector<std::string>& s);

Presheaf negation(const Presheaf& a, const std::vector<std::string>& s);
Part negation(const Part& a, const std::vector<std::string>& s);
Presheaf exp_mixed(const Presheaf& a, const Presheaf& d);
Part exp_mixed(const Part& a, const Part& d);

struct LiftingReport {
  bool bijective = true;
  std::string witness;
};

// Checks that the canonical map Pg ⊗ Pf -> P(g∘f) is bijective for all
// composable g, f of the base.
LiftingReport factorization_lifting(const Part& p);

}  // namespace bipolar
