#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bipolar/catalog.hpp"
#include "bipolar/part.hpp"

namespace bipolar::testing {

// Transitions are given by arrow name; identities may be omitted.
inline Presheaf make_presheaf(const CatPtr& base, Variance v, std::vector<std::vector<std::string>> fibres,
                              const std::map<std::string, std::vector<int>>& trans) {
  const FinCat& c = *base;
  std::vector<std::vector<int>> t(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    auto it = trans.find(c.arrow(f));
    if (it != trans.end()) {
      t[f] = it->second;
    } else {
      t[f].resize(fibres[c.src(f)].size());
      std::iota(t[f].begin(), t[f].end(), 0);
    }
  }
  return Presheaf(base, v, std::move(fibres), std::move(t));
}

// D on 2: D0 = {u}, D1 = {v, w}, D(a): u -> v
inline Presheaf sample_d() {
  return make_presheaf(catalog::base("2"), Variance::co, {{"u"}, {"v", "w"}}, {{"a", {0}}});
}

// A on 2: A0 = {p, q}, A1 = {b}, A(a): b -> p
inline Presheaf sample_a() {
  return make_presheaf(catalog::base("2"), Variance::contra, {{"p", "q"}, {"b"}}, {{"a", {0}}});
}

}  // namespace bipolar::testing
