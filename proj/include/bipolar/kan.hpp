#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipolar/atoms.hpp"
#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"
#include "bipolar/parts.hpp"

namespace bipolar {

// (f★D)x = D(fx)
Presheaf substitute(const FinFunctor& f, const Presheaf& d);

// f_!: parts over dom -> parts over cod, by composing with f.
Part post_compose(const FinFunctor& f, const Part& p);
// f★: parts over cod -> parts over dom, by pullback along f.
Part pullback(const FinFunctor& f, const Part& q);

struct ContinuousMap {
  FinFunctor f;
  Part lower(const Part& p) const { return post_compose(f, p); }
  Part upper(const Part& q) const { return pullback(f, q); }
};

// (∃_f D)y = ten(f★↓y, D) and (∀_f D)y = hom(f★↑y, D) for covariant D;
// contravariant D is handled on the opposite categories.
Presheaf lan(const FinFunctor& f, const Presheaf& d);
Presheaf ran(const FinFunctor& f, const Presheaf& d);

struct FrobeniusReport {
  bool iso = true;
  std::string witness;
  PartMorphism phi;  // f_!(P × f★Q) -> f_!P × Q
};

FrobeniusReport frobenius_check(const FinFunctor& f, const Part& p, const Part& q);

struct BaseMap {
  KaroubiCat dom, cod;
  FinFunctor map;  // e -> f(e), <e,g,e'> -> <fe,fg,fe'>
};

BaseMap base_map(const FinFunctor& f);

// Transports the biuniversal class of an atom over dom to f_!(atom) and
// checks it against the default family of the codomain.
std::optional<BiuniversalWitness> push_biuniversal(const FinFunctor& f, const BiuniversalWitness& w);

std::vector<FinFunctor> all_functors(const CatPtr& dom, const CatPtr& cod);

}  // namespace bipolar
