#pragma once

// Brute-force reference computations. These deliberately avoid the
// production algorithms they are compared against.

#include <map>
#include <vector>

#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/twoval.hpp"

namespace bipolar::oracles {

// Morphisms of parts by exhaustive assignment of objects and arrows.
long long hom_count(const Part& p, const Part& q);

// Components of the pullback, by union-find over pairs of objects.
int tensor_size(const Part& p, const Part& q);

// ∫^x Ax × Dx for a contravariant a and covariant d.
int coend_size(const Presheaf& a, const Presheaf& d);

// Natural transformations by trying every family of component functions.
long long nat_count(const Presheaf& a, const Presheaf& b);

long long power(long long base, long long exp);

// (Lan_f D)y as the colimit of D over the comma category f/y, with its
// induced transitions; D covariant.
Presheaf lan_colimit(const FinFunctor& f, const Presheaf& d);
// (Ran_f D)y as compatible families over y/f; D covariant.
Presheaf ran_limit(const FinFunctor& f, const Presheaf& d);

// Intersection of all cosieves (up) or sieves (down) containing p, found by
// listing every subset.
Subset least_closed_superset(const Poset& x, const Subset& p, Direction dir);
// Union of all cosieves (up) or sieves (down) inside p.
Subset greatest_closed_subset(const Poset& x, const Subset& p, Direction dir);

// Graph morphisms g -> h by backtracking over node images.
long long graph_hom_count(const FinGraph& g, const FinGraph& h);
// The categorical product of graphs; nodes "(v,w)", edges "(e,f)".
FinGraph graph_product(const FinGraph& g, const FinGraph& h);

// The reflection in endomaps as the unary algebra presented by f(v) = w for
// each edge v -> w: congruence closure on the subterms, then free completion.
SymbolicEndomap presented_endomap(const FinGraph& g);
// Walks of the given length ending at a node with an infinite continuation.
long long live_walks(const FinGraph& g, int length);

// The permutation a acting on explicit points, quotiented by x ~ σⁿx
// (reflect) or restricted to the fixed points of σⁿ (coreflect).
CycleSum zn_action(const CycleSum& a, int n, Transfer dir);

}  // namespace bipolar::oracles
