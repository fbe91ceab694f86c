#include <random>

#include "bipolar/atoms.hpp"
#include "bipolar/catalog.hpp"
#include "bipolar/checks.hpp"
#include "bipolar/document.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/kan.hpp"
#include "bipolar/oracles.hpp"
#include "bipolar/parts.hpp"
#include "bipolar/twoval.hpp"

namespace bipolar::checks {

namespace {

const std::vector<std::string> kSmallBases{"1", "2", "a<b", "Z2", "{1,e}", "discrete-2"};

std::vector<std::string> value_set(int k) {
  std::vector<std::string> s;
  for (int i = 0; i < k; ++i) s.push_back("s" + std::to_string(i));
  return s;
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

FinGraph random_graph(std::mt19937& rng, int nodes, int edges) {
  std::vector<std::string> ns;
  for (int i = 0; i < nodes; ++i) ns.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < edges; ++i) es.push_back({"e" + std::to_string(i), ns[pick(rng)], ns[pick(rng)]});
  return FinGraph::make(ns, es);
}

// Directed paths of positive length, counted by length.
long long path_count(const FinGraph& g) {
  std::vector<long long> ending(g.node_count(), 0);
  long long total = 0;
  for (int len = 1; len <= g.node_count(); ++len) {
    std::vector<long long> next(g.node_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) next[g.tgt(e)] += (len == 1 ? 1 : ending[g.src(e)]);
    ending = next;
    for (long long c : ending) total += c;
  }
  return total;
}

void catalog_valid(Probe& p) {
  for (const auto& name : catalog::base_names()) {
    auto c = catalog::base(name);
    p.expect(validate_category(c->spec()).ok(), name + " satisfies the category laws");
  }
  for (const auto& name : catalog::graph_names()) p.expect(catalog::graph(name).node_count() >= 1, name);
}

void fincat_properties(Probe& p) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    int comps = components(*base).size();
    for (int k = 0; k <= 3; ++k) {
      auto part = elements(presheaves::constant(base, value_set(k)));
      p.expect(components(*part.total()).size() == k * comps, name + ": components of a constant");
    }
    for (Variance v : {Variance::co, Variance::contra}) {
      for (const auto& d : presheaves::enumerate(base, v, 2)) {
        auto c = classify_part(elements(d));
        const auto& got = v == Variance::co ? c.co : c.contra;
        p.expect(got.has_value() && isomorphic(*got, d), name + ": elements round trip");
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    auto g = graphs::chain(n);
    p.expect(free_category(g).arrow_count() == n + path_count(g), "free category on a chain");
  }
  for (const auto& name : {"D", "A", "C3", "C5"}) {
    auto g = catalog::graph(name);
    FinCat f = free_category(g);
    p.expect(f.arrow_count() == g.node_count() + path_count(g), std::string("free category on ") + name);
    p.expect(components(f).size() == components(g).size(), std::string("components of ") + name);
  }
}

void parts_properties(Probe& p) {
  for (const auto& name : kSmallBases) {
    auto base = catalog::base(name);
    auto ps = catalog::standard_parts(base);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        auto ab = tensor(a.part, b.part), ba = tensor(b.part, a.part);
        p.expect(ab.size() == ba.size(), name + ": tensor symmetry");
        p.expect(ab.size() == oracles::tensor_size(a.part, b.part), name + ": tensor oracle");
        p.expect(static_cast<long long>(hom_over(a.part, b.part).size()) == oracles::hom_count(a.part, b.part),
                 [&] { return name + ": hom " + a.name + " -> " + b.name; });
        for (const auto& c : ps) {
          if (c.part.total()->object_count() > 2) continue;
          p.expect(tensor(parts::sum(a.part, c.part), b.part).size() == ab.size() + tensor(c.part, b.part).size(),
                   name + ": tensor preserves sums");
        }
      }
    }
    std::vector<Presheaf> dfs = presheaves::enumerate(base, Variance::contra, 1);
    for (int x = 0; x < base->object_count(); ++x) dfs.push_back(presheaves::representable(base, x, Variance::contra));
    for (const auto& a : dfs) {
      Part pa = elements(a);
      p.expect(factorization_lifting(pa).bijective, name + ": factorization lifting");
      for (int k = 1; k <= 3; ++k) {
        Part neg = elements(negation(a, value_set(k)));
        for (const auto& q : ps) {
          p.expect(static_cast<long long>(hom_over(q.part, neg).size()) ==
                       oracles::power(k, oracles::tensor_size(q.part, pa)),
                   name + ": negation adjunction");
        }
      }
      for (int x = 0; x < base->object_count(); ++x) {
        Presheaf d = presheaves::representable(base, x, Variance::co);
        Part e = elements(exp_mixed(a, d));
        for (const auto& q : ps) {
          p.expect(hom_over(fibre_product(q.part, pa).part, elements(d)).size() == hom_over(q.part, e).size(),
                   name + ": currying");
        }
      }
    }
  }
}

void fibration_properties(Probe& p) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      for (Side side : {Side::open, Side::closed}) {
        auto r = reflect(np.part, side), k = coreflect(np.part, side);
        auto ok = [&](const Part& dom, const Part& cod, const PartMorphism& m) {
          try {
            check_morphism(dom, cod, m);
            return true;
          } catch (const Error&) {
            return false;
          }
        };
        p.expect(ok(np.part, r.elements.part, r.unit), [&] { return name + ": unit of " + np.name; });
        p.expect(ok(k.elements.part, np.part, k.unit), [&] { return name + ": counit of " + np.name; });
      }
    }
    for (Side side : {Side::open, Side::closed}) {
      for (const auto& d : presheaves::enumerate(base, variance_of(side), 2)) {
        p.expect(isomorphic(reflect(elements(d), side).presheaf, d), name + ": reflection fixes fibrations");
        p.expect(isomorphic(coreflect(elements(d), side).presheaf, d), name + ": coreflection fixes fibrations");
      }
    }
    if (is_groupoid(*base)) {
      for (const auto& a : presheaves::enumerate(base, Variance::contra, 2))
        p.expect(classify_part(elements(a)).kind() == FibrationKind::bifibration, name + ": Boolean");
    }
  }
}

void atom_properties(Probe& p) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto k = karoubi(base);
    std::string witness;
    p.expect(idempotents_split(*k.cat, &witness), [&] { return name + ": envelope splits " + witness; });
    p.expect(is_equivalence(k.embedding) == idempotents_split(*base), name + ": embedding");
    DualitySigma sigma(base);
    p.expect(sigma.functorial(&witness), [&] { return name + ": sigma " + witness; });
    auto ps = presheaves::enumerate(base, Variance::co, 1);
    for (int e : catalog::idempotents(*base)) {
      for (const auto& a : ps) {
        auto ea = evaluate_at_atom(base, e, a).size();
        for (const auto& b : ps) {
          auto eb = evaluate_at_atom(base, e, b).size();
          p.expect(evaluate_at_atom(base, e, presheaves::product(a, b)).size() == ea * eb, name + ": ev of products");
          p.expect(evaluate_at_atom(base, e, presheaves::sum(a, b)).size() == ea + eb, name + ": ev of sums");
        }
      }
    }
    for (const auto& a : ps) {
      Presheaf ext = extend_to_karoubi(k, a);
      for (int o = 0; o < k.cat->object_count(); ++o)
        p.expect(ext.size(o) == static_cast<int>(evaluate_at_atom(base, k.idempotent_of[o], a).size()),
                 name + ": extension to the envelope");
    }
  }
}

void kan_properties(Probe& p) {
  const std::vector<std::string> bases{"1", "2", "{1,e}", "Z2", "split"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        std::string where = xn + "->" + yn;
        for (const auto& d : presheaves::enumerate(f.dom(), Variance::co, 2)) {
          p.expect(isomorphic(lan(f, d), reflect(post_compose(f, elements(d)), Side::closed).presheaf),
                   where + ": lan is the reflection of the pushforward");
        }
        auto bf = base_map(f);
        for (const auto& zn : bases) {
          for (const auto& g : all_functors(f.cod(), catalog::base(zn))) {
            auto composite = compose(base_map(g).map, bf.map);
            auto direct = base_map(compose(g, f)).map;
            p.expect(composite.obj_map() == direct.obj_map() && composite.arr_map() == direct.arr_map(),
                     where + ": base map is functorial");
          }
        }
        for (int e : catalog::idempotents(*f.dom())) {
          auto w = atom_check(parts::idempotent(f.dom(), e));
          p.expect(w && push_biuniversal(f, *w).has_value(), where + ": atoms are preserved");
        }
      }
    }
  }
}

void twoval_properties(Probe& p) {
  for (int n = 0; n <= 4; ++n) {
    auto subsets = all_subsets(n);
    for (const auto& x : all_posets(n)) {
      for (const auto& s : subsets) {
        for (auto dir : {Direction::up, Direction::down}) {
          auto r = alexandrov_reflect(x, s, dir), c = alexandrov_coreflect(x, s, dir);
          p.expect(contained(s, r) && contained(c, s), "reflection is inflationary, coreflection deflationary");
          p.expect(alexandrov_reflect(x, r, dir) == r && alexandrov_coreflect(x, c, dir) == c, "idempotence");
        }
        for (const auto& q : subsets) {
          bool a = meets(alexandrov_reflect(x, s, Direction::down), q);
          bool b = meets(alexandrov_reflect(x, s, Direction::down), alexandrov_reflect(x, q, Direction::up));
          bool c = meets(s, alexandrov_reflect(x, q, Direction::up));
          p.expect(a == b && b == c, "two-valued coadjunction");
          if (is_sieve(x, s) && is_cosieve(x, q)) p.expect(is_cosieve(x, implication(x, s, q)), "implication is closed");
        }
        int count = 0;
        for (bool b : s) count += b;
        p.expect(two_valued_atom(x, s) == (count == 1), "atoms are singletons");
      }
    }
  }
}

void graph_properties(Probe& p) {
  std::mt19937 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto g = random_graph(rng, 1 + trial % 7, trial % 11);
    SymbolicEndomap expected;
    try {
      expected = oracles::presented_endomap(g);
    } catch (const Error&) {
      continue;
    }
    try {
      p.expect(loop_reflect(g).canonical_form() == expected.canonical_form(), "loop reflection vs presented algebra");
      ++compared;
    } catch (const Error& e) {
      p.expect(false, std::string("loop reflection raised ") + e.what());
    }
  }
  p.expect(compared > 100, "enough comparable graphs");
  for (const auto& name : catalog::graph_names()) {
    auto g = catalog::graph(name);
    int n = default_truncation(g);
    p.expect(isomorphic(loop_reflect_at(g, n), loop_reflect_at(g, n + 1)), name + ": stable truncation");
  }
  std::vector<CycleSum> sums{{}, {{1, 1}}, {{2, 1}, {3, 1}}, {{1, 2}, {4, 1}}, {{6, 1}}};
  for (const auto& a : sums) {
    auto g = cycle_graph(a);
    p.expect(isomorphic(loop_reflect(g), SymbolicEndomap{g, 0}), "cycle sums are fixed by reflection");
    p.expect(cycle_sum_of(chains(g).endomap) == a, "cycle sums are fixed by chains");
    for (const auto& b : sums) {
      for (const auto& c : sums) {
        CycleSum bc = b;
        for (auto [k, m] : c) bc[k] += m;
        p.expect(cycle_pairing(a, bc).ten == cycle_pairing(a, b).ten + cycle_pairing(a, c).ten, "ten additivity");
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= 12; ++k) {
      CycleSum a{{k, 1}};
      for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        CycleSum b{{d, 1}};
        p.expect(cycle_hom(zn_transfer(a, n, Transfer::reflect), b) == cycle_hom(a, b), "reflect adjunction");
        p.expect(cycle_hom(b, a) == cycle_hom(b, zn_transfer(a, n, Transfer::coreflect)), "coreflect adjunction");
      }
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 1 + trial % 6, trial % 8);
    int n = g.node_count();
    long long shortw = oracles::live_walks(g, 2 * n + 2), longw = oracles::live_walks(g, 4 * n + 4);
    try {
      p.expect(static_cast<long long>(chains(g).lassos.size()) == longw && shortw == longw, "chains vs live walks");
    } catch (const Error& e) {
      p.expect(e.kind() == ErrorKind::UncountableChains && longw > shortw, "uncountable chains grow without bound");
    }
  }
}

void document_round_trip(Probe& p) {
  auto again = [](const Document& d) { return parse_document(dump(d)); };
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto cd = category_document(*base);
    p.expect(again(cd) == cd && to_category(again(cd)) == *base, name + ": category document");
    for (const auto& np : catalog::standard_parts(base)) {
      auto pd = part_document(np.part);
      p.expect(again(pd) == pd && part_document(to_part(again(pd))) == pd, name + ": part document " + np.name);
    }
    for (Variance v : {Variance::co, Variance::contra}) {
      for (const auto& d : presheaves::enumerate(base, v, 1)) {
        auto doc = presheaf_document(d);
        p.expect(again(doc) == doc && to_presheaf(again(doc)) == d, name + ": presheaf document");
      }
    }
  }
  for (const auto& name : catalog::graph_names()) {
    auto g = catalog::graph(name);
    auto gd = graph_document(g);
    p.expect(again(gd) == gd && to_graph(again(gd)) == g, name + ": graph document");
  }
  CycleSum a{{4, 1}, {6, 2}};
  p.expect(to_cyclesum(again(cyclesum_document(a))) == a, "cycle sum document");
  auto x = Poset::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  p.expect(poset_document(to_poset(again(poset_document(x)))) == poset_document(x), "poset document");
}

}  // namespace

std::vector<Check> suite(std::string_view name) {
  if (name != "core" && name != "all") throw Error(ErrorKind::Malformed, "unknown suite " + std::string(name));
  std::vector<Check> out{
      {"catalog-valid", catalog_valid, 0},
      {"fincat-components-elements-free", fincat_properties, 0},
      {"parts-tensor-negation-lifting", parts_properties, 0},
      {"fibrations-units-fixed-points", fibration_properties, 0},
      {"atoms-karoubi-sigma-evaluation", atom_properties, 0},
      {"kan-pushforward-base-map", kan_properties, 0},
      {"twoval-galois-coadjunction-atoms", twoval_properties, 0},
      {"graphspace-truncation-cycles-transfers", graph_properties, 0},
      {"documents-round-trip", document_round_trip, 0},
  };
  if (name == "all") {
    for (auto& c : acceptance_criteria()) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bipolar::checks
