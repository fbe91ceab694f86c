#include <functional>
#include <numeric>

#include "bipolar/atoms.hpp"
#include "bipolar/catalog.hpp"
#include "bipolar/checks.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/kan.hpp"
#include "bipolar/oracles.hpp"
#include "bipolar/parts.hpp"
#include "bipolar/twoval.hpp"

namespace bipolar::checks {

namespace {

const std::vector<std::string> kAdjunctionBases{"1", "2", "3", "{1,e}", "Z2", "a<b"};

std::string at(const std::string& base, const std::string& what) { return base + ": " + what; }

FinGraph loops_on_one_node(int k) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < k; ++i) edges.push_back({"l" + std::to_string(i), "x", "x"});
  return FinGraph::make({"x"}, edges);
}

FinGraph copies(const FinGraph& g, int n) {
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) {
    std::string tag = std::to_string(i) + ":";
    for (const auto& v : g.nodes()) nodes.push_back(tag + v);
    for (const auto& e : g.edge_specs()) edges.push_back({tag + e.id, tag + e.src, tag + e.tgt});
  }
  return FinGraph::make(nodes, edges);
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

// Every graph over A with at most two nodes over each end and three edges.
void for_each_graph_over_arrow(const std::function<void(const GraphPart&, bool domain_bijective)>& visit) {
  for (int n0 = 0; n0 <= 2; ++n0) {
    for (int n1 = 0; n1 <= 2; ++n1) {
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) slots.push_back({i, j});
      std::vector<int> mult(slots.size(), 0);
      std::function<void(std::size_t, int)> go = [&](std::size_t k, int budget) {
        if (k == slots.size()) {
          std::vector<std::string> nodes;
          std::map<std::string, std::string> nmap, emap;
          for (int i = 0; i < n0; ++i) nodes.push_back("x" + std::to_string(i)), nmap[nodes.back()] = "0";
          for (int j = 0; j < n1; ++j) nodes.push_back("y" + std::to_string(j)), nmap[nodes.back()] = "1";
          std::vector<EdgeSpec> edges;
          std::vector<int> out_deg(n0, 0);
          for (std::size_t s = 0; s < slots.size(); ++s) {
            for (int r = 0; r < mult[s]; ++r) {
              std::string id = "e" + std::to_string(edges.size());
              edges.push_back({id, "x" + std::to_string(slots[s].first), "y" + std::to_string(slots[s].second)});
              emap[id] = "a";
              ++out_deg[slots[s].first];
            }
          }
          bool bijective = std::all_of(out_deg.begin(), out_deg.end(), [](int d) { return d == 1; });
          visit(GraphPart::make(graphs::arrow(), FinGraph::make(nodes, edges), nmap, emap), bijective);
          return;
        }
        for (int m = 0; m <= budget; ++m) {
          mult[k] = m;
          go(k + 1, budget - m);
        }
        mult[k] = 0;
      };
      go(0, 3);
    }
  }
}

void cycle_algebra(Probe& p) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= 12; ++k) {
      auto where = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      int g = std::gcd(n, k), l = std::lcm(n, k);
      auto r = cycle_pairing({{n, 1}}, {{k, 1}});
      p.expect(r.ten == g, [&] { return where() + ": ten"; });
      p.expect(r.product == CycleSum{{l, g}}, [&] { return where() + ": product"; });
      p.expect(r.hom == (n % k == 0 ? k : 0), [&] { return where() + ": hom"; });
      auto ln = graphs::cycle(n), lk = graphs::cycle(k);
      auto product = oracles::graph_product(ln, lk);
      p.expect(cycle_sum_of(product) == r.product, [&] { return where() + ": product graph"; });
      p.expect(components(product).size() == r.ten, [&] { return where() + ": product components"; });
      p.expect(oracles::graph_hom_count(ln, lk) == r.hom, [&] { return where() + ": enumerated morphisms"; });
    }
  }
}

void zn_transfers(Probe& p) {
  int sums = 1;
  for (int k = 1; k <= 8; ++k) sums *= 3;
  for (int mask = 0; mask < sums; ++mask) {
    CycleSum a;
    for (int k = 1, m = mask; k <= 8; ++k, m /= 3)
      if (m % 3) a[k] = m % 3;
    for (int n = 1; n <= 8; ++n) {
      for (auto dir : {Transfer::reflect, Transfer::coreflect}) {
        p.expect(zn_transfer(a, n, dir) == oracles::zn_action(a, n, dir),
                 [&] { return to_string(a) + " n=" + std::to_string(n) + " " + to_string(dir); });
      }
    }
  }
}

void loop_examples(Probe& p) {
  for (int n = 1; n <= 5; ++n) {
    auto c = catalog::graph("C" + std::to_string(n));
    p.expect(chains(c).lassos.empty(), "chains of C" + std::to_string(n));
    auto r = loop_reflect(c);
    p.expect(r.core.node_count() == 0 && r.tails == 1, "reflection of C" + std::to_string(n));
  }
  auto s1 = catalog::graph("S1");
  for (int n = 1; n <= 3; ++n) {
    auto s = catalog::graph("S" + std::to_string(n));
    p.expect(isomorphic(loop_reflect(s), SymbolicEndomap{s1, 0}), "reflection of S" + std::to_string(n));
    p.expect(functional_canonical_form(chains(s).endomap) == functional_canonical_form(copies(s1, n)),
             "chains of S" + std::to_string(n));
  }
  for (int k = 1; k <= 3; ++k) {
    auto g = loops_on_one_node(k);
    p.expect(isomorphic(loop_reflect(g), SymbolicEndomap{graphs::loop(), 0}), "reflection of a bouquet");
    if (k == 1) continue;
    bool uncountable = false;
    try {
      chains(g);
    } catch (const Error& e) {
      uncountable = e.kind() == ErrorKind::UncountableChains;
    }
    p.expect(uncountable, std::to_string(k) + " loops on one node give uncountably many chains");
  }
}

void reflection_adjunctions(Probe& p) {
  for (const auto& name : kAdjunctionBases) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      for (Side side : {Side::open, Side::closed}) {
        Reflector r(np.part, side);
        Coreflector k(np.part, side);
        for (const auto& d : presheaves::enumerate(base, variance_of(side), 2)) {
          Part pd = elements(d);
          auto what = [&](const char* s) { return [&, s] { return at(name, np.name + " " + to_string(side) + ": " + s); }; };
          auto phis = hom_over(np.part, pd);
          auto alphas = natural_transformations(r.result().presheaf, d);
          p.expect(phis.size() == alphas.size(), what("reflection hom counts"));
          for (const auto& phi : phis) p.expect(r.untranspose(d, r.transpose(d, phi)) == phi, what("reflection round trip"));
          for (const auto& a : alphas) p.expect(r.transpose(d, r.untranspose(d, a)) == a, what("reflection round trip"));
          auto psis = hom_over(pd, np.part);
          auto betas = natural_transformations(d, k.result().presheaf);
          p.expect(psis.size() == betas.size(), what("coreflection hom counts"));
          for (const auto& psi : psis) p.expect(k.untranspose(d, k.transpose(d, psi)) == psi, what("coreflection round trip"));
          for (const auto& b : betas) p.expect(k.transpose(d, k.untranspose(d, b)) == b, what("coreflection round trip"));
        }
      }
    }
  }
}

void coadjunction_yoneda(Probe& p) {
  for (const auto& name : kAdjunctionBases) {
    auto base = catalog::base(name);
    auto ps = catalog::standard_parts(base);
    for (const auto& a : ps) {
      Part down_a = reflect(a.part, Side::open).elements.part;
      for (const auto& b : ps) {
        Part up_b = reflect(b.part, Side::closed).elements.part;
        int lhs = tensor(down_a, b.part).size(), rhs = tensor(a.part, up_b).size();
        p.expect(lhs == rhs, [&] { return at(name, "ten(↓" + a.name + ", " + b.name + ")"); });
        p.expect(lhs == oracles::tensor_size(down_a, b.part), [&] { return at(name, "tensor oracle"); });
      }
    }
    for (const auto& d : presheaves::enumerate(base, Variance::contra, 2)) {
      Part pd = elements(d);
      for (int x = 0; x < base->object_count(); ++x) {
        Part down_x = elements(presheaves::representable(base, x, Variance::contra));
        Part up_x = elements(presheaves::representable(base, x, Variance::co));
        p.expect(tensor(pd, up_x).size() == d.size(x), [&] { return at(name, "ten(A, ↑" + base->object(x) + ")"); });
        p.expect(static_cast<int>(hom_over(down_x, pd).size()) == d.size(x),
                 [&] { return at(name, "hom(↓" + base->object(x) + ", A)"); });
      }
    }
  }
}

void contraposition(Probe& p) {
  for (const auto& name : kAdjunctionBases) {
    auto base = catalog::base(name);
    for (Variance v : {Variance::co, Variance::contra}) {
      auto ps = presheaves::enumerate(base, v, 2);
      for (const auto& a : ps)
        for (const auto& b : ps)
          for (const auto& t : natural_transformations(a, b))
            p.expect(contrapose_inverse(a, b, contrapose(a, b, t)) == t, [&] { return at(name, "round trip"); });
    }
  }
}

// y, r: x -> y, s: y -> x with s∘r = e and r∘s = id_y
std::optional<int> splitting_object(const FinCat& c, int e) {
  int x = c.src(e);
  for (int r : c.arrows_from(x))
    for (int s : c.arrows_to(x))
      if (c.src(s) == c.tgt(r) && c.compose(s, r) == e && c.compose(r, s) == c.identity(c.tgt(r))) return c.tgt(r);
  return std::nullopt;
}

void atoms_and_cauchy(Probe& p) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto family = default_family(base);
    for (int x = 0; x < base->object_count(); ++x)
      p.expect(atom_check(parts::object(base, x), family).has_value(), at(name, "object " + base->object(x)));
    for (int e : catalog::idempotents(*base)) {
      std::string en = base->arrow(e);
      p.expect(atom_check(parts::idempotent(base, e), family).has_value(), at(name, "idempotent " + en));
      for (Side side : {Side::open, Side::closed}) {
        p.expect(retract_of_representable(base, e, side).has_value(), at(name, "retract " + en));
        if (auto y = splitting_object(*base, e)) {
          Variance v = variance_of(side);
          p.expect(isomorphic(idempotent_atom(base, e, side), presheaves::representable(base, *y, v)),
                   at(name, "split " + en));
        }
      }
      auto pair = atomic_pair(base, e);
      p.expect(is_dedekind_cut(pair.down, pair.up), at(name, "cut for " + en));
    }
  }
  auto m = catalog::base("{1,e}");
  auto k = karoubi(m);
  const FinCat& c = *k.cat;
  p.expect(c.object_count() == 2, "karoubi({1,e}) has two objects");
  if (c.object_count() == 2) {
    int one = c.object_index("1"), e = c.object_index("e");
    std::vector<std::size_t> sizes{c.hom(one, one).size(), c.hom(one, e).size(), c.hom(e, one).size(),
                                   c.hom(e, e).size()};
    p.expect(sizes == std::vector<std::size_t>{2, 1, 1, 1}, "karoubi({1,e}) hom sizes");
  }
  p.expect(catalog::base("split")->object_count() == 2 && splitting_object(*catalog::base("split"),
                                                                            catalog::base("split")->arrow_index("e")),
           "the split base splits e");
}

void kan_extensions(Probe& p) {
  const auto& names = catalog::base_names();
  for (const auto& xn : names) {
    for (const auto& yn : names) {
      auto fs = all_functors(catalog::base(xn), catalog::base(yn));
      for (const auto& f : fs) {
        std::string where = xn + "->" + yn;
        for (const auto& d : presheaves::enumerate(f.dom(), Variance::co, 3)) {
          p.expect(isomorphic(lan(f, d), oracles::lan_colimit(f, d)), where + ": lan");
          p.expect(isomorphic(ran(f, d), oracles::ran_limit(f, d)), where + ": ran");
        }
        auto ds = presheaves::enumerate(f.dom(), Variance::co, 1);
        auto es = presheaves::enumerate(f.cod(), Variance::co, 1);
        for (const auto& d : ds) {
          Presheaf l = lan(f, d), r = ran(f, d);
          for (const auto& e : es) {
            Presheaf se = substitute(f, e);
            p.expect(oracles::nat_count(l, e) == oracles::nat_count(d, se), where + ": lan adjunction");
            p.expect(oracles::nat_count(se, d) == oracles::nat_count(e, r), where + ": ran adjunction");
          }
        }
        auto ps = catalog::standard_parts(f.dom());
        auto qs = catalog::standard_parts(f.cod());
        for (const auto& a : ps) {
          Part pushed = post_compose(f, a.part);
          p.expect(components(*a.part.total()).size() == oracles::tensor_size(pushed, parts::identity(f.cod())),
                   where + ": components of " + a.name);
          for (const auto& b : qs) {
            auto fr = frobenius_check(f, a.part, b.part);
            p.expect(fr.iso, [&] { return where + ": Frobenius " + a.name + ", " + b.name + " " + fr.witness; });
            p.expect(oracles::tensor_size(a.part, pullback(f, b.part)) == oracles::tensor_size(pushed, b.part),
                     where + ": tensor transfer " + a.name + ", " + b.name);
          }
        }
      }
    }
  }
}

void two_valued(Probe& p) {
  for (int n = 0; n <= 5; ++n) {
    auto subsets = all_subsets(n);
    for (const auto& x : all_posets(n)) {
      for (const auto& s : subsets) {
        for (auto dir : {Direction::up, Direction::down}) {
          p.expect(alexandrov_reflect(x, s, dir) == oracles::least_closed_superset(x, s, dir), "reflection");
          p.expect(alexandrov_coreflect(x, s, dir) == oracles::greatest_closed_subset(x, s, dir), "coreflection");
        }
        if (classify_subset(x, s) != SubsetKind::neither) {
          p.expect(pseudocomplement(x, pseudocomplement(x, s)) == s, "double negation");
        }
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    auto subsets = all_subsets(n);
    for (const auto& x : all_posets(n)) {
      auto cat = share(x.category());
      for (const auto& s : subsets) {
        Part part = subset_part(cat, x, s);
        auto support = [](const Presheaf& d) {
          Subset out;
          for (int k : d.sizes()) out.push_back(k > 0);
          return out;
        };
        auto kind = classify_part(part).kind();
        auto cls = classify_subset(x, s);
        p.expect((kind == FibrationKind::dof || kind == FibrationKind::bifibration) ==
                     (cls == SubsetKind::cosieve || cls == SubsetKind::clopen),
                 "closed parts are cosieves");
        p.expect((kind == FibrationKind::df || kind == FibrationKind::bifibration) ==
                     (cls == SubsetKind::sieve || cls == SubsetKind::clopen),
                 "open parts are sieves");
        p.expect(support(reflect(part, Side::closed).presheaf) == alexandrov_reflect(x, s, Direction::up), "↑");
        p.expect(support(reflect(part, Side::open).presheaf) == alexandrov_reflect(x, s, Direction::down), "↓");
        p.expect(support(coreflect(part, Side::closed).presheaf) == alexandrov_coreflect(x, s, Direction::up),
                 "coreflection up");
        p.expect(support(coreflect(part, Side::open).presheaf) == alexandrov_coreflect(x, s, Direction::down),
                 "coreflection down");
      }
    }
  }
}

void appendix(Probe& p) {
  auto g = groupoid_reflection(catalog::base("2"));
  const FinCat& gc = *g.groupoid;
  p.expect(gc.object_count() == 2 && gc.arrow_count() == 4 && is_groupoid(gc), "groupoid of 2 is indiscrete");
  if (gc.object_count() == 2) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) p.expect(gc.hom(x, y).size() == 1, "one arrow between any two objects");
  }

  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto q = groupoid_reflection(base).quotient;
    std::vector<Presheaf> clopens;
    for (const auto& d : presheaves::enumerate(base, Variance::co, 2))
      if (classify_part(elements(d)).kind() == FibrationKind::bifibration) clopens.push_back(d);
    for (const auto& np : catalog::standard_parts(base)) {
      Presheaf r = clopen_reflect(np.part);
      Presheaf via_groupoid = substitute(q, lan(q, reflect(np.part, Side::closed).presheaf));
      p.expect(isomorphic(r, via_groupoid), at(name, "clopen reflection of " + np.name));
      p.expect(classify_part(elements(r)).kind() == FibrationKind::bifibration, at(name, np.name + " is clopen"));
      for (const auto& b : clopens) {
        p.expect(oracles::nat_count(r, b) == static_cast<long long>(hom_over(np.part, elements(b)).size()),
                 at(name, "clopen adjunction for " + np.name));
      }
    }
    if (is_groupoid(*base)) {
      for (const auto& a : presheaves::enumerate(base, Variance::contra, 2))
        p.expect(classify_part(elements(a)).kind() == FibrationKind::bifibration, at(name, "df is clopen"));
    }
  }

  std::map<std::string, std::string> nodes{{"x", "0"}, {"y", "1"}}, edges{{"f", "a"}, {"g", "a"}};
  auto doubled = GraphPart::make(graphs::arrow(), FinGraph::make({"x", "y"}, {{"f", "x", "y"}, {"g", "x", "y"}}),
                                 nodes, edges);
  auto c = classify_graph_part(doubled);
  p.expect(c.kind() == GraphPartKind::right_comapping && !c.right_functional, "repeated arrows make a comapping");
  for_each_graph_over_arrow([&](const GraphPart& gp, bool bijective) {
    p.expect(classify_graph_part(gp).right_functional == bijective, "right functional iff the domain map is bijective");
    p.expect(classify_part(graph_space_bridge(gp)).dof() == bijective, "closed over the arrow category");
  });
}

}  // namespace

std::vector<Check> acceptance_criteria() {
  return {
      {"ac01-cycle-algebra", cycle_algebra, 1},
      {"ac02-zn-transfers", zn_transfers, 5},
      {"ac03-loop-graph-examples", loop_examples, 0},
      {"ac04-reflection-adjunctions", reflection_adjunctions, 60},
      {"ac05-coadjunction-yoneda", coadjunction_yoneda, 0},
      {"ac06-contraposition", contraposition, 0},
      {"ac07-atoms-karoubi", atoms_and_cauchy, 0},
      {"ac08-kan-extensions", kan_extensions, 120},
      {"ac09-two-valued", two_valued, 0},
      {"ac10-groupoids-clopen-comappings", appendix, 0},
  };
}

}  // namespace bipolar::checks
