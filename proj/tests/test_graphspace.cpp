#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bipolar/catalog.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/oracles.hpp"

using namespace bipolar;

namespace {

FinGraph one_node_loops(int k) {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < k; ++i) edges.push_back({"l" + std::to_string(i), "x", "x"});
  return FinGraph::make({"x"}, edges);
}

SymbolicEndomap endo(const FinGraph& core, int tails) { return SymbolicEndomap{core, tails}; }

FinGraph empty_graph() { return FinGraph::make({}, {}); }

FinGraph copies(const FinGraph& g, int n) {
  FinGraph out = empty_graph();
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> nodes;
    std::vector<EdgeSpec> edges;
    for (const auto& v : g.nodes()) nodes.push_back(std::to_string(i) + v);
    for (const auto& e : g.edge_specs()) edges.push_back({std::to_string(i) + e.id, std::to_string(i) + e.src,
                                                          std::to_string(i) + e.tgt});
    out = graphs::sum(out, FinGraph::make(nodes, edges));
  }
  return out;
}

FinGraph random_graph(std::mt19937& rng, int nodes, int edges) {
  std::vector<std::string> names;
  for (int i = 0; i < nodes; ++i) names.push_back("v" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::vector<EdgeSpec> es;
  for (int i = 0; i < edges; ++i) es.push_back({"e" + std::to_string(i), names[pick(rng)], names[pick(rng)]});
  return FinGraph::make(names, es);
}

FinGraph random_functional(std::mt19937& rng, int nodes) {
  std::vector<std::string> names;
  std::vector<int> succ;
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  for (int i = 0; i < nodes; ++i) {
    names.push_back("v" + std::to_string(i));
    succ.push_back(pick(rng));
  }
  return endomap_graph(names, succ);
}

GraphPart over_arrow(const std::vector<std::string>& zero, const std::vector<std::string>& one,
                     const std::vector<EdgeSpec>& edges) {
  std::vector<std::string> nodes = zero;
  nodes.insert(nodes.end(), one.begin(), one.end());
  std::map<std::string, std::string> nmap, emap;
  for (const auto& v : zero) nmap[v] = "0";
  for (const auto& v : one) nmap[v] = "1";
  for (const auto& e : edges) emap[e.id] = "a";
  return GraphPart::make(graphs::arrow(), FinGraph::make(nodes, edges), nmap, emap);
}

}  // namespace

TEST(GraphPart, RejectsEdgeOffItsImage) {
  auto total = FinGraph::make({"x", "y"}, {{"f", "y", "x"}});
  EXPECT_THROW(GraphPart::make(graphs::arrow(), total, {{"x", "0"}, {"y", "1"}}, {{"f", "a"}}), Error);
  EXPECT_THROW(GraphPart::make(graphs::arrow(), total, {{"x", "0"}}, {{"f", "a"}}), Error);
}

TEST(ClassifyGraph, Examples) {
  EXPECT_EQ(classify_graph_part(GraphPart::over_loop(catalog::graph("L3"))).kind(), GraphPartKind::bifunctional);
  EXPECT_EQ(classify_graph_part(GraphPart::over_loop(catalog::graph("C3"))).kind(), GraphPartKind::neither);
  EXPECT_EQ(classify_graph_part(GraphPart::over_loop(catalog::graph("S1"))).kind(),
            GraphPartKind::right_functional);
  auto doubled = over_arrow({"x"}, {"y"}, {{"f", "x", "y"}, {"g", "x", "y"}});
  auto c = classify_graph_part(doubled);
  EXPECT_EQ(c.kind(), GraphPartKind::right_comapping);
  EXPECT_FALSE(c.right_functional);
  EXPECT_TRUE(c.left_comapping);
  auto split = over_arrow({"x"}, {"y", "z"}, {{"f", "x", "y"}, {"g", "x", "z"}});
  EXPECT_EQ(classify_graph_part(split).kind(), GraphPartKind::left_functional);
}

TEST(ClassifyGraph, RightFunctionalIffDomainMapBijective) {
  // Every graph over A with at most 2 nodes on each side and at most 3 edges.
  for (int n0 = 0; n0 <= 2; ++n0) {
    for (int n1 = 0; n1 <= 2; ++n1) {
      std::vector<std::pair<int, int>> slots;
      for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n1; ++j) slots.push_back({i, j});
      std::vector<int> mult(slots.size(), 0);
      std::function<void(std::size_t, int)> go = [&](std::size_t k, int budget) {
        if (k == slots.size()) {
          std::vector<std::string> zero, one;
          for (int i = 0; i < n0; ++i) zero.push_back("x" + std::to_string(i));
          for (int j = 0; j < n1; ++j) one.push_back("y" + std::to_string(j));
          std::vector<EdgeSpec> edges;
          std::vector<int> out_deg(n0, 0);
          for (std::size_t s = 0; s < slots.size(); ++s) {
            for (int r = 0; r < mult[s]; ++r) {
              edges.push_back({"e" + std::to_string(edges.size()), zero[slots[s].first], one[slots[s].second]});
              ++out_deg[slots[s].first];
            }
          }
          bool bijective = std::all_of(out_deg.begin(), out_deg.end(), [](int d) { return d == 1; });
          auto p = over_arrow(zero, one, edges);
          ASSERT_EQ(classify_graph_part(p).right_functional, bijective);
          ASSERT_EQ(classify_part(graph_space_bridge(p)).dof(), bijective);
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

TEST(Canonical, DistinguishesShapes) {
  auto a = functional_canonical_form(endomap_graph({"a", "b", "c"}, {1, 0, 0}));
  auto b = functional_canonical_form(endomap_graph({"p", "q", "r"}, {1, 1, 1}));
  auto c = functional_canonical_form(endomap_graph({"u", "v", "w"}, {2, 2, 0}));
  EXPECT_NE(a, b);
  EXPECT_EQ(a, c);
  EXPECT_THROW(functional_canonical_form(catalog::graph("C2")), Error);
}

TEST(Chains, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(chains(catalog::graph("C" + std::to_string(n))).lassos.empty());
  auto s2 = chains(catalog::graph("S2"));
  EXPECT_EQ(s2.lassos.size(), 4u);
  EXPECT_EQ(functional_canonical_form(s2.endomap), functional_canonical_form(copies(catalog::graph("S1"), 2)));
  EXPECT_EQ(s2.lassos[0].name(catalog::graph("S2")), "(l1)");
  try {
    chains(one_node_loops(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UncountableChains);
  }
  EXPECT_EQ(chains(one_node_loops(1)).lassos.size(), 1u);
}

TEST(LoopReflect, Examples) {
  for (int n = 1; n <= 5; ++n) {
    auto r = loop_reflect(catalog::graph("C" + std::to_string(n)));
    EXPECT_EQ(r.core.node_count(), 0);
    EXPECT_EQ(r.tails, 1);
  }
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(isomorphic(loop_reflect(catalog::graph("S" + std::to_string(n))), endo(catalog::graph("S1"), 0)));
  }
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(isomorphic(loop_reflect(one_node_loops(k)), endo(graphs::loop(), 0)));
  EXPECT_EQ(loop_reflect(empty_graph()).canonical_form(), "+0");
}

TEST(LoopReflect, BranchingTailIsUnsupported) {
  auto v = FinGraph::make({"a", "b", "c"}, {{"f", "a", "c"}, {"g", "b", "c"}});
  EXPECT_THROW(loop_reflect(v), Error);
  EXPECT_THROW(oracles::presented_endomap(v), Error);
}

TEST(LoopReflectProperty, FunctionalGraphsAreFixed) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_functional(rng, 1 + trial % 8);
    ASSERT_TRUE(isomorphic(loop_reflect(g), endo(g, 0)));
    ASSERT_EQ(functional_canonical_form(chains(g).endomap), functional_canonical_form(g));
  }
  for (const auto& name : {"L1", "L4", "L12", "S1", "L"}) {
    auto g = catalog::graph(name);
    EXPECT_TRUE(isomorphic(loop_reflect(g), endo(g, 0))) << name;
  }
}

TEST(LoopReflectProperty, AgreesWithPresentedAlgebra) {
  std::mt19937 rng(11);
  int compared = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto g = random_graph(rng, 1 + trial % 8, trial % 13);
    std::optional<SymbolicEndomap> expected;
    try {
      expected = oracles::presented_endomap(g);
    } catch (const Error&) {
      EXPECT_THROW(loop_reflect(g), Error);
      continue;
    }
    ASSERT_EQ(loop_reflect(g).canonical_form(), expected->canonical_form()) << trial;
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(LoopReflectProperty, StableAcrossDepthsOnCatalog) {
  for (const auto& name : catalog::graph_names()) {
    auto g = catalog::graph(name);
    int n = default_truncation(g);
    auto a = loop_reflect_at(g, n), b = loop_reflect_at(g, n + 1), c = loop_reflect_at(g, n + 2);
    EXPECT_TRUE(isomorphic(a, b)) << name;
    EXPECT_TRUE(isomorphic(b, c)) << name;
  }
}

TEST(ChainsProperty, CountMatchesLiveWalks) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto g = random_graph(rng, 1 + trial % 6, trial % 8);
    const int n = g.node_count();
    long long shortw = oracles::live_walks(g, 2 * n + 2), longw = oracles::live_walks(g, 4 * n + 4);
    try {
      auto c = chains(g);
      ASSERT_EQ(static_cast<long long>(c.lassos.size()), longw) << trial;
      ASSERT_EQ(shortw, longw);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::UncountableChains);
      ASSERT_GT(longw, shortw) << trial;
    }
  }
}

TEST(CyclePairing, Examples) {
  auto r = cycle_pairing({{4, 1}}, {{6, 1}});
  EXPECT_EQ(r.ten, 2);
  EXPECT_EQ(r.product, (CycleSum{{12, 2}}));
  EXPECT_EQ(r.hom, 0);
  EXPECT_EQ(cycle_pairing({{4, 1}}, {{2, 1}}).hom, 2);
  for (int n = 1; n <= 12; ++n) {
    auto s = cycle_pairing({{n, 1}}, {{n, 1}});
    EXPECT_EQ(s.ten, n);
    EXPECT_EQ(s.hom, n);
    EXPECT_EQ(s.product, (CycleSum{{n, n}}));
  }
  EXPECT_EQ(cycle_hom({}, {}), 1);
  EXPECT_EQ(cycle_hom({{2, 1}}, {}), 0);
  EXPECT_THROW(cycle_hom({{1, 70}}, {{1, 2}}), Error);
  EXPECT_THROW(cycle_pairing({{0, 1}}, {}), Error);
}

TEST(CyclePairingProperty, MatchesProductGraphs) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= 12; ++k) {
      auto ln = graphs::cycle(n), lk = graphs::cycle(k);
      auto r = cycle_pairing({{n, 1}}, {{k, 1}});
      auto product = oracles::graph_product(ln, lk);
      ASSERT_EQ(cycle_sum_of(product), r.product);
      ASSERT_EQ(components(product).size(), r.ten);
      ASSERT_EQ(oracles::graph_hom_count(ln, lk), r.hom);
    }
  }
}

TEST(CyclePairingProperty, SumsMatchEnumeration) {
  std::vector<CycleSum> sums{{}, {{1, 1}}, {{2, 1}}, {{1, 2}}, {{2, 1}, {3, 1}}, {{4, 1}, {2, 1}}, {{6, 1}}};
  for (const auto& a : sums) {
    for (const auto& b : sums) {
      auto r = cycle_pairing(a, b);
      auto ga = cycle_graph(a), gb = cycle_graph(b);
      auto product = oracles::graph_product(ga, gb);
      ASSERT_EQ(cycle_sum_of(product), r.product);
      ASSERT_EQ(components(product).size(), r.ten);
      ASSERT_EQ(oracles::graph_hom_count(ga, gb), r.hom) << to_string(a) << " -> " << to_string(b);
      long long ten = 0;
      for (const auto& [k, n] : a)
        for (const auto& [l, m] : b) ten += n * m * cycle_pairing({{k, 1}}, {{l, 1}}).ten;
      ASSERT_EQ(r.ten, ten);
    }
  }
}

TEST(ZnTransfer, Examples) {
  CycleSum a{{6, 1}, {2, 2}};
  EXPECT_EQ(zn_transfer(a, 4, Transfer::coreflect), (CycleSum{{2, 2}}));
  EXPECT_EQ(zn_transfer(a, 4, Transfer::reflect), (CycleSum{{2, 3}}));
  CycleSum d{{1, 2}, {2, 1}, {4, 3}};
  EXPECT_EQ(zn_transfer(d, 4, Transfer::reflect), d);
  EXPECT_EQ(zn_transfer(d, 4, Transfer::coreflect), d);
  EXPECT_EQ(zn_transfer({{5, 1}}, 5, Transfer::reflect), (CycleSum{{5, 1}}));
  EXPECT_EQ(zn_transfer({{5, 1}}, 5, Transfer::coreflect), (CycleSum{{5, 1}}));
  EXPECT_THROW(zn_transfer(a, 0, Transfer::reflect), Error);
}

TEST(ZnTransferProperty, MatchesQuotientAction) {
  for (int mask = 0; mask < 3 * 3 * 3 * 3 * 3 * 3; ++mask) {
    CycleSum a;
    for (int k = 1, m = mask; k <= 6; ++k, m /= 3)
      if (m % 3) a[k] = m % 3;
    for (int n = 1; n <= 8; ++n) {
      for (auto dir : {Transfer::reflect, Transfer::coreflect}) {
        ASSERT_EQ(zn_transfer(a, n, dir), oracles::zn_action(a, n, dir)) << to_string(a) << " n=" << n;
      }
    }
  }
}

TEST(ZnTransferProperty, Adjunctions) {
  std::vector<CycleSum> as;
  for (int k = 1; k <= 12; ++k) as.push_back({{k, 1}});
  as.push_back({{3, 1}, {4, 2}});
  as.push_back({{1, 1}, {6, 1}, {10, 1}});
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    std::vector<CycleSum> bs{{}};
    for (int d : divisors) {
      bs.push_back({{d, 1}});
      bs.push_back({{d, 1}, {divisors.front(), 1}});
    }
    for (const auto& a : as) {
      for (const auto& b : bs) {
        ASSERT_EQ(cycle_hom(zn_transfer(a, n, Transfer::reflect), b), cycle_hom(a, b));
        ASSERT_EQ(cycle_hom(b, a), cycle_hom(b, zn_transfer(a, n, Transfer::coreflect)));
      }
    }
  }
}

TEST(Bridge, Examples) {
  auto empty = GraphPart{graphs::arrow(), empty_graph(), {}, {}};
  EXPECT_EQ(graph_space_bridge(empty).total()->object_count(), 0);
  auto p = over_arrow({"x"}, {"y"}, {{"f", "x", "y"}});
  auto part = graph_space_bridge(p);
  EXPECT_EQ(part.total()->arrow_count(), 3);
  EXPECT_EQ(classify_part(part).kind(), FibrationKind::bifibration);
  EXPECT_THROW(graph_space_bridge(GraphPart::over_loop(graphs::loop())), Error);
  auto chain = graph_space_bridge(GraphPart{graphs::chain(3), graphs::chain(3), {0, 1, 2}, {0, 1}});
  EXPECT_EQ(chain.total()->arrow_count(), 6);
}

TEST(DualGraph, Examples) {
  EXPECT_EQ(dual_graph(graphs::dot()).node_count(), 2);
  EXPECT_EQ(dual_graph(graphs::dot()).edge_count(), 1);
  for (int n = 1; n <= 4; ++n) {
    auto d = dual_graph(graphs::chain(n));
    EXPECT_EQ(d.node_count(), n + 1);
    EXPECT_EQ(d.edge_count(), n);
    EXPECT_EQ(components(d).size(), 1);
  }
  auto sum = dual_graph(graphs::sum(graphs::chain(2), graphs::cycle(3)));
  EXPECT_EQ(components(sum).size(), 2);
  // D × D = D has dual A, while A × A has four nodes.
  auto a = dual_graph(graphs::dot());
  EXPECT_EQ(dual_graph(oracles::graph_product(graphs::dot(), graphs::dot())).node_count(), 2);
  EXPECT_EQ(oracles::graph_product(a, a).node_count(), 4);
}
