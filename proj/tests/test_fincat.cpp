#include <gtest/gtest.h>
#include <algorithm>

#include "bipolar/catalog.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/fincat.hpp"
#include "helpers.hpp"

using namespace bipolar;
using bipolar::testing::sample_d;

namespace {

CategorySpec arrow_spec() {
  CategorySpec s;
  s.objects = {"0", "1"};
  s.arrows = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
  s.identities = {{"0", "id0"}, {"1", "id1"}};
  return s;
}

// All directed paths (including empty ones) by explicit extension.
long long count_paths(const FinGraph& g) {
  long long total = g.node_count();
  std::vector<int> frontier;
  for (int e = 0; e < g.edge_count(); ++e) frontier.push_back(e);
  for (int len = 1; !frontier.empty() && len <= g.node_count(); ++len) {
    total += static_cast<long long>(frontier.size());
    std::vector<int> next;
    for (int last : frontier) {
      for (int e : g.out_edges(g.tgt(last))) next.push_back(e);
    }
    frontier = std::move(next);
  }
  return total;
}

}  // namespace

TEST(Validate, ArrowCategoryIsValid) {
  auto r = validate_category(arrow_spec());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.category->arrow_count(), 3);
}

TEST(Validate, NonComposablePairIsReported) {
  auto s = arrow_spec();
  s.compose[{"a", "a"}] = "a";
  auto r = validate_category(s);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->law, Law::BadComposability);
}

TEST(Validate, IdempotentMonoidIsValid) {
  CategorySpec s;
  s.objects = {"*"};
  s.arrows = {{"1", "*", "*"}, {"e", "*", "*"}};
  s.identities = {{"*", "1"}};
  s.compose[{"e", "e"}] = "e";
  EXPECT_TRUE(validate_category(s).ok());
}

TEST(Validate, NonAssociativeTableIsReported) {
  // a·a = b, b·a = 1 but a·b = a breaks associativity
  CategorySpec s;
  s.objects = {"*"};
  s.arrows = {{"1", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  s.identities = {{"*", "1"}};
  s.compose = {{{"a", "a"}, "b"}, {{"a", "b"}, "a"}, {{"b", "a"}, "1"}, {{"b", "b"}, "b"}};
  auto r = validate_category(s);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->law, Law::NotAssociative);
}

TEST(Validate, MissingCompositeIsMalformed) {
  CategorySpec s;
  s.objects = {"*"};
  s.arrows = {{"1", "*", "*"}, {"e", "*", "*"}};
  s.identities = {{"*", "1"}};
  EXPECT_FALSE(validate_category(s).ok());
}

TEST(Validate, SpecRoundTrips) {
  for (const auto& name : catalog::base_names()) {
    auto c = catalog::base(name);
    EXPECT_EQ(FinCat::from_spec(c->spec()), *c) << name;
  }
}

TEST(Components, DiscreteThreeHasThreeClasses) {
  EXPECT_EQ(components(cats::discrete({"x", "y", "z"})).size(), 3);
}

TEST(Components, ArrowCategoryIsConnected) { EXPECT_EQ(components(cats::arrow()).size(), 1); }

TEST(Components, ElementsOfSampleSplitIntoTwo) {
  Part p = elements(sample_d());
  auto comps = components(*p.total());
  ASSERT_EQ(comps.size(), 2);
  const FinCat& t = *p.total();
  EXPECT_EQ(comps.class_of[t.find_object("0.u")], comps.class_of[t.find_object("1.v")]);
  EXPECT_NE(comps.class_of[t.find_object("0.u")], comps.class_of[t.find_object("1.w")]);
  EXPECT_EQ(t.object(comps.rep(0)), "0.u");
}

TEST(Elements, RepresentableIsDf) {
  auto base = catalog::base("2");
  Part p = elements(presheaves::representable(base, 1, Variance::contra));
  auto c = classify_part(p);
  ASSERT_TRUE(c.df());
  EXPECT_EQ(c.contra->sizes(), (std::vector<int>{1, 1}));
}

TEST(Elements, SampleTotalHasOneNonIdentityArrow) {
  Part p = elements(sample_d());
  const FinCat& t = *p.total();
  EXPECT_EQ(t.object_count(), 3);
  int non_id = 0;
  for (int u = 0; u < t.arrow_count(); ++u) non_id += t.is_identity(u) ? 0 : 1;
  EXPECT_EQ(non_id, 1);
  int u = t.find_arrow("a@u");
  ASSERT_GE(u, 0);
  EXPECT_EQ(t.object(t.src(u)), "0.u");
  EXPECT_EQ(t.object(t.tgt(u)), "1.v");
  EXPECT_EQ(classify_part(p).kind(), FibrationKind::dof);
}

TEST(Elements, ConstantIsBifibrationWithTwoComponents) {
  Part p = elements(presheaves::constant(catalog::base("2"), {"0", "1"}));
  EXPECT_EQ(classify_part(p).kind(), FibrationKind::bifibration);
  EXPECT_EQ(components(*p.total()).size(), 2);
}

TEST(FreeCategory, ChainOfThree) {
  FinCat c = free_category(graphs::chain(3));
  EXPECT_EQ(c.object_count(), 3);
  EXPECT_EQ(c.arrow_count(), 6);
}

TEST(FreeCategory, LoopExceedsBudget) {
  try {
    free_category(graphs::loop());
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(FreeCategory, EmptyGraph) {
  FinCat c = free_category(FinGraph::make({}, {}));
  EXPECT_EQ(c.object_count(), 0);
  EXPECT_EQ(c.arrow_count(), 0);
}

TEST(FreeCategory, SmallBudgetIsReported) {
  try {
    free_category(graphs::chain(5), 10);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(FreeCategoryProperty, ArrowCountMatchesPathCount) {
  std::vector<FinGraph> gs{graphs::dot(), graphs::arrow(), graphs::sum(graphs::arrow(), graphs::chain(3))};
  for (int n = 1; n <= 5; ++n) gs.push_back(graphs::chain(n));
  gs.push_back(FinGraph::make({"a", "b", "c", "d"},
                              {{"f", "a", "b"}, {"g", "a", "b"}, {"h", "b", "c"}, {"k", "a", "d"}, {"m", "d", "c"}}));
  for (const auto& g : gs) {
    FinCat c = free_category(g);
    EXPECT_EQ(c.arrow_count(), count_paths(g));
    EXPECT_TRUE(validate_category(c.spec()).ok());
  }
}

TEST(ComponentsProperty, QuotientIsDiscrete) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      auto comps = components(*np.part.total());
      std::vector<std::string> names;
      for (int k = 0; k < comps.size(); ++k) names.push_back(std::to_string(k));
      auto again = components(cats::discrete(names));
      EXPECT_EQ(again.size(), comps.size());
      for (int k = 0; k < again.size(); ++k) EXPECT_EQ(again.classes[k].size(), 1u);
    }
  }
}

TEST(ComponentsProperty, ConstantComponentsMultiply) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    int gamma = components(*base).size();
    for (int k = 0; k <= 3; ++k) {
      std::vector<std::string> s;
      for (int i = 0; i < k; ++i) s.push_back("s" + std::to_string(i));
      Part p = elements(presheaves::constant(base, s));
      EXPECT_EQ(components(*p.total()).size(), k * gamma) << name;
    }
  }
}

TEST(ElementsProperty, ExtractionRecoversPresheaf) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (Variance v : {Variance::co, Variance::contra}) {
      for (const auto& a : presheaves::enumerate(base, v, 2)) {
        auto c = classify_part(elements(a));
        const auto& got = v == Variance::co ? c.co : c.contra;
        ASSERT_TRUE(got.has_value()) << name;
        EXPECT_EQ(got->sizes(), a.sizes());
        EXPECT_TRUE(isomorphic(*got, a)) << name;
      }
    }
  }
}

TEST(Functor, CompositionAndIdentity) {
  auto two = catalog::base("2");
  auto one = catalog::base("1");
  FinFunctor f(two, one, {0, 0}, {0, 0, 0});
  FinFunctor id = FinFunctor::identity(two);
  EXPECT_EQ(compose(f, id).arr_map(), f.arr_map());
  EXPECT_THROW(FinFunctor(one, two, {0}, {2}), Error);
}

TEST(Opposite, ReversesArrows) {
  FinCat op = opposite(cats::arrow());
  int a = op.find_arrow("a");
  EXPECT_EQ(op.object(op.src(a)), "1");
  EXPECT_EQ(opposite(op), cats::arrow());
}

TEST(IsomorphismProperty, MatchesSearchForInvertibleTransformation) {
  auto invertible = [](const Presheaf& a, const Presheaf& b) {
    for (const auto& t : natural_transformations(a, b)) {
      bool all = true;
      for (std::size_t x = 0; x < t.comps.size(); ++x) {
        std::vector<int> image = t.comps[x];
        std::sort(image.begin(), image.end());
        all = all && std::adjacent_find(image.begin(), image.end()) == image.end() &&
              static_cast<int>(image.size()) == b.size(static_cast<int>(x));
      }
      if (all) return true;
    }
    return false;
  };
  for (const auto& name : {"2", "3", "{1,e}", "Z2", "split", "{1,a,0}"}) {
    auto base = catalog::base(name);
    auto ps = presheaves::enumerate(base, Variance::co, 2);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        if (a.sizes() != b.sizes()) continue;
        ASSERT_EQ(isomorphic(a, b), invertible(a, b)) << name;
      }
    }
  }
}
