#include <gtest/gtest.h>

#include "bipolar/catalog.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/kan.hpp"
#include "bipolar/oracles.hpp"
#include "helpers.hpp"

using namespace bipolar;
using bipolar::testing::sample_d;

namespace {

FinFunctor to_point(const CatPtr& x) {
  auto one = catalog::base("1");
  return FinFunctor(x, one, std::vector<int>(x->object_count(), 0), std::vector<int>(x->arrow_count(), 0));
}

FinFunctor pick_zero() {
  auto one = catalog::base("1");
  auto two = catalog::base("2");
  return FinFunctor(one, two, {0}, {two->identity(0)});
}

Presheaf singleton(const CatPtr& base) { return presheaves::terminal(base); }

}  // namespace

TEST(Substitute, ConstantAlongCollapse) {
  auto two = catalog::base("2");
  Presheaf s = substitute(to_point(two), presheaves::constant(catalog::base("1"), {"x", "y"}));
  EXPECT_EQ(s.sizes(), (std::vector<int>{2, 2}));
  EXPECT_TRUE(isomorphic(s, presheaves::constant(two, {"x", "y"})));
}

TEST(Substitute, FibreSelection) {
  Presheaf s = substitute(pick_zero(), sample_d());
  EXPECT_EQ(s.fibre(0), std::vector<std::string>{"u"});
}

TEST(Substitute, Identity) {
  EXPECT_EQ(substitute(FinFunctor::identity(catalog::base("2")), sample_d()), sample_d());
}

TEST(Lan, CollapseOfSample) {
  Presheaf l = lan(to_point(catalog::base("2")), sample_d());
  EXPECT_EQ(l.sizes(), std::vector<int>{2});
}

TEST(Lan, IdentityFixes) {
  EXPECT_TRUE(isomorphic(lan(FinFunctor::identity(catalog::base("2")), sample_d()), sample_d()));
}

TEST(Lan, PointGivesRepresentable) {
  Presheaf l = lan(pick_zero(), singleton(catalog::base("1")));
  EXPECT_EQ(l.sizes(), (std::vector<int>{1, 1}));
  EXPECT_TRUE(isomorphic(l, presheaves::representable(catalog::base("2"), 0, Variance::co)));
}

TEST(Ran, CollapseOfSample) {
  Presheaf r = ran(to_point(catalog::base("2")), sample_d());
  EXPECT_EQ(r.sizes(), std::vector<int>{1});
}

TEST(Ran, IdentityFixes) {
  EXPECT_TRUE(isomorphic(ran(FinFunctor::identity(catalog::base("2")), sample_d()), sample_d()));
}

TEST(Ran, PointOverEmptyIndex) {
  Presheaf r = ran(pick_zero(), singleton(catalog::base("1")));
  EXPECT_EQ(r.sizes(), (std::vector<int>{1, 1}));
}

TEST(Frobenius, CollapseExample) {
  auto two = catalog::base("2");
  Part p = elements(presheaves::representable(two, 0, Variance::contra));
  Part q = elements(presheaves::constant(catalog::base("1"), {"x", "y"}));
  EXPECT_TRUE(frobenius_check(to_point(two), p, q).iso);
}

TEST(Frobenius, TerminalAndEmpty) {
  auto two = catalog::base("2");
  auto f = to_point(two);
  Part p = elements(sample_d());
  EXPECT_TRUE(frobenius_check(f, p, parts::identity(catalog::base("1"))).iso);
  auto r = frobenius_check(f, parts::empty(two), parts::identity(catalog::base("1")));
  EXPECT_TRUE(r.iso);
  EXPECT_TRUE(r.phi.obj.empty());
}

TEST(BaseMap, CollapseOfIdempotentMonoid) {
  auto m = catalog::base("{1,e}");
  auto b = base_map(to_point(m));
  ASSERT_EQ(b.cod.cat->object_count(), 1);
  EXPECT_EQ(b.map.obj(0), 0);
  EXPECT_EQ(b.map.obj(1), 0);
}

TEST(BaseMap, IdentityAndPoint) {
  auto two = catalog::base("2");
  auto b = base_map(FinFunctor::identity(two));
  for (int o = 0; o < b.dom.cat->object_count(); ++o) EXPECT_EQ(b.map.obj(o), o);
  auto p = base_map(pick_zero());
  EXPECT_EQ(p.cod.cat->object(p.map.obj(0)), "id0");
}

TEST(AllFunctors, Counts) {
  EXPECT_EQ(all_functors(catalog::base("2"), catalog::base("2")).size(), 3u);
  EXPECT_EQ(all_functors(catalog::base("Z2"), catalog::base("Z2")).size(), 2u);
  EXPECT_EQ(all_functors(catalog::base("{1,e}"), catalog::base("{1,e}")).size(), 2u);
  EXPECT_EQ(all_functors(catalog::base("1"), catalog::base("3")).size(), 3u);
}

TEST(KanProperty, AgreesWithOracles) {
  const std::vector<std::string> bases{"1", "2", "Z2", "{1,e}"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        for (const auto& d : presheaves::enumerate(f.dom(), Variance::co, 2)) {
          EXPECT_TRUE(isomorphic(lan(f, d), oracles::lan_colimit(f, d))) << xn << "->" << yn;
          EXPECT_TRUE(isomorphic(ran(f, d), oracles::ran_limit(f, d))) << xn << "->" << yn;
        }
      }
    }
  }
}

TEST(KanProperty, AdjointTriple) {
  const std::vector<std::string> bases{"1", "2", "{1,e}"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        auto ds = presheaves::enumerate(f.dom(), Variance::co, 1);
        auto es = presheaves::enumerate(f.cod(), Variance::co, 1);
        for (const auto& d : ds) {
          Presheaf l = lan(f, d), r = ran(f, d);
          for (const auto& e : es) {
            Presheaf se = substitute(f, e);
            EXPECT_EQ(oracles::nat_count(l, e), oracles::nat_count(d, se));
            EXPECT_EQ(oracles::nat_count(se, d), oracles::nat_count(e, r));
          }
        }
      }
    }
  }
}

TEST(KanProperty, ContravariantViaOpposites) {
  auto two = catalog::base("2");
  auto f = to_point(two);
  Presheaf a = bipolar::testing::sample_a();
  Presheaf l = lan(f, a);
  EXPECT_EQ(l.variance(), Variance::contra);
  // colimit over a connected domain of A: {p, q, b} with b ~ p
  EXPECT_EQ(l.sizes(), std::vector<int>{2});
  EXPECT_EQ(ran(f, a).sizes(), std::vector<int>{1});
}

TEST(KanProperty, LanIsReflectionOfPushforward) {
  const std::vector<std::string> bases{"1", "2", "3", "{1,e}"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        for (const auto& d : presheaves::enumerate(f.dom(), Variance::co, 1)) {
          Presheaf via_reflect = reflect(post_compose(f, elements(d)), Side::closed).presheaf;
          EXPECT_TRUE(isomorphic(lan(f, d), via_reflect));
        }
      }
    }
  }
}

TEST(KanProperty, FrobeniusAndComponents) {
  const std::vector<std::string> bases{"1", "2", "Z2", "{1,e}"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        auto ps = catalog::standard_parts(f.dom());
        auto qs = catalog::standard_parts(f.cod());
        for (const auto& p : ps) {
          EXPECT_EQ(components(*p.part.total()).size(), components(*post_compose(f, p.part).total()).size());
          for (const auto& q : qs) {
            auto r = frobenius_check(f, p.part, q.part);
            EXPECT_TRUE(r.iso) << xn << "->" << yn << " " << p.name << " " << q.name << " " << r.witness;
          }
        }
      }
    }
  }
}

TEST(KanProperty, PullbackPreservesFibrations) {
  const std::vector<std::string> bases{"1", "2", "{1,e}"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        for (Variance v : {Variance::co, Variance::contra}) {
          for (const auto& d : presheaves::enumerate(f.cod(), v, 2)) {
            auto c = classify_part(pullback(f, elements(d)));
            EXPECT_TRUE(v == Variance::co ? c.dof() : c.df());
            EXPECT_TRUE(isomorphic(v == Variance::co ? *c.co : *c.contra, substitute(f, d)));
          }
        }
      }
    }
  }
}

TEST(KanProperty, BaseMapIsFunctorial) {
  const std::vector<std::string> bases{"1", "2", "{1,e}", "Z2"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        auto bf = base_map(f);
        for (const auto& zn : bases) {
          for (const auto& g : all_functors(f.cod(), catalog::base(zn))) {
            auto bg = base_map(g);
            auto bgf = base_map(compose(g, f));
            EXPECT_EQ(compose(bg.map, bf.map).obj_map(), bgf.map.obj_map());
            EXPECT_EQ(compose(bg.map, bf.map).arr_map(), bgf.map.arr_map());
          }
        }
      }
      auto id = base_map(FinFunctor::identity(catalog::base(xn)));
      EXPECT_EQ(id.map.arr_map(), FinFunctor::identity(id.dom.cat).arr_map());
    }
  }
}

TEST(KanProperty, AtomsArePreserved) {
  const std::vector<std::string> bases{"1", "2", "{1,e}", "Z2", "split"};
  for (const auto& xn : bases) {
    for (const auto& yn : bases) {
      for (const auto& f : all_functors(catalog::base(xn), catalog::base(yn))) {
        for (int e : catalog::idempotents(*f.dom())) {
          auto w = atom_check(parts::idempotent(f.dom(), e));
          ASSERT_TRUE(w.has_value());
          EXPECT_TRUE(push_biuniversal(f, *w).has_value()) << xn << "->" << yn;
        }
      }
    }
  }
}
