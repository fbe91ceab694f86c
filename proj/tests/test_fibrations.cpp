#include <gtest/gtest.h>

#include "bipolar/catalog.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/oracles.hpp"
#include "bipolar/parts.hpp"
#include "helpers.hpp"

using namespace bipolar;
using bipolar::testing::make_presheaf;

namespace {

Presheaf down(const CatPtr& base, int x) { return presheaves::representable(base, x, Variance::contra); }
Presheaf up(const CatPtr& base, int x) { return presheaves::representable(base, x, Variance::co); }

}  // namespace

TEST(Classify, ElementsOfCovariantIsDof) {
  auto base = catalog::base("3");
  for (const auto& d : presheaves::enumerate(base, Variance::co, 2)) {
    EXPECT_TRUE(classify_part(elements(d)).dof());
  }
}

TEST(Classify, ObjectOverTargetIsDofOnly) {
  auto c = classify_part(parts::object(catalog::base("2"), 1));
  EXPECT_EQ(c.kind(), FibrationKind::dof);
}

TEST(Classify, IdentityIsBifibration) {
  for (const auto& name : catalog::base_names()) {
    EXPECT_EQ(classify_part(parts::identity(catalog::base(name))).kind(), FibrationKind::bifibration);
  }
}

TEST(Reflect, ObjectPartGivesRepresentables) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (int x = 0; x < base->object_count(); ++x) {
      Part p = parts::object(base, x);
      EXPECT_TRUE(isomorphic(reflect(p, Side::open).presheaf, down(base, x))) << name;
      EXPECT_TRUE(isomorphic(reflect(p, Side::closed).presheaf, up(base, x))) << name;
    }
  }
}

TEST(Reflect, IdempotentOverMonoid) {
  auto base = catalog::base("{1,e}");
  auto r = reflect(parts::idempotent(base, base->find_arrow("e")), Side::closed);
  EXPECT_EQ(r.presheaf.sizes(), std::vector<int>{1});
}

TEST(Reflect, ConnectedTotalOverPoint) {
  auto r = reflect(parts::total_over_terminal(cats::arrow()), Side::closed);
  EXPECT_EQ(r.presheaf.sizes(), std::vector<int>{1});
}

TEST(Reflect, FibreNamesUseRepresentatives) {
  auto base = catalog::base("2");
  auto r = reflect(parts::object(base, 0), Side::closed);
  EXPECT_EQ(r.presheaf.fibre(1), std::vector<std::string>{"1~<0,a>"});
}

TEST(Coreflect, IdentityGivesTerminal) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (Side s : {Side::open, Side::closed}) {
      auto r = coreflect(parts::identity(base), s);
      EXPECT_EQ(r.presheaf.sizes(), std::vector<int>(base->object_count(), 1)) << name;
    }
  }
}

TEST(Coreflect, ArrowCategoryOverPoint) {
  auto r = coreflect(parts::total_over_terminal(cats::arrow()), Side::closed);
  EXPECT_EQ(r.presheaf.sizes(), std::vector<int>{2});
}

TEST(Coreflect, DiscreteFibres) {
  auto base = catalog::base("2");
  auto total = share(cats::discrete({"p0", "q", "q'"}));
  Part p(base, total, {0, 1, 1}, {base->identity(0), base->identity(1), base->identity(1)});
  auto r = coreflect(p, Side::closed);
  EXPECT_EQ(r.presheaf.sizes(), (std::vector<int>{0, 2}));
}

TEST(Contrapose, YonedaImageRoundTrips) {
  auto base = catalog::base("2");
  Presheaf a = down(base, 0), b = down(base, 1);
  auto nats = natural_transformations(a, b);
  ASSERT_EQ(nats.size(), 1u);
  EXPECT_EQ(contrapose_inverse(a, b, contrapose(a, b, nats[0])), nats[0]);
}

TEST(Contrapose, IdentityRoundTrips) {
  Presheaf a = bipolar::testing::sample_a();
  EXPECT_EQ(contrapose_inverse(a, a, contrapose(a, a, identity_nat(a))), identity_nat(a));
}

TEST(Contrapose, BrokenSquareIsReported) {
  Presheaf a = bipolar::testing::sample_a();
  NatTrans swap{{{1, 0}, {0}}};
  ASSERT_FALSE(is_natural(a, a, swap));
  try {
    contrapose_inverse(a, a, negated_action(a, a, swap, a.sizes()));
    FAIL() << "expected NotNatural";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNatural);
    ASSERT_FALSE(e.witnesses().empty());
    EXPECT_EQ(e.witnesses()[0], "a");
  }
}

TEST(Contrapose, FamilyNotNaturalInS) {
  Presheaf a = bipolar::testing::sample_a();
  ContraFamily theta = contrapose(a, a, identity_nat(a));
  auto& at0 = theta.at[0];
  at0[{0, 0}] = {1, 1};
  EXPECT_THROW(contrapose_inverse(a, a, theta), Error);
}

TEST(ContraposeProperty, RoundTripOnAllTransformations) {
  for (const std::string name : {"1", "2", "Z2", "{1,e}", "a<b"}) {
    auto base = catalog::base(name);
    for (Variance v : {Variance::co, Variance::contra}) {
      auto ps = presheaves::enumerate(base, v, 2);
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& t : natural_transformations(a, b)) {
            EXPECT_EQ(contrapose_inverse(a, b, contrapose(a, b, t)), t);
          }
        }
      }
    }
  }
}

TEST(Groupoid, ArrowBecomesIndiscrete) {
  auto g = groupoid_reflection(catalog::base("2"));
  const FinCat& c = *g.groupoid;
  EXPECT_EQ(c.object_count(), 2);
  EXPECT_EQ(c.arrow_count(), 4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) EXPECT_EQ(c.hom(x, y).size(), 1u);
  EXPECT_TRUE(is_groupoid(c));
}

TEST(Groupoid, GroupIsFixed) {
  auto g = groupoid_reflection(catalog::base("Z2"));
  EXPECT_EQ(g.groupoid->arrow_count(), 2);
  EXPECT_NE(g.quotient.arr(catalog::base("Z2")->find_arrow("g")), g.groupoid->identity(0));
}

TEST(Groupoid, IdempotentCollapses) {
  auto g = groupoid_reflection(catalog::base("{1,e}"));
  EXPECT_EQ(g.groupoid->arrow_count(), 1);
}

TEST(Groupoid, CyclicGroupsAndBudget) {
  for (int n = 1; n <= 6; ++n) {
    auto base = share(cats::cyclic_group(n));
    EXPECT_EQ(groupoid_reflection(base).groupoid->arrow_count(), n);
  }
  try {
    groupoid_reflection(share(cats::cyclic_group(6)), 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Groupoid, QuotientIsUniversalOnSmallCases) {
  // every functor into Z2 from the base factors through the quotient
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto g = groupoid_reflection(base);
    EXPECT_TRUE(is_groupoid(*g.groupoid)) << name;
    EXPECT_EQ(components(*g.groupoid).size(), components(*base).size());
  }
}

TEST(Clopen, DownZeroOnArrowIsSingleton) {
  auto base = catalog::base("2");
  Presheaf r = clopen_reflect(elements(down(base, 0)));
  EXPECT_TRUE(isomorphic(r, presheaves::terminal(base)));
}

TEST(Clopen, ConstantIsFixed) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    Presheaf s = presheaves::constant(base, {"x", "y"});
    EXPECT_TRUE(isomorphic(clopen_reflect(elements(s)), s)) << name;
  }
}

TEST(Clopen, DiscreteBaseTakesComponentsFibrewise) {
  auto base = catalog::base("discrete-2");
  auto total = share(cats::arrow());
  Part p(base, total, {0, 0}, {base->identity(0), base->identity(0), base->identity(0)});
  Part q = parts::sum(p, parts::sum(parts::object(base, 1), parts::object(base, 1)));
  EXPECT_EQ(clopen_reflect(q).sizes(), (std::vector<int>{1, 2}));
}

TEST(Clopen, TransitionsAreInvertible) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      Presheaf r = clopen_reflect(np.part);
      auto c = classify_part(elements(r));
      EXPECT_EQ(c.kind(), FibrationKind::bifibration) << name << " " << np.name;
    }
  }
}

TEST(BooleanProperty, GroupoidBasesHaveOnlyBifibrations) {
  for (const std::string name : {"1", "Z2", "discrete-2"}) {
    auto base = catalog::base(name);
    ASSERT_TRUE(is_groupoid(*base));
    for (const auto& a : presheaves::enumerate(base, Variance::contra, 2)) {
      EXPECT_EQ(classify_part(elements(a)).kind(), FibrationKind::bifibration);
    }
  }
}

TEST(ReflectionProperty, AdjunctionCountsAndBijections) {
  for (const std::string name : {"1", "2", "{1,e}", "Z2", "a<b"}) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      for (Side side : {Side::open, Side::closed}) {
        Reflector r(np.part, side);
        Coreflector k(np.part, side);
        for (const auto& d : presheaves::enumerate(base, variance_of(side), 1)) {
          Part pd = elements(d);
          auto phis = hom_over(np.part, pd);
          auto alphas = natural_transformations(r.result().presheaf, d);
          EXPECT_EQ(phis.size(), alphas.size()) << name << " " << np.name;
          EXPECT_EQ(static_cast<long long>(alphas.size()), oracles::nat_count(r.result().presheaf, d));
          for (const auto& phi : phis) EXPECT_EQ(r.untranspose(d, r.transpose(d, phi)), phi);
          for (const auto& a : alphas) EXPECT_EQ(r.transpose(d, r.untranspose(d, a)), a);

          auto psis = hom_over(pd, np.part);
          auto betas = natural_transformations(d, k.result().presheaf);
          EXPECT_EQ(psis.size(), betas.size()) << name << " " << np.name;
          for (const auto& psi : psis) EXPECT_EQ(k.untranspose(d, k.transpose(d, psi)), psi);
          for (const auto& b : betas) EXPECT_EQ(k.transpose(d, k.untranspose(d, b)), b);
        }
      }
    }
  }
}

TEST(ReflectionProperty, UnitsAreMorphisms) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (const auto& np : catalog::standard_parts(base)) {
      for (Side side : {Side::open, Side::closed}) {
        auto r = reflect(np.part, side);
        EXPECT_NO_THROW(check_morphism(np.part, r.elements.part, r.unit)) << name << " " << np.name;
        auto k = coreflect(np.part, side);
        EXPECT_NO_THROW(check_morphism(k.elements.part, np.part, k.unit)) << name << " " << np.name;
      }
    }
  }
}

TEST(ReflectionProperty, FibrationsAreFixed) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (Side side : {Side::open, Side::closed}) {
      for (const auto& d : presheaves::enumerate(base, variance_of(side), 2)) {
        EXPECT_TRUE(isomorphic(reflect(elements(d), side).presheaf, d)) << name;
        EXPECT_TRUE(isomorphic(coreflect(elements(d), side).presheaf, d)) << name;
      }
    }
  }
}

TEST(ReflectionProperty, CoadjunctionAndYoneda) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto ps = catalog::standard_parts(base);
    for (const auto& p : ps) {
      Part down_p = reflect(p.part, Side::open).elements.part;
      for (const auto& q : ps) {
        Part up_q = reflect(q.part, Side::closed).elements.part;
        EXPECT_EQ(oracles::tensor_size(down_p, q.part), oracles::tensor_size(p.part, up_q))
            << name << " " << p.name << " " << q.name;
      }
    }
    for (const auto& a : presheaves::enumerate(base, Variance::contra, 2)) {
      Part pa = elements(a);
      for (int x = 0; x < base->object_count(); ++x) {
        EXPECT_EQ(oracles::hom_count(elements(down(base, x)), pa), a.size(x));
        EXPECT_EQ(oracles::tensor_size(pa, elements(up(base, x))), a.size(x));
      }
    }
  }
}
