#include <gtest/gtest.h>

#include "bipolar/atoms.hpp"
#include "bipolar/catalog.hpp"
#include "bipolar/kan.hpp"
#include "helpers.hpp"

using namespace bipolar;

namespace {

int arrow(const CatPtr& c, const char* name) { return c->arrow_index(name); }

std::vector<FamilyMember> representables_and_discretes(const CatPtr& base) {
  std::vector<FamilyMember> out;
  for (const auto& m : default_family(base)) {
    if (m.name.rfind("down ", 0) == 0 || m.name.rfind("up ", 0) == 0 || m.name.rfind("constant", 0) == 0) {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace

TEST(EventuallyIdempotent, Examples) {
  auto m = catalog::base("{1,e}");
  EXPECT_EQ(eventually_idempotent(*m, arrow(m, "e")), 1);
  auto z = catalog::base("Z2");
  EXPECT_EQ(eventually_idempotent(*z, arrow(z, "g")), std::nullopt);
  auto n = catalog::base("{1,a,0}");
  EXPECT_EQ(eventually_idempotent(*n, arrow(n, "a")), 2);
  EXPECT_EQ(n->arrow(idempotent_power(*n, arrow(n, "a"))), "0");
}

TEST(EventuallyIdempotent, NotEndo) {
  auto c = catalog::base("2");
  try {
    eventually_idempotent(*c, arrow(c, "a"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEndo);
  }
}

TEST(AtomCheck, ObjectPartOverArrow) {
  auto base = catalog::base("2");
  auto w = atom_check(parts::object(base, 0), representables_and_discretes(base));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->u, 0);
  EXPECT_FALSE(w->checked_family.empty());
}

TEST(AtomCheck, IdempotentPart) {
  auto base = catalog::base("{1,e}");
  EXPECT_TRUE(atom_check(parts::idempotent(base, arrow(base, "e"))).has_value());
}

TEST(AtomCheck, TwoPointsAreNotAnAtom) {
  auto base = catalog::base("1");
  Part two = parts::sum(parts::object(base, 0), parts::object(base, 0));
  EXPECT_FALSE(atom_check(two).has_value());
  Presheaf terminal_df(base, Variance::contra, {{"*"}}, {{0}});
  TensorSet pp = tensor(two, two);
  for (int u = 0; u < pp.size(); ++u) EXPECT_FALSE(is_biuniversal(two, pp, u, terminal_df));
}

TEST(AtomCheckProperty, ObjectsAndIdempotentsPass) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto family = default_family(base);
    for (int x = 0; x < base->object_count(); ++x) {
      EXPECT_TRUE(atom_check(parts::object(base, x), family).has_value()) << name;
    }
    for (int e : catalog::idempotents(*base)) {
      EXPECT_TRUE(atom_check(parts::idempotent(base, e), family).has_value()) << name << " " << base->arrow(e);
    }
  }
}

TEST(AtomCheckProperty, EventuallyIdempotentPower) {
  auto base = catalog::base("{1,a,0}");
  int e = idempotent_power(*base, arrow(base, "a"));
  EXPECT_TRUE(atom_check(parts::idempotent(base, e)).has_value());
}

TEST(Karoubi, IdempotentMonoid) {
  auto base = catalog::base("{1,e}");
  auto k = karoubi(base);
  const FinCat& c = *k.cat;
  ASSERT_EQ(c.object_count(), 2);
  // brute force over the monoid: f with f∘e = f = e'∘f
  for (int e : {0, 1}) {
    for (int e2 : {0, 1}) {
      int expected = 0;
      for (int f = 0; f < base->arrow_count(); ++f) {
        if (base->compose(f, e) == f && base->compose(e2, f) == f) ++expected;
      }
      int src = c.object_index(base->arrow(e)), tgt = c.object_index(base->arrow(e2));
      EXPECT_EQ(static_cast<int>(c.hom(src, tgt).size()), expected);
    }
  }
  EXPECT_EQ(c.hom(c.object_index("1"), c.object_index("1")).size(), 2u);
  EXPECT_EQ(c.hom(c.object_index("1"), c.object_index("e")).size(), 1u);
  EXPECT_EQ(c.hom(c.object_index("e"), c.object_index("1")).size(), 1u);
  EXPECT_EQ(c.hom(c.object_index("e"), c.object_index("e")).size(), 1u);
  EXPECT_TRUE(validate_category(c.spec()).ok());
}

TEST(Karoubi, ArrowAndGroupAreUnchanged) {
  for (const std::string name : {"2", "Z2"}) {
    auto base = catalog::base(name);
    auto k = karoubi(base);
    EXPECT_EQ(k.cat->object_count(), base->object_count());
    EXPECT_EQ(k.cat->arrow_count(), base->arrow_count());
    EXPECT_TRUE(is_equivalence(k.embedding));
  }
}

TEST(Karoubi, IdentityIsTheIdempotent) {
  auto base = catalog::base("{1,e}");
  auto k = karoubi(base);
  int o = k.cat->object_index("e");
  EXPECT_EQ(k.cat->arrow(k.cat->identity(o)), "<e,e,e>");
}

TEST(KaroubiProperty, EnvelopeIsIdempotentComplete) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto k = karoubi(base);
    std::string witness;
    EXPECT_TRUE(idempotents_split(*k.cat, &witness)) << name << " " << witness;
    auto kk = karoubi(k.cat);
    EXPECT_TRUE(is_equivalence(kk.embedding)) << name;
    EXPECT_EQ(is_equivalence(k.embedding), idempotents_split(*base)) << name;
  }
}

TEST(Retract, UpIdempotentIsRetractOfRepresentable) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (int e : catalog::idempotents(*base)) {
      for (Side side : {Side::open, Side::closed}) {
        EXPECT_TRUE(retract_of_representable(base, e, side).has_value()) << name << " " << base->arrow(e);
      }
    }
  }
}

TEST(Retract, SplitIdempotentGivesRepresentable) {
  auto base = catalog::base("split");
  int e = arrow(base, "e");
  int y = base->object_index("y");
  EXPECT_TRUE(isomorphic(idempotent_atom(base, e, Side::closed), presheaves::representable(base, y, Variance::co)));
  EXPECT_TRUE(
      isomorphic(idempotent_atom(base, e, Side::open), presheaves::representable(base, y, Variance::contra)));
}

TEST(Sigma, ArrowCategory) {
  auto base = catalog::base("2");
  DualitySigma s(base);
  ASSERT_EQ(s.pairs().size(), 2u);  // id0, id1
  EXPECT_EQ(s.down_homs(0, 1).size(), 1u);
  EXPECT_EQ(s.up_homs(1, 0).size(), 1u);
  EXPECT_EQ(s.sigma(0, 1, 0), 0);
  std::string why;
  EXPECT_TRUE(s.functorial(&why)) << why;
}

TEST(Sigma, IdempotentMonoid) {
  auto base = catalog::base("{1,e}");
  DualitySigma s(base);
  ASSERT_EQ(s.pairs().size(), 2u);  // 1, e
  EXPECT_EQ(s.down_homs(0, 1).size(), 1u);
  EXPECT_EQ(s.up_homs(1, 0).size(), 1u);
  std::string why;
  EXPECT_TRUE(s.functorial(&why)) << why;
}

TEST(SigmaProperty, FunctorialOnCatalog) {
  for (const auto& name : catalog::base_names()) {
    DualitySigma s(catalog::base(name));
    std::string why;
    EXPECT_TRUE(s.functorial(&why)) << name << ": " << why;
  }
}

TEST(Isbell, RepresentablesAreConjugate) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (int x = 0; x < base->object_count(); ++x) {
      Presheaf down = presheaves::representable(base, x, Variance::contra);
      Presheaf up = presheaves::representable(base, x, Variance::co);
      EXPECT_TRUE(isomorphic(isbell_conjugate(down), up)) << name;
      EXPECT_TRUE(isomorphic(isbell_conjugate(up), down)) << name;
    }
  }
}

TEST(Isbell, AtomicPairsAreCuts) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (int e : catalog::idempotents(*base)) {
      auto pair = atomic_pair(base, e);
      EXPECT_TRUE(is_dedekind_cut(pair.down, pair.up)) << name << " " << base->arrow(e);
    }
  }
}

TEST(Isbell, EmptyGivesTerminal) {
  auto base = catalog::base("3");
  Presheaf c = isbell_conjugate(presheaves::empty(base, Variance::contra));
  EXPECT_EQ(c.variance(), Variance::co);
  EXPECT_EQ(c.sizes(), std::vector<int>(3, 1));
}

TEST(Isbell, NonCut) {
  auto base = catalog::base("2");
  Presheaf two = presheaves::constant(base, {"0", "1"});
  Presheaf two_df(base, Variance::contra, two.fibres(), two.transitions());
  EXPECT_FALSE(is_dedekind_cut(two_df, two));
}

TEST(Evaluate, LeftMultiplication) {
  auto base = catalog::base("{1,e}");
  Presheaf self = presheaves::representable(base, 0, Variance::co);
  EXPECT_EQ(evaluate_at_atom(base, arrow(base, "e"), self), std::vector<std::string>{"e"});
  EXPECT_EQ(evaluate_at_atom(base, arrow(base, "1"), self), self.fibre(0));
}

TEST(Evaluate, ConstantGivesItsSet) {
  auto base = catalog::base("{1,e}");
  Presheaf s = presheaves::constant(base, {"p", "q", "r"});
  EXPECT_EQ(evaluate_at_atom(base, arrow(base, "e"), s), s.fibre(0));
}

TEST(EvaluateProperty, MatchesHomAndTensor) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    for (int e : catalog::idempotents(*base)) {
      Part pe = parts::idempotent(base, e);
      for (const auto& d : presheaves::enumerate(base, Variance::co, 2)) {
        auto fixed = evaluate_at_atom(base, e, d);
        EXPECT_EQ(hom_over(pe, elements(d)).size(), fixed.size()) << name;
        EXPECT_EQ(static_cast<std::size_t>(tensor(pe, elements(d)).size()), fixed.size()) << name;
      }
    }
  }
}

TEST(EvaluateProperty, PreservesProductsAndSums) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto ds = presheaves::enumerate(base, Variance::co, 1);
    for (int x = 0; x < base->object_count(); ++x) ds.push_back(presheaves::representable(base, x, Variance::co));
    for (int e : catalog::idempotents(*base)) {
      for (const auto& a : ds) {
        for (const auto& b : ds) {
          auto ea = evaluate_at_atom(base, e, a).size(), eb = evaluate_at_atom(base, e, b).size();
          EXPECT_EQ(evaluate_at_atom(base, e, presheaves::product(a, b)).size(), ea * eb);
          EXPECT_EQ(evaluate_at_atom(base, e, presheaves::sum(a, b)).size(), ea + eb);
        }
      }
    }
  }
}

TEST(KaroubiExtension, RestrictsBack) {
  for (const auto& name : catalog::base_names()) {
    auto base = catalog::base(name);
    auto k = karoubi(base);
    for (Variance v : {Variance::co, Variance::contra}) {
      for (const auto& a : presheaves::enumerate(base, v, 2)) {
        Presheaf ext = extend_to_karoubi(k, a);
        EXPECT_TRUE(isomorphic(substitute(k.embedding, ext), a)) << name;
        for (int o = 0; o < k.cat->object_count(); ++o) {
          EXPECT_EQ(static_cast<std::size_t>(ext.size(o)),
                    evaluate_at_atom(base, k.idempotent_of[o], a).size());
        }
      }
    }
  }
}
