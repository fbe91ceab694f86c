#include "bipolar/kan.hpp"

#include <functional>
#include <map>

namespace bipolar {

Presheaf substitute(const FinFunctor& f, const Presheaf& d) {
  if (!same_category(f.cod(), d.base())) throw Error(ErrorKind::BaseMismatch, "presheaf is not on the codomain");
  const FinCat& x = *f.dom();
  std::vector<std::vector<std::string>> fib(x.object_count());
  std::vector<std::vector<int>> trans(x.arrow_count());
  for (int o = 0; o < x.object_count(); ++o) fib[o] = d.fibre(f.obj(o));
  for (int u = 0; u < x.arrow_count(); ++u) trans[u] = d.trans(f.arr(u));
  return Presheaf(f.dom(), d.variance(), fib, trans, false);
}

Part post_compose(const FinFunctor& f, const Part& p) {
  if (!same_category(f.dom(), p.base())) throw Error(ErrorKind::BaseMismatch, "part is not over the domain");
  std::vector<int> obj, arr;
  for (int o : p.obj_proj()) obj.push_back(f.obj(o));
  for (int u : p.arr_proj()) arr.push_back(f.arr(u));
  return Part(f.cod(), p.total(), obj, arr, false);
}

Part pullback(const FinFunctor& f, const Part& q) {
  auto fp = fibre_product(post_compose(f, parts::identity(f.dom())), q);
  return Part(f.dom(), fp.part.total(), fp.to_p.obj, fp.to_p.arr, false);
}

namespace {

// g -> h∘g on ↓y -> ↓y' (contravariant) or g -> g∘h on ↑y' -> ↑y (covariant)
NatTrans representable_map(const CatPtr& base, int h, Variance v, const Presheaf& from, const Presheaf& to) {
  const FinCat& c = *base;
  NatTrans t;
  for (int z = 0; z < c.object_count(); ++z) {
    t.comps.emplace_back();
    for (const auto& g : from.fibre(z)) {
      int a = c.arrow_index(g);
      t.comps[z].push_back(to.find(z, c.arrow(v == Variance::contra ? c.compose(h, a) : c.compose(a, h))));
    }
  }
  return t;
}

NatTrans substitute(const FinFunctor& f, const NatTrans& t) {
  NatTrans out;
  for (int o = 0; o < f.dom()->object_count(); ++o) out.comps.push_back(t.comps[f.obj(o)]);
  return out;
}

std::string morphism_name(const Part& dom, const Part& cod, const PartMorphism& m) {
  const FinCat& d = *dom.total();
  const FinCat& c = *cod.total();
  std::string s = "[";
  for (std::size_t i = 0; i < m.obj.size(); ++i) s += (i ? "," : "") + c.object(m.obj[i]);
  bool first = true;
  for (std::size_t u = 0; u < m.arr.size(); ++u) {
    if (d.is_identity(static_cast<int>(u))) continue;
    s += (first ? "|" : ",") + c.arrow(m.arr[u]);
    first = false;
  }
  return s + "]";
}

struct Opposites {
  CatPtr dom, cod;
  FinFunctor f;
};

Opposites opposites(const FinFunctor& f) {
  Opposites o;
  o.dom = share(opposite(*f.dom()));
  o.cod = share(opposite(*f.cod()));
  o.f = opposite(f, o.dom, o.cod);
  return o;
}

Presheaf lan_covariant(const FinFunctor& f, const Presheaf& d) {
  const CatPtr& ybase = f.cod();
  const FinCat& y = *ybase;
  const int n = y.object_count();
  Elements ed = elements_of(d);
  std::vector<Presheaf> reps, pulled;
  std::vector<Elements> els;
  std::vector<TensorSet> tens;
  std::vector<std::vector<std::string>> fib(n);
  for (int b = 0; b < n; ++b) {
    reps.push_back(presheaves::representable(ybase, b, Variance::contra));
    pulled.push_back(substitute(f, reps.back()));
    els.push_back(elements_of(pulled.back()));
    tens.push_back(tensor(els.back().part, ed.part));
    const TensorSet& t = tens.back();
    for (int c = 0; c < t.size(); ++c) {
      fib[b].push_back(y.object(b) + "~" + t.product.part.total()->object(t.classes.rep(c)));
    }
  }
  PartMorphism id = identity_morphism(ed.part);
  std::vector<std::vector<int>> trans(y.arrow_count());
  for (int h = 0; h < y.arrow_count(); ++h) {
    int b = y.src(h), b2 = y.tgt(h);
    NatTrans post = substitute(f, representable_map(ybase, h, Variance::contra, reps[b], reps[b2]));
    trans[h] = tensor_map(tens[b], tens[b2], to_part_morphism(els[b], els[b2], post), id);
  }
  return Presheaf(ybase, Variance::co, fib, trans, false);
}

Presheaf ran_covariant(const FinFunctor& f, const Presheaf& d) {
  const CatPtr& ybase = f.cod();
  const FinCat& y = *ybase;
  const int n = y.object_count();
  Part pd = elements(d);
  std::vector<Presheaf> reps;
  std::vector<Elements> els;
  std::vector<std::vector<PartMorphism>> homs(n);
  std::vector<std::map<PartMorphism, int>> lookup(n);
  std::vector<std::vector<std::string>> fib(n);
  for (int b = 0; b < n; ++b) {
    reps.push_back(presheaves::representable(ybase, b, Variance::co));
    els.push_back(elements_of(substitute(f, reps.back())));
    std::vector<std::pair<std::string, PartMorphism>> named;
    for (auto& m : hom_over(els[b].part, pd)) {
      named.push_back({y.object(b) + "~" + morphism_name(els[b].part, pd, m), std::move(m)});
    }
    std::sort(named.begin(), named.end());
    for (auto& [name, m] : named) {
      lookup[b][m] = static_cast<int>(homs[b].size());
      homs[b].push_back(std::move(m));
      fib[b].push_back(std::move(name));
    }
  }
  std::vector<std::vector<int>> trans(y.arrow_count());
  for (int h = 0; h < y.arrow_count(); ++h) {
    int b = y.src(h), b2 = y.tgt(h);
    NatTrans pre = substitute(f, representable_map(ybase, h, Variance::co, reps[b2], reps[b]));
    PartMorphism m = to_part_morphism(els[b2], els[b], pre);
    for (const auto& xi : homs[b]) trans[h].push_back(lookup[b2].at(compose(xi, m)));
  }
  return Presheaf(ybase, Variance::co, fib, trans, false);
}

}  // namespace

Presheaf lan(const FinFunctor& f, const Presheaf& d) {
  if (!same_category(f.dom(), d.base())) throw Error(ErrorKind::BaseMismatch, "presheaf is not on the domain");
  if (d.variance() == Variance::co) return lan_covariant(f, d);
  auto o = opposites(f);
  return lan_covariant(o.f, d.on_opposite(o.dom)).on_opposite(f.cod());
}

Presheaf ran(const FinFunctor& f, const Presheaf& d) {
  if (!same_category(f.dom(), d.base())) throw Error(ErrorKind::BaseMismatch, "presheaf is not on the domain");
  if (d.variance() == Variance::co) return ran_covariant(f, d);
  auto o = opposites(f);
  return ran_covariant(o.f, d.on_opposite(o.dom)).on_opposite(f.cod());
}

FrobeniusReport frobenius_check(const FinFunctor& f, const Part& p, const Part& q) {
  Part fq = pullback(f, q);
  auto left = fibre_product(p, fq);                  // P × f★Q over dom
  auto right = fibre_product(post_compose(f, p), q);  // f_!P × Q over cod
  // f★Q has objects (x, b); its second projection lands in Q
  auto back = fibre_product(post_compose(f, parts::identity(f.dom())), q);
  const FinCat& lt = *left.part.total();
  FrobeniusReport r;
  r.phi.obj.resize(lt.object_count());
  r.phi.arr.resize(lt.arrow_count());
  for (int o = 0; o < lt.object_count(); ++o) {
    r.phi.obj[o] = right.find(left.to_p.obj[o], back.to_q.obj[left.to_q.obj[o]]);
  }
  std::map<std::pair<int, int>, int> right_arrows;
  for (int w = 0; w < right.part.total()->arrow_count(); ++w) right_arrows[{right.to_p.arr[w], right.to_q.arr[w]}] = w;
  for (int w = 0; w < lt.arrow_count(); ++w) {
    r.phi.arr[w] = right_arrows.at({left.to_p.arr[w], back.to_q.arr[left.to_q.arr[w]]});
  }
  check_morphism(post_compose(f, left.part), right.part, r.phi);
  auto bijective = [](const std::vector<int>& m, int n) {
    std::vector<bool> hit(n, false);
    for (int v : m) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return static_cast<int>(m.size()) == n;
  };
  const FinCat& rt = *right.part.total();
  if (!bijective(r.phi.obj, rt.object_count())) {
    r.iso = false;
    r.witness = "objects";
  } else if (!bijective(r.phi.arr, rt.arrow_count())) {
    r.iso = false;
    r.witness = "arrows";
  }
  return r;
}

BaseMap base_map(const FinFunctor& f) {
  BaseMap b{karoubi(f.dom()), karoubi(f.cod()), {}};
  const FinCat& y = *f.cod();
  const FinCat& kx = *b.dom.cat;
  const FinCat& ky = *b.cod.cat;
  std::vector<int> obj(kx.object_count()), arr(kx.arrow_count());
  for (int o = 0; o < kx.object_count(); ++o) obj[o] = ky.object_index(y.arrow(f.arr(b.dom.idempotent_of[o])));
  for (int u = 0; u < kx.arrow_count(); ++u) {
    int e = b.dom.idempotent_of[kx.src(u)], e2 = b.dom.idempotent_of[kx.tgt(u)];
    arr[u] = ky.arrow_index("<" + y.arrow(f.arr(e)) + "," + y.arrow(f.arr(b.dom.arrow_of[u])) + "," +
                            y.arrow(f.arr(e2)) + ">");
  }
  b.map = FinFunctor(b.dom.cat, b.cod.cat, obj, arr, true);
  return b;
}

std::optional<BiuniversalWitness> push_biuniversal(const FinFunctor& f, const BiuniversalWitness& w) {
  const TensorSet pp = tensor(w.part, w.part);
  auto [l, r] = pp.representative(w.u);
  Part fp = post_compose(f, w.part);
  TensorSet qq = tensor(fp, fp);
  int u = qq.class_of(l, r);
  BiuniversalWitness out;
  out.part = fp;
  out.u = u;
  out.u_name = qq.product.part.total()->object(qq.classes.rep(u));
  for (const auto& m : default_family(f.cod())) {
    if (!is_biuniversal(fp, qq, u, m.presheaf)) return std::nullopt;
    out.checked_family.push_back(m.name);
  }
  return out;
}

std::vector<FinFunctor> all_functors(const CatPtr& dom, const CatPtr& cod) {
  const FinCat& x = *dom;
  const FinCat& y = *cod;
  std::vector<FinFunctor> out;
  std::vector<int> obj(x.object_count()), arr(x.arrow_count(), -1);
  // arrows in index order, each constrained by its endpoints and earlier composites
  std::function<void(int)> assign_arrow = [&](int u) {
    if (u == x.arrow_count()) {
      for (int g = 0; g < x.arrow_count(); ++g) {
        for (int h : x.arrows_from(x.tgt(g))) {
          if (arr[x.compose(h, g)] != y.compose(arr[h], arr[g])) return;
        }
      }
      out.emplace_back(dom, cod, obj, arr, false);
      return;
    }
    if (x.is_identity(u)) {
      arr[u] = y.identity(obj[x.src(u)]);
      assign_arrow(u + 1);
      return;
    }
    for (int v : y.hom(obj[x.src(u)], obj[x.tgt(u)])) {
      arr[u] = v;
      assign_arrow(u + 1);
    }
  };
  std::function<void(int)> assign_object = [&](int o) {
    if (o == x.object_count()) {
      assign_arrow(0);
      return;
    }
    for (int t = 0; t < y.object_count(); ++t) {
      obj[o] = t;
      assign_object(o + 1);
    }
  };
  assign_object(0);
  return out;
}

}  // namespace bipolar
