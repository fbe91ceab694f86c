#include "bipolar/part.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace bipolar {

// -------------------------------------------------------------------- Part

Part::Part(CatPtr base, CatPtr total, std::vector<int> obj_proj, std::vector<int> arr_proj, bool check)
    : base_(std::move(base)), total_(std::move(total)), obj_(std::move(obj_proj)), arr_(std::move(arr_proj)) {
  if (check) FinFunctor(total_, base_, obj_, arr_, true);
}

Part::Part(FinFunctor proj)
    : base_(proj.cod()), total_(proj.dom()), obj_(proj.obj_map()), arr_(proj.arr_map()) {}

FinFunctor Part::proj() const { return FinFunctor(total_, base_, obj_, arr_, false); }

std::vector<int> Part::fibre(int x) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(obj_.size()); ++a) {
    if (obj_[a] == x) out.push_back(a);
  }
  return out;
}

PartMorphism compose(const PartMorphism& g, const PartMorphism& f) {
  PartMorphism r;
  r.obj.reserve(f.obj.size());
  r.arr.reserve(f.arr.size());
  for (int a : f.obj) r.obj.push_back(g.obj[a]);
  for (int u : f.arr) r.arr.push_back(g.arr[u]);
  return r;
}

PartMorphism identity_morphism(const Part& p) {
  PartMorphism m;
  m.obj.resize(p.total()->object_count());
  m.arr.resize(p.total()->arrow_count());
  std::iota(m.obj.begin(), m.obj.end(), 0);
  std::iota(m.arr.begin(), m.arr.end(), 0);
  return m;
}

void require_same_base(const Part& p, const Part& q) {
  if (!same_category(p.base(), q.base())) throw Error(ErrorKind::BaseMismatch, "parts live over different bases");
}

void check_morphism(const Part& dom, const Part& cod, const PartMorphism& m) {
  require_same_base(dom, cod);
  FinFunctor(dom.total(), cod.total(), m.obj, m.arr, true);
  for (int a = 0; a < dom.total()->object_count(); ++a) {
    if (cod.over(m.obj[a]) != dom.over(a)) {
      throw Error(ErrorKind::NotFunctor, "object " + dom.total()->object(a) + " leaves its fibre");
    }
  }
  for (int u = 0; u < dom.total()->arrow_count(); ++u) {
    if (cod.over_arrow(m.arr[u]) != dom.over_arrow(u)) {
      throw Error(ErrorKind::NotFunctor, "arrow " + dom.total()->arrow(u) + " changes its base arrow");
    }
  }
}

// ---------------------------------------------------------------- Presheaf

const char* to_string(Variance v) { return v == Variance::co ? "co" : "contra"; }

Presheaf::Presheaf(CatPtr base, Variance variance, std::vector<std::vector<std::string>> fibres,
                   std::vector<std::vector<int>> trans, bool check)
    : base_(std::move(base)), variance_(variance) {
  const FinCat& c = *base_;
  if (static_cast<int>(fibres.size()) != c.object_count() || static_cast<int>(trans.size()) != c.arrow_count()) {
    throw Error(ErrorKind::Malformed, "presheaf data does not match its base");
  }
  std::vector<std::vector<int>> new_index(fibres.size());
  fibres_.resize(fibres.size());
  for (std::size_t x = 0; x < fibres.size(); ++x) {
    std::vector<int> order(fibres[x].size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fibres[x][a] < fibres[x][b]; });
    new_index[x].resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      new_index[x][order[i]] = static_cast<int>(i);
      fibres_[x].push_back(fibres[x][order[i]]);
    }
    for (std::size_t i = 1; i < fibres_[x].size(); ++i) {
      if (fibres_[x][i] == fibres_[x][i - 1]) {
        throw Error(ErrorKind::Malformed, "duplicate element '" + fibres_[x][i] + "' in a fibre", {fibres_[x][i]});
      }
    }
  }
  trans_.resize(trans.size());
  for (int f = 0; f < c.arrow_count(); ++f) {
    int from = trans_src(f), to = trans_tgt(f);
    if (trans[f].size() != fibres[from].size()) {
      throw Error(ErrorKind::NotFunctor, "transition of " + c.arrow(f) + " has the wrong domain", {c.arrow(f)});
    }
    trans_[f].assign(trans[f].size(), -1);
    for (std::size_t s = 0; s < trans[f].size(); ++s) {
      int t = trans[f][s];
      if (t < 0 || t >= static_cast<int>(fibres[to].size())) {
        throw Error(ErrorKind::NotFunctor, "transition of " + c.arrow(f) + " leaves its fibre", {c.arrow(f)});
      }
      trans_[f][new_index[from][s]] = new_index[to][t];
    }
  }
  if (!check) return;
  for (int x = 0; x < c.object_count(); ++x) {
    const auto& t = trans_[c.identity(x)];
    for (int s = 0; s < static_cast<int>(t.size()); ++s) {
      if (t[s] != s) throw Error(ErrorKind::NotFunctor, "identity of " + c.object(x) + " acts non-trivially");
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    for (int g : c.arrows_from(c.tgt(f))) {
      int gf = c.compose(g, f);
      // Covariant: D(g∘f) = Dg∘Df. Contravariant: A(g∘f) = Af∘Ag.
      int first = variance_ == Variance::co ? f : g;
      int second = variance_ == Variance::co ? g : f;
      for (int s = 0; s < static_cast<int>(trans_[gf].size()); ++s) {
        if (trans_[gf][s] != trans_[second][trans_[first][s]]) {
          throw Error(ErrorKind::NotFunctor, "composite " + c.arrow(g) + "∘" + c.arrow(f) + " is not respected",
                      {c.arrow(g), c.arrow(f)});
        }
      }
    }
  }
}

int Presheaf::trans_src(int f) const { return variance_ == Variance::co ? base_->src(f) : base_->tgt(f); }
int Presheaf::trans_tgt(int f) const { return variance_ == Variance::co ? base_->tgt(f) : base_->src(f); }

int Presheaf::find(int x, const std::string& element) const {
  auto it = std::lower_bound(fibres_[x].begin(), fibres_[x].end(), element);
  return (it != fibres_[x].end() && *it == element) ? static_cast<int>(it - fibres_[x].begin()) : -1;
}

std::vector<int> Presheaf::sizes() const {
  std::vector<int> out;
  for (const auto& f : fibres_) out.push_back(static_cast<int>(f.size()));
  return out;
}

long long Presheaf::total_size() const {
  long long n = 0;
  for (const auto& f : fibres_) n += static_cast<long long>(f.size());
  return n;
}

Presheaf Presheaf::on_opposite(const CatPtr& base_op) const {
  return Presheaf(base_op, flip(variance_), fibres_, trans_, false);
}

bool Presheaf::operator==(const Presheaf& o) const {
  return same_category(base_, o.base_) && variance_ == o.variance_ && fibres_ == o.fibres_ && trans_ == o.trans_;
}

// ----------------------------------------------------- natural transforms

namespace {

void require_compatible(const Presheaf& a, const Presheaf& b) {
  if (!same_category(a.base(), b.base())) throw Error(ErrorKind::BaseMismatch, "presheaves on different bases");
  if (a.variance() != b.variance()) throw Error(ErrorKind::BaseMismatch, "presheaves of different variance");
}

// Arrows whose naturality square only involves objects <= x, grouped by the
// largest object they touch.
std::vector<std::vector<int>> squares_by_object(const Presheaf& a) {
  const FinCat& c = *a.base();
  std::vector<std::vector<int>> out(c.object_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    out[std::max(c.src(f), c.tgt(f))].push_back(f);
  }
  return out;
}

bool square_commutes(const Presheaf& a, const Presheaf& b, const std::vector<std::vector<int>>& comps, int f) {
  int from = a.trans_src(f), to = a.trans_tgt(f);
  for (int s = 0; s < a.size(from); ++s) {
    if (comps[to][a.act(f, s)] != b.act(f, comps[from][s])) return false;
  }
  return true;
}

// Calls visit(map) for every function [0,n) -> [0,m) in lexicographic order;
// stops early when visit returns false.
bool for_each_function(int n, int m, const std::function<bool(const std::vector<int>&)>& visit) {
  if (n > 0 && m == 0) return true;
  std::vector<int> f(n, 0);
  while (true) {
    if (!visit(f)) return false;
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) return true;
    ++f[i];
  }
}

}  // namespace

bool is_natural(const Presheaf& a, const Presheaf& b, const NatTrans& t, int* bad_arrow) {
  require_compatible(a, b);
  const FinCat& c = *a.base();
  for (int x = 0; x < c.object_count(); ++x) {
    if (static_cast<int>(t.comps[x].size()) != a.size(x)) return false;
    for (int v : t.comps[x]) {
      if (v < 0 || v >= b.size(x)) return false;
    }
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (!square_commutes(a, b, t.comps, f)) {
      if (bad_arrow) *bad_arrow = f;
      return false;
    }
  }
  return true;
}

std::vector<NatTrans> natural_transformations(const Presheaf& a, const Presheaf& b) {
  require_compatible(a, b);
  const int n = a.base()->object_count();
  auto squares = squares_by_object(a);
  std::vector<NatTrans> out;
  std::vector<std::vector<int>> comps(n);
  std::function<void(int)> go = [&](int x) {
    if (x == n) {
      out.push_back({comps});
      return;
    }
    for_each_function(a.size(x), b.size(x), [&](const std::vector<int>& m) {
      comps[x] = m;
      bool ok = true;
      for (int f : squares[x]) ok = ok && square_commutes(a, b, comps, f);
      if (ok) go(x + 1);
      return true;
    });
  };
  go(0);
  return out;
}

NatTrans compose(const NatTrans& g, const NatTrans& f) {
  NatTrans r;
  r.comps.resize(f.comps.size());
  for (std::size_t x = 0; x < f.comps.size(); ++x) {
    for (int s : f.comps[x]) r.comps[x].push_back(g.comps[x][s]);
  }
  return r;
}

NatTrans identity_nat(const Presheaf& a) {
  NatTrans t;
  for (int x = 0; x < a.base()->object_count(); ++x) {
    t.comps.emplace_back(a.size(x));
    std::iota(t.comps.back().begin(), t.comps.back().end(), 0);
  }
  return t;
}

namespace {

// Elements of a presheaf numbered fibre by fibre.
struct Flat {
  std::vector<int> offset, object;
  explicit Flat(const Presheaf& p) {
    for (int x = 0; x < p.base()->object_count(); ++x) {
      offset.push_back(static_cast<int>(object.size()));
      object.insert(object.end(), p.size(x), x);
    }
  }
  int id(int x, int s) const { return offset[x] + s; }
  int size() const { return static_cast<int>(object.size()); }
};

// Colour refinement on both presheaves at once: an element's colour is its
// object, the colours of its images and the counts of its preimages.
std::pair<std::vector<int>, std::vector<int>> refine(const Presheaf& a, const Presheaf& b, const Flat& fa,
                                                     const Flat& fb) {
  const FinCat& c = *a.base();
  std::vector<int> ca(fa.object), cb(fb.object);
  int classes = c.object_count();
  for (;;) {
    std::map<std::vector<int>, int> palette;
    auto signatures = [&](const Presheaf& p, const Flat& fl, const std::vector<int>& col) {
      std::vector<std::vector<int>> sig(fl.size());
      for (int e = 0; e < fl.size(); ++e) sig[e].push_back(col[e]);
      for (int f = 0; f < c.arrow_count(); ++f) {
        int from = p.trans_src(f), to = p.trans_tgt(f);
        std::vector<std::map<int, int>> pre(p.size(to));
        for (int s = 0; s < p.size(from); ++s) {
          sig[fl.id(from, s)].push_back(col[fl.id(to, p.act(f, s))]);
          ++pre[p.act(f, s)][col[fl.id(from, s)]];
        }
        for (int t = 0; t < p.size(to); ++t) {
          auto& out = sig[fl.id(to, t)];
          out.push_back(-1 - f);
          for (auto [k, n] : pre[t]) out.insert(out.end(), {k, n});
        }
      }
      return sig;
    };
    auto sa = signatures(a, fa, ca), sb = signatures(b, fb, cb);
    for (auto* sig : {&sa, &sb})
      for (auto& v : *sig) palette.emplace(v, 0);
    int k = 0;
    for (auto& [v, id] : palette) id = k++;
    for (int e = 0; e < fa.size(); ++e) ca[e] = palette[sa[e]];
    for (int e = 0; e < fb.size(); ++e) cb[e] = palette[sb[e]];
    if (k == classes) return {ca, cb};
    classes = k;
  }
}

}  // namespace

bool isomorphic(const Presheaf& a, const Presheaf& b) {
  if (!same_category(a.base(), b.base()) || a.variance() != b.variance() || a.sizes() != b.sizes()) return false;
  const FinCat& c = *a.base();
  Flat fa(a), fb(b);
  auto [ca, cb] = refine(a, b, fa, fb);
  {
    auto x = ca, y = cb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::vector<int>> out(c.object_count());
  for (int f = 0; f < c.arrow_count(); ++f) out[a.trans_src(f)].push_back(f);

  const int n = fa.size();
  std::vector<int> to(n, -1), from(n, -1), trail;
  auto assign = [&](int s0, int t0) {
    std::vector<std::pair<int, int>> queue{{s0, t0}};
    while (!queue.empty()) {
      auto [s, t] = queue.back();
      queue.pop_back();
      if (to[s] == t) continue;
      if (to[s] >= 0 || from[t] >= 0 || ca[s] != cb[t]) return false;
      to[s] = t;
      from[t] = s;
      trail.push_back(s);
      int x = fa.object[s];
      for (int f : out[x]) {
        int y = a.trans_tgt(f);
        queue.push_back({fa.id(y, a.act(f, s - fa.offset[x])), fb.id(y, b.act(f, t - fb.offset[x]))});
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      int s = trail.back();
      trail.pop_back();
      from[to[s]] = -1;
      to[s] = -1;
    }
  };
  std::function<bool()> go = [&] {
    int s = -1;
    for (int e = 0; e < n && s < 0; ++e)
      if (to[e] < 0) s = e;
    if (s < 0) return true;
    for (int t = 0; t < n; ++t) {
      if (from[t] >= 0 || cb[t] != ca[s]) continue;
      std::size_t mark = trail.size();
      if (assign(s, t) && go()) return true;
      undo(mark);
    }
    return false;
  };
  return go();
}

// ---------------------------------------------------------------- elements

Elements elements_of(const Presheaf& p) {
  const FinCat& c = *p.base();
  const int n = c.object_count(), m = c.arrow_count();
  CategoryBuilder b;
  std::vector<std::vector<int>> obj(n), arr(m);
  std::vector<std::pair<int, int>> arrow_key;  // builder arrow -> (f, s)
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < p.size(x); ++s) obj[x].push_back(b.add_object(c.object(x) + "." + p.fibre(x)[s]));
  }
  for (int f = 0; f < m; ++f) {
    int from = p.trans_src(f), to = p.trans_tgt(f);
    for (int s = 0; s < p.size(from); ++s) {
      int a = obj[from][s], t = obj[to][p.act(f, s)];
      bool co = p.variance() == Variance::co;
      arr[f].push_back(b.add_arrow(c.arrow(f) + "@" + p.fibre(from)[s], co ? a : t, co ? t : a));
      arrow_key.push_back({f, s});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < p.size(x); ++s) b.set_identity(obj[x][s], arr[c.identity(x)][s]);
  }
  auto total = share(b.build(
      [&](int gi, int fi) {
        auto [g, sg] = arrow_key[gi];
        auto [f, sf] = arrow_key[fi];
        int gf = c.compose(g, f);
        return p.variance() == Variance::co ? arr[gf][sf] : arr[gf][sg];
      },
      false));

  Elements e;
  e.variance = p.variance();
  e.object_at.resize(n);
  e.lift.resize(m);
  e.element_of.resize(total->object_count());
  std::vector<int> obj_proj(total->object_count()), arr_proj(total->arrow_count());
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < p.size(x); ++s) {
      int o = total->find_object(c.object(x) + "." + p.fibre(x)[s]);
      e.object_at[x].push_back(o);
      e.element_of[o] = {x, s};
      obj_proj[o] = x;
    }
  }
  for (int f = 0; f < m; ++f) {
    int from = p.trans_src(f);
    for (int s = 0; s < p.size(from); ++s) {
      int u = total->find_arrow(c.arrow(f) + "@" + p.fibre(from)[s]);
      e.lift[f].push_back(u);
      arr_proj[u] = f;
    }
  }
  e.part = Part(p.base(), total, std::move(obj_proj), std::move(arr_proj), false);
  return e;
}

Part elements(const Presheaf& p) { return elements_of(p).part; }

PartMorphism to_part_morphism(const Elements& a, const Elements& b, const NatTrans& t) {
  const Part& pa = a.part;
  PartMorphism m;
  m.obj.resize(pa.total()->object_count());
  m.arr.resize(pa.total()->arrow_count());
  for (int o = 0; o < pa.total()->object_count(); ++o) {
    auto [x, s] = a.element_of[o];
    m.obj[o] = b.object_at[x][t.comps[x][s]];
  }
  const FinCat& c = *pa.base();
  for (int f = 0; f < c.arrow_count(); ++f) {
    for (std::size_t s = 0; s < a.lift[f].size(); ++s) {
      int from = a.variance == Variance::co ? c.src(f) : c.tgt(f);
      m.arr[a.lift[f][s]] = b.lift[f][t.comps[from][s]];
    }
  }
  return m;
}

NatTrans to_nat_trans(const Elements& a, const Elements& b, const PartMorphism& m) {
  NatTrans t;
  t.comps.resize(a.object_at.size());
  for (std::size_t x = 0; x < a.object_at.size(); ++x) {
    for (int o : a.object_at[x]) t.comps[x].push_back(b.element_of[m.obj[o]].second);
  }
  return t;
}

// ------------------------------------------------------- standard presheaves

namespace presheaves {

Presheaf representable(const CatPtr& base, int x, Variance v) {
  const FinCat& c = *base;
  std::vector<std::vector<std::string>> fib(c.object_count());
  std::vector<std::vector<int>> pos(c.object_count());  // arrows in each fibre, by base index
  for (int y = 0; y < c.object_count(); ++y) {
    pos[y] = v == Variance::co ? c.hom(x, y) : c.hom(y, x);
    for (int g : pos[y]) fib[y].push_back(c.arrow(g));
  }
  auto index_in = [&](int y, int g) {
    return static_cast<int>(std::find(pos[y].begin(), pos[y].end(), g) - pos[y].begin());
  };
  std::vector<std::vector<int>> trans(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (v == Variance::co) {
      for (int g : pos[c.src(f)]) trans[f].push_back(index_in(c.tgt(f), c.compose(f, g)));
    } else {
      for (int g : pos[c.tgt(f)]) trans[f].push_back(index_in(c.src(f), c.compose(g, f)));
    }
  }
  return Presheaf(base, v, fib, trans, false);
}

Presheaf constant(const CatPtr& base, const std::vector<std::string>& s) {
  const FinCat& c = *base;
  std::vector<std::vector<std::string>> fib(c.object_count(), s);
  std::vector<int> id(s.size());
  std::iota(id.begin(), id.end(), 0);
  return Presheaf(base, Variance::co, fib, std::vector<std::vector<int>>(c.arrow_count(), id), false);
}

Presheaf terminal(const CatPtr& base) { return constant(base, {"*"}); }

Presheaf empty(const CatPtr& base, Variance v) {
  return Presheaf(base, v, std::vector<std::vector<std::string>>(base->object_count()),
                  std::vector<std::vector<int>>(base->arrow_count()), false);
}

Presheaf product(const Presheaf& a, const Presheaf& b) {
  require_compatible(a, b);
  const FinCat& c = *a.base();
  std::vector<std::vector<std::string>> fib(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) {
    for (const auto& s : a.fibre(x))
      for (const auto& t : b.fibre(x)) fib[x].push_back("(" + s + "," + t + ")");
  }
  std::vector<std::vector<int>> trans(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    int from = a.trans_src(f), to = a.trans_tgt(f);
    for (int s = 0; s < a.size(from); ++s)
      for (int t = 0; t < b.size(from); ++t) trans[f].push_back(a.act(f, s) * b.size(to) + b.act(f, t));
  }
  return Presheaf(a.base(), a.variance(), fib, trans, false);
}

Presheaf sum(const Presheaf& a, const Presheaf& b) {
  require_compatible(a, b);
  const FinCat& c = *a.base();
  std::vector<std::vector<std::string>> fib(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) {
    for (const auto& s : a.fibre(x)) fib[x].push_back("0:" + s);
    for (const auto& t : b.fibre(x)) fib[x].push_back("1:" + t);
  }
  std::vector<std::vector<int>> trans(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    int from = a.trans_src(f), to = a.trans_tgt(f);
    for (int s = 0; s < a.size(from); ++s) trans[f].push_back(a.act(f, s));
    for (int t = 0; t < b.size(from); ++t) trans[f].push_back(a.size(to) + b.act(f, t));
  }
  return Presheaf(a.base(), a.variance(), fib, trans, false);
}

std::vector<Presheaf> enumerate(const CatPtr& base, Variance v, int max_size) {
  const FinCat& c = *base;
  const int n = c.object_count(), m = c.arrow_count();
  auto src = [&](int f) { return v == Variance::co ? c.src(f) : c.tgt(f); };
  auto tgt = [&](int f) { return v == Variance::co ? c.tgt(f) : c.src(f); };
  // Composites to check once arrow k has been assigned: all of (g, f, g∘f) are <= k.
  std::vector<std::vector<std::pair<int, int>>> checks(m);
  for (int f = 0; f < m; ++f) {
    for (int g : c.arrows_from(c.tgt(f))) {
      int gf = c.compose(g, f);
      checks[std::max({f, g, gf})].push_back({g, f});
    }
  }
  std::vector<Presheaf> out;
  std::vector<int> sizes(n, 0);
  std::vector<std::vector<int>> trans(m);
  std::function<void(int)> arrows = [&](int k) {
    if (k == m) {
      std::vector<std::vector<std::string>> fib(n);
      for (int x = 0; x < n; ++x)
        for (int s = 0; s < sizes[x]; ++s) fib[x].push_back(std::to_string(s));
      out.emplace_back(base, v, fib, trans, false);
      return;
    }
    auto consistent = [&]() {
      for (auto [g, f] : checks[k]) {
        int gf = c.compose(g, f);
        int first = v == Variance::co ? f : g, second = v == Variance::co ? g : f;
        for (int s = 0; s < sizes[src(gf)]; ++s) {
          if (trans[gf][s] != trans[second][trans[first][s]]) return false;
        }
      }
      return true;
    };
    if (c.is_identity(k)) {
      trans[k].resize(sizes[src(k)]);
      std::iota(trans[k].begin(), trans[k].end(), 0);
      if (consistent()) arrows(k + 1);
      return;
    }
    for_each_function(sizes[src(k)], sizes[tgt(k)], [&](const std::vector<int>& f) {
      trans[k] = f;
      if (consistent()) arrows(k + 1);
      return true;
    });
  };
  std::function<void(int)> objects = [&](int x) {
    if (x == n) {
      arrows(0);
      return;
    }
    for (int s = 0; s <= max_size; ++s) {
      sizes[x] = s;
      objects(x + 1);
    }
  };
  objects(0);
  return out;
}

}  // namespace presheaves

// ------------------------------------------------------------ standard parts

namespace parts {

Part identity(const CatPtr& base) {
  FinFunctor id = FinFunctor::identity(base);
  return Part(base, base, id.obj_map(), id.arr_map(), false);
}

Part object(const CatPtr& base, int x) {
  auto total = share(cats::discrete({base->object(x)}));
  return Part(base, total, {x}, {base->identity(x)}, false);
}

namespace {

Part from_arrow_category(const CatPtr& base, int s, int t, int f) {
  auto total = share(cats::arrow());
  // cats::arrow() orders arrows a, id0, id1 and objects 0, 1
  std::vector<int> arr(3);
  arr[total->find_arrow("a")] = f;
  arr[total->find_arrow("id0")] = base->identity(s);
  arr[total->find_arrow("id1")] = base->identity(t);
  return Part(base, total, {s, t}, arr, true);
}

}  // namespace

Part arrow(const CatPtr& base, int f) { return from_arrow_category(base, base->src(f), base->tgt(f), f); }

Part idempotent(const CatPtr& base, int e) {
  if (base->compose(e, e) != e) throw Error(ErrorKind::NotFunctor, base->arrow(e) + " is not idempotent");
  auto total = share(cats::idempotent_monoid());
  std::vector<int> arr(2);
  arr[total->find_arrow("1")] = base->identity(base->src(e));
  arr[total->find_arrow("e")] = e;
  return Part(base, total, {base->src(e)}, arr, true);
}

Part collapse(const CatPtr& base, int x) { return from_arrow_category(base, x, x, base->identity(x)); }

Part total_over_terminal(const FinCat& c) {
  auto base = share(cats::terminal());
  auto total = share(c);
  return Part(base, total, std::vector<int>(c.object_count(), 0), std::vector<int>(c.arrow_count(), 0), false);
}

Part empty(const CatPtr& base) {
  return Part(base, share(FinCat(CategoryBuilder().build([](int, int) { return -1; }))), {}, {}, false);
}

Part sum(const Part& p, const Part& q) {
  require_same_base(p, q);
  const FinCat& a = *p.total();
  const FinCat& b = *q.total();
  CategoryBuilder bld;
  for (int x = 0; x < a.object_count(); ++x) bld.add_object("0:" + a.object(x));
  for (int x = 0; x < b.object_count(); ++x) bld.add_object("1:" + b.object(x));
  const int na = a.object_count(), ma = a.arrow_count();
  for (int u = 0; u < ma; ++u) bld.add_arrow("0:" + a.arrow(u), a.src(u), a.tgt(u));
  for (int u = 0; u < b.arrow_count(); ++u) bld.add_arrow("1:" + b.arrow(u), na + b.src(u), na + b.tgt(u));
  for (int x = 0; x < na; ++x) bld.set_identity(x, a.identity(x));
  for (int x = 0; x < b.object_count(); ++x) bld.set_identity(na + x, ma + b.identity(x));
  auto total = share(bld.build(
      [&](int g, int f) { return f < ma ? a.compose(g, f) : ma + b.compose(g - ma, f - ma); }, false));
  std::vector<int> obj(total->object_count()), arr(total->arrow_count());
  for (int x = 0; x < na; ++x) obj[total->find_object("0:" + a.object(x))] = p.over(x);
  for (int x = 0; x < b.object_count(); ++x) obj[total->find_object("1:" + b.object(x))] = q.over(x);
  for (int u = 0; u < ma; ++u) arr[total->find_arrow("0:" + a.arrow(u))] = p.over_arrow(u);
  for (int u = 0; u < b.arrow_count(); ++u) arr[total->find_arrow("1:" + b.arrow(u))] = q.over_arrow(u);
  return Part(p.base(), total, obj, arr, false);
}

}  // namespace parts

}  // namespace bipolar
