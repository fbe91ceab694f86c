#include "bipolar/parts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bipolar/fibrations.hpp"
#include "bipolar/union_find.hpp"

namespace bipolar {

FibreProduct fibre_product(const Part& p, const Part& q) {
  require_same_base(p, q);
  const FinCat& a = *p.total();
  const FinCat& b = *q.total();
  CategoryBuilder bld;
  std::vector<std::pair<int, int>> obj_pairs, arr_pairs;
  std::map<std::pair<int, int>, int> obj_index, arr_index;
  for (int x = 0; x < a.object_count(); ++x) {
    for (int y = 0; y < b.object_count(); ++y) {
      if (p.over(x) != q.over(y)) continue;
      obj_index[{x, y}] = bld.add_object("(" + a.object(x) + "," + b.object(y) + ")");
      obj_pairs.push_back({x, y});
    }
  }
  for (int u = 0; u < a.arrow_count(); ++u) {
    for (int v = 0; v < b.arrow_count(); ++v) {
      if (p.over_arrow(u) != q.over_arrow(v)) continue;
      int s = obj_index.at({a.src(u), b.src(v)}), t = obj_index.at({a.tgt(u), b.tgt(v)});
      arr_index[{u, v}] = bld.add_arrow("(" + a.arrow(u) + "," + b.arrow(v) + ")", s, t);
      arr_pairs.push_back({u, v});
    }
  }
  for (const auto& [xy, o] : obj_index) bld.set_identity(o, arr_index.at({a.identity(xy.first), b.identity(xy.second)}));
  auto total = share(bld.build(
      [&](int g, int f) {
        return arr_index.at({a.compose(arr_pairs[g].first, arr_pairs[f].first),
                             b.compose(arr_pairs[g].second, arr_pairs[f].second)});
      },
      false));

  FibreProduct fp;
  const int n = total->object_count(), m = total->arrow_count();
  std::vector<int> obj_proj(n), arr_proj(m);
  fp.pair_of.resize(n);
  fp.to_p.obj.resize(n);
  fp.to_q.obj.resize(n);
  fp.to_p.arr.resize(m);
  fp.to_q.arr.resize(m);
  for (const auto& [x, y] : obj_pairs) {
    int o = total->find_object("(" + a.object(x) + "," + b.object(y) + ")");
    fp.pair_of[o] = {x, y};
    fp.object_of[{x, y}] = o;
    fp.to_p.obj[o] = x;
    fp.to_q.obj[o] = y;
    obj_proj[o] = p.over(x);
  }
  for (const auto& [u, v] : arr_pairs) {
    int w = total->find_arrow("(" + a.arrow(u) + "," + b.arrow(v) + ")");
    fp.to_p.arr[w] = u;
    fp.to_q.arr[w] = v;
    arr_proj[w] = p.over_arrow(u);
  }
  fp.part = Part(p.base(), total, std::move(obj_proj), std::move(arr_proj), false);
  return fp;
}

Comma comma(const Part& p, int x, CommaSide side) {
  const FinCat& base = *p.base();
  const FinCat& t = *p.total();
  if (x < 0 || x >= base.object_count()) throw Error(ErrorKind::UnknownObject, "object index out of range");
  const bool over = side == CommaSide::over;
  auto base_arrows = [&](int a) { return over ? base.hom(p.over(a), x) : base.hom(x, p.over(a)); };
  auto oname = [&](int a, int f) { return "<" + t.object(a) + "," + base.arrow(f) + ">"; };

  CategoryBuilder bld;
  std::map<std::pair<int, int>, int> obj;
  for (int a = 0; a < t.object_count(); ++a) {
    for (int f : base_arrows(a)) obj[{a, f}] = bld.add_object(oname(a, f));
  }
  // over: arrow (u, g) : (a, g∘πu) -> (b, g). under: arrow (u, f) : (a, f) -> (b, πu∘f).
  std::map<std::pair<int, int>, int> arr;
  std::vector<std::pair<int, int>> key;
  for (int u = 0; u < t.arrow_count(); ++u) {
    int a = t.src(u), b = t.tgt(u);
    for (int h : base_arrows(over ? b : a)) {
      int other = over ? base.compose(h, p.over_arrow(u)) : base.compose(p.over_arrow(u), h);
      int s = over ? obj.at({a, other}) : obj.at({a, h});
      int d = over ? obj.at({b, h}) : obj.at({b, other});
      arr[{u, h}] = bld.add_arrow("<" + t.arrow(u) + "," + base.arrow(h) + ">", s, d);
      key.push_back({u, h});
    }
  }
  for (const auto& [af, o] : obj) bld.set_identity(o, arr.at({t.identity(af.first), af.second}));
  Comma c;
  c.cat = bld.build(
      [&](int g, int f) {
        // over: (v, h)∘(u, g') = (v∘u, h). under: (v, g')∘(u, f) = (v∘u, f).
        int vu = t.compose(key[g].first, key[f].first);
        return arr.at({vu, over ? key[g].second : key[f].second});
      },
      false);
  c.object_of.resize(c.cat.object_count());
  for (const auto& [af, o] : obj) {
    int idx = c.cat.find_object(oname(af.first, af.second));
    c.object_of[idx] = af;
    c.index[af] = idx;
  }
  return c;
}

std::vector<PartMorphism> hom_over(const Part& p, const Part& q) {
  require_same_base(p, q);
  const FinCat& a = *p.total();
  const FinCat& b = *q.total();
  const int n = a.object_count(), m = a.arrow_count();

  std::vector<std::vector<int>> obj_cands(n);
  for (int x = 0; x < n; ++x) obj_cands[x] = q.fibre(p.over(x));

  // Non-identity arrows in index order; identities follow their objects.
  std::vector<int> order, rank(m, -1);
  for (int u = 0; u < m; ++u) {
    if (!a.is_identity(u)) {
      rank[u] = static_cast<int>(order.size());
      order.push_back(u);
    }
  }
  std::vector<std::vector<int>> arrows_closing(n);  // arrows whose later endpoint is x
  for (int u : order) arrows_closing[std::max(a.src(u), a.tgt(u))].push_back(u);
  std::vector<std::vector<std::pair<int, int>>> checks(order.size());
  for (int f = 0; f < m; ++f) {
    for (int g : a.arrows_from(a.tgt(f))) {
      int r = std::max({rank[f], rank[g], rank[a.compose(g, f)]});
      if (r >= 0) checks[r].push_back({g, f});
    }
  }

  std::vector<PartMorphism> out;
  PartMorphism cur;
  cur.obj.assign(n, -1);
  cur.arr.assign(m, -1);
  auto candidates = [&](int u) {
    std::vector<int> c;
    for (int v : b.hom(cur.obj[a.src(u)], cur.obj[a.tgt(u)])) {
      if (q.over_arrow(v) == p.over_arrow(u)) c.push_back(v);
    }
    return c;
  };
  std::function<void(std::size_t)> assign_arrows = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    int u = order[k];
    for (int v : candidates(u)) {
      cur.arr[u] = v;
      bool ok = true;
      for (auto [g, f] : checks[k]) {
        if (cur.arr[a.compose(g, f)] != b.compose(cur.arr[g], cur.arr[f])) {
          ok = false;
          break;
        }
      }
      if (ok) assign_arrows(k + 1);
    }
    cur.arr[u] = -1;
  };
  std::function<void(int)> assign_objects = [&](int x) {
    if (x == n) {
      for (int y = 0; y < n; ++y) cur.arr[a.identity(y)] = b.identity(cur.obj[y]);
      assign_arrows(0);
      return;
    }
    for (int y : obj_cands[x]) {
      cur.obj[x] = y;
      bool ok = true;
      for (int u : arrows_closing[x]) {
        if (candidates(u).empty()) {
          ok = false;
          break;
        }
      }
      if (ok) assign_objects(x + 1);
    }
    cur.obj[x] = -1;
  };
  assign_objects(0);
  return out;
}

TensorSet tensor(const Part& p, const Part& q) {
  TensorSet t;
  t.product = fibre_product(p, q);
  t.classes = components(*t.product.part.total());
  return t;
}

std::vector<int> tensor_map(const TensorSet& from, const TensorSet& to, const PartMorphism& alpha,
                            const PartMorphism& beta) {
  std::vector<int> out;
  for (int c = 0; c < from.size(); ++c) {
    auto [l, r] = from.representative(c);
    out.push_back(to.class_of(alpha.obj[l], beta.obj[r]));
  }
  return out;
}

// ---------------------------------------------------------------- negation

std::string function_name(const std::vector<int>& h, const std::vector<std::string>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + s[h[i]];
  return out + "]";
}

namespace {

// All functions [0,n) -> [0,m) in lexicographic order; index = base-m digits.
std::vector<std::vector<int>> all_functions(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n > 0 && m == 0) return out;
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) return out;
    ++f[i];
  }
}

int function_index(const std::vector<int>& h, int m) {
  int idx = 0;
  for (int v : h) idx = idx * m + v;
  return idx;
}

void check_size(long long n, const char* what) {
  if (n > kFunctionSetLimit) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " larger than " + std::to_string(kFunctionSetLimit));
  }
}

// Fibres Set(Ax, Tx) with transitions h -> T(f)∘h∘A(f); T given by `target`
// (sizes) and `act_t` (its action), A contributes by precomposition.
Presheaf function_presheaf(const Presheaf& a, Variance result, const std::vector<std::vector<std::string>>& target,
                           const std::function<int(int, int)>& act_t) {
  const FinCat& c = *a.base();
  const int n = c.object_count();
  std::vector<std::vector<std::vector<int>>> funcs(n);
  std::vector<std::vector<std::string>> fib(n);
  for (int x = 0; x < n; ++x) {
    check_size(a.size(x), "fibre");
    check_size(static_cast<long long>(target[x].size()), "target set");
    funcs[x] = all_functions(a.size(x), static_cast<int>(target[x].size()));
    for (const auto& h : funcs[x]) fib[x].push_back(function_name(h, target[x]));
  }
  std::vector<std::vector<int>> trans(c.arrow_count());
  for (int f = 0; f < c.arrow_count(); ++f) {
    // h lives over the source of the result's transition = a.trans_tgt(f).
    int from = a.trans_tgt(f), to = a.trans_src(f);
    for (const auto& h : funcs[from]) {
      std::vector<int> g(a.size(to));
      for (int s = 0; s < a.size(to); ++s) g[s] = act_t(f, h[a.act(f, s)]);
      trans[f].push_back(function_index(g, static_cast<int>(target[to].size())));
    }
  }
  return Presheaf(a.base(), result, fib, trans, false);
}

Presheaf extract_fibration(const Part& p, bool prefer_df, bool& is_df) {
  auto cls = classify_part(p);
  if (prefer_df && cls.contra) {
    is_df = true;
    return *cls.contra;
  }
  if (cls.co) {
    is_df = false;
    return *cls.co;
  }
  if (cls.contra) {
    is_df = true;
    return *cls.contra;
  }
  throw Error(ErrorKind::NotFibration, "part is neither a discrete fibration nor an opfibration");
}

}  // namespace

Presheaf negation(const Presheaf& a, const std::vector<std::string>& s) {
  check_size(static_cast<long long>(s.size()), "value set");
  std::vector<std::vector<std::string>> target(a.base()->object_count(), s);
  return function_presheaf(a, flip(a.variance()), target, [](int, int v) { return v; });
}

Part negation(const Part& a, const std::vector<std::string>& s) {
  bool is_df = false;
  Presheaf pa = extract_fibration(a, true, is_df);
  return elements(negation(pa, s));
}

Presheaf exp_mixed(const Presheaf& a, const Presheaf& d) {
  if (!same_category(a.base(), d.base())) throw Error(ErrorKind::BaseMismatch, "presheaves on different bases");
  if (a.variance() == d.variance()) {
    throw Error(ErrorKind::NotFibration, "mixed exponential needs one df and one dof");
  }
  return function_presheaf(a, d.variance(), d.fibres(), [&](int f, int v) { return d.act(f, v); });
}

Part exp_mixed(const Part& a, const Part& d) {
  require_same_base(a, d);
  auto ca = classify_part(a);
  auto cd = classify_part(d);
  if (ca.contra && cd.co) return elements(exp_mixed(*ca.contra, *cd.co));
  if (ca.co && cd.contra) return elements(exp_mixed(*ca.co, *cd.contra));
  throw Error(ErrorKind::NotFibration, "mixed exponential needs a df and a dof");
}

// ------------------------------------------------------ factorization lift

LiftingReport factorization_lifting(const Part& p) {
  const FinCat& base = *p.base();
  const FinCat& t = *p.total();
  std::vector<std::vector<int>> over(base.arrow_count());
  for (int u = 0; u < t.arrow_count(); ++u) over[p.over_arrow(u)].push_back(u);

  for (int f = 0; f < base.arrow_count(); ++f) {
    for (int g : base.arrows_from(base.tgt(f))) {
      int gf = base.compose(g, f);
      int y = base.tgt(f);
      for (int a : p.fibre(base.src(f))) {
        for (int c : p.fibre(base.tgt(g))) {
          std::vector<std::pair<int, int>> pairs;
          std::map<std::pair<int, int>, int> index;
          for (int u : over[f]) {
            if (t.src(u) != a) continue;
            for (int v : over[g]) {
              if (t.src(v) == t.tgt(u) && t.tgt(v) == c) {
                index[{u, v}] = static_cast<int>(pairs.size());
                pairs.push_back({u, v});
              }
            }
          }
          UnionFind uf(static_cast<int>(pairs.size()));
          // (w∘u, v') ~ (u, v'∘w) for w in the fibre over y
          for (int w : over[base.identity(y)]) {
            for (int u : over[f]) {
              if (t.src(u) != a || t.tgt(u) != t.src(w)) continue;
              for (int v : over[g]) {
                if (t.src(v) != t.tgt(w) || t.tgt(v) != c) continue;
                uf.unite(index.at({t.compose(w, u), v}), index.at({u, t.compose(v, w)}));
              }
            }
          }
          std::map<int, int> image;  // composite -> class root
          for (std::size_t i = 0; i < pairs.size(); ++i) {
            int comp = t.compose(pairs[i].second, pairs[i].first);
            int root = uf.find(static_cast<int>(i));
            auto [it, inserted] = image.emplace(comp, root);
            if (!inserted && it->second != root) {
              return {false, "two classes compose to " + t.arrow(comp) + " over " + base.arrow(gf)};
            }
          }
          for (int w : over[gf]) {
            if (t.src(w) == a && t.tgt(w) == c && !image.count(w)) {
              return {false, t.arrow(w) + " over " + base.arrow(g) + "∘" + base.arrow(f) + " does not factor"};
            }
          }
        }
      }
    }
  }
  return {};
}

}  // namespace bipolar
