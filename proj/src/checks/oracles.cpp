#include "bipolar/oracles.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "bipolar/union_find.hpp"

namespace bipolar::oracles {

namespace {

// Visits every tuple in the product of the candidate lists.
void odometer(const std::vector<std::vector<int>>& choices, const std::function<void(const std::vector<int>&)>& visit) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<int> cur(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) cur[i] = choices[i][pos[i]];
    visit(cur);
    std::size_t i = 0;
    while (i < choices.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == choices.size()) return;
  }
}

}  // namespace

long long power(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) r *= base;
  return r;
}

long long hom_count(const Part& p, const Part& q) {
  const FinCat& s = *p.total();
  const FinCat& t = *q.total();
  std::vector<std::vector<int>> obj_choices(s.object_count());
  for (int a = 0; a < s.object_count(); ++a) {
    for (int b = 0; b < t.object_count(); ++b) {
      if (q.over(b) == p.over(a)) obj_choices[a].push_back(b);
    }
  }
  long long count = 0;
  if (s.object_count() == 0) return 1;
  odometer(obj_choices, [&](const std::vector<int>& om) {
    std::vector<std::vector<int>> arr_choices(s.arrow_count());
    for (int u = 0; u < s.arrow_count(); ++u) {
      for (int v = 0; v < t.arrow_count(); ++v) {
        if (q.over_arrow(v) == p.over_arrow(u) && t.src(v) == om[s.src(u)] && t.tgt(v) == om[s.tgt(u)]) {
          arr_choices[u].push_back(v);
        }
      }
    }
    odometer(arr_choices, [&](const std::vector<int>& am) {
      for (int a = 0; a < s.object_count(); ++a) {
        if (am[s.identity(a)] != t.identity(om[a])) return;
      }
      for (int f = 0; f < s.arrow_count(); ++f) {
        for (int g = 0; g < s.arrow_count(); ++g) {
          int gf = s.compose(g, f);
          if (gf >= 0 && am[gf] != t.compose(am[g], am[f])) return;
        }
      }
      ++count;
    });
  });
  return count;
}

int tensor_size(const Part& p, const Part& q) {
  const FinCat& s = *p.total();
  const FinCat& t = *q.total();
  const int n = t.object_count();
  UnionFind uf(s.object_count() * n);
  std::vector<bool> present(s.object_count() * n, false);
  for (int a = 0; a < s.object_count(); ++a) {
    for (int b = 0; b < n; ++b) present[a * n + b] = p.over(a) == q.over(b);
  }
  for (int u = 0; u < s.arrow_count(); ++u) {
    for (int v = 0; v < t.arrow_count(); ++v) {
      if (p.over_arrow(u) == q.over_arrow(v)) uf.unite(s.src(u) * n + t.src(v), s.tgt(u) * n + t.tgt(v));
    }
  }
  int count = 0;
  for (int i = 0; i < static_cast<int>(present.size()); ++i) {
    if (present[i] && uf.find(i) == i) ++count;
  }
  return count;
}

int coend_size(const Presheaf& a, const Presheaf& d) {
  const FinCat& c = *a.base();
  std::vector<int> offset(c.object_count() + 1, 0);
  for (int x = 0; x < c.object_count(); ++x) offset[x + 1] = offset[x] + a.size(x) * d.size(x);
  UnionFind uf(offset.back());
  // (A(f)s, t) ~ (s, D(f)t) for f: x -> y, s in Ay, t in Dx
  for (int f = 0; f < c.arrow_count(); ++f) {
    int x = c.src(f), y = c.tgt(f);
    for (int s = 0; s < a.size(y); ++s) {
      for (int t = 0; t < d.size(x); ++t) {
        uf.unite(offset[x] + a.act(f, s) * d.size(x) + t, offset[y] + s * d.size(y) + d.act(f, t));
      }
    }
  }
  int count = 0;
  for (int i = 0; i < offset.back(); ++i) count += uf.find(i) == i ? 1 : 0;
  return count;
}

long long nat_count(const Presheaf& a, const Presheaf& b) {
  const FinCat& c = *a.base();
  // one choice per (object, element): its image
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> choices;
  for (int x = 0; x < c.object_count(); ++x) {
    for (int s = 0; s < a.size(x); ++s) {
      slots.push_back({x, s});
      std::vector<int> img(b.size(x));
      std::iota(img.begin(), img.end(), 0);
      choices.push_back(img);
    }
  }
  if (slots.empty()) return 1;
  long long count = 0;
  odometer(choices, [&](const std::vector<int>& v) {
    std::vector<std::vector<int>> comp(c.object_count());
    for (std::size_t i = 0; i < slots.size(); ++i) comp[slots[i].first].push_back(v[i]);
    for (int f = 0; f < c.arrow_count(); ++f) {
      int from = a.trans_src(f), to = a.trans_tgt(f);
      for (int s = 0; s < a.size(from); ++s) {
        if (comp[to][a.act(f, s)] != b.act(f, comp[from][s])) return;
      }
    }
    ++count;
  });
  return count;
}

Presheaf lan_colimit(const FinFunctor& f, const Presheaf& d) {
  const FinCat& x = *f.dom();
  const FinCat& y = *f.cod();
  // triples (o, g: f(o) -> b, s in D(o)) indexed per b
  struct Triple {
    int o, g, s;
  };
  std::vector<std::vector<Triple>> triples(y.object_count());
  std::vector<std::map<std::tuple<int, int, int>, int>> index(y.object_count());
  for (int b = 0; b < y.object_count(); ++b) {
    for (int o = 0; o < x.object_count(); ++o) {
      for (int g : y.hom(f.obj(o), b)) {
        for (int s = 0; s < d.size(o); ++s) {
          index[b][{o, g, s}] = static_cast<int>(triples[b].size());
          triples[b].push_back({o, g, s});
        }
      }
    }
  }
  std::vector<std::vector<int>> cls(y.object_count());
  std::vector<std::vector<std::string>> fib(y.object_count());
  for (int b = 0; b < y.object_count(); ++b) {
    UnionFind uf(static_cast<int>(triples[b].size()));
    // (o, g∘f(u), s) ~ (o', g, D(u)s) for u: o -> o'
    for (int u = 0; u < x.arrow_count(); ++u) {
      int o = x.src(u), o2 = x.tgt(u);
      for (int g : y.hom(f.obj(o2), b)) {
        for (int s = 0; s < d.size(o); ++s) {
          uf.unite(index[b].at({o, y.compose(g, f.arr(u)), s}), index[b].at({o2, g, d.act(u, s)}));
        }
      }
    }
    std::map<int, int> root_to_class;
    for (int i = 0; i < static_cast<int>(triples[b].size()); ++i) {
      int r = uf.find(i);
      if (!root_to_class.count(r)) {
        root_to_class[r] = static_cast<int>(fib[b].size());
        fib[b].push_back("c" + std::to_string(fib[b].size()));
      }
      cls[b].push_back(root_to_class[r]);
    }
  }
  std::vector<std::vector<int>> trans(y.arrow_count());
  for (int h = 0; h < y.arrow_count(); ++h) {
    int b = y.src(h), b2 = y.tgt(h);
    trans[h].assign(fib[b].size(), -1);
    for (std::size_t i = 0; i < triples[b].size(); ++i) {
      const Triple& t = triples[b][i];
      trans[h][cls[b][i]] = cls[b2][index[b2].at({t.o, y.compose(h, t.g), t.s})];
    }
  }
  return Presheaf(f.cod(), Variance::co, fib, trans, true);
}

Presheaf ran_limit(const FinFunctor& f, const Presheaf& d) {
  const FinCat& x = *f.dom();
  const FinCat& y = *f.cod();
  std::vector<std::vector<std::vector<int>>> families(y.object_count());
  std::vector<std::vector<std::pair<int, int>>> slots(y.object_count());  // (o, g: b -> f(o))
  std::vector<std::map<std::pair<int, int>, int>> slot_of(y.object_count());
  for (int b = 0; b < y.object_count(); ++b) {
    std::vector<std::vector<int>> choices;
    for (int o = 0; o < x.object_count(); ++o) {
      for (int g : y.hom(b, f.obj(o))) {
        slot_of[b][{o, g}] = static_cast<int>(slots[b].size());
        slots[b].push_back({o, g});
        std::vector<int> c(d.size(o));
        std::iota(c.begin(), c.end(), 0);
        choices.push_back(c);
      }
    }
    auto compatible = [&](const std::vector<int>& fam) {
      for (std::size_t i = 0; i < slots[b].size(); ++i) {
        auto [o, g] = slots[b][i];
        for (int u : x.arrows_from(o)) {
          int j = slot_of[b].at({x.tgt(u), y.compose(f.arr(u), g)});
          if (d.act(u, fam[i]) != fam[j]) return false;
        }
      }
      return true;
    };
    if (choices.empty()) {
      families[b].push_back({});
    } else {
      odometer(choices, [&](const std::vector<int>& fam) {
        if (compatible(fam)) families[b].push_back(fam);
      });
    }
  }
  std::vector<std::vector<std::string>> fib(y.object_count());
  std::vector<std::map<std::vector<int>, int>> lookup(y.object_count());
  for (int b = 0; b < y.object_count(); ++b) {
    for (std::size_t k = 0; k < families[b].size(); ++k) {
      fib[b].push_back("m" + std::to_string(k));
      lookup[b][families[b][k]] = static_cast<int>(k);
    }
  }
  std::vector<std::vector<int>> trans(y.arrow_count());
  for (int h = 0; h < y.arrow_count(); ++h) {
    int b = y.src(h), b2 = y.tgt(h);
    for (const auto& fam : families[b]) {
      std::vector<int> moved(slots[b2].size());
      for (std::size_t j = 0; j < slots[b2].size(); ++j) {
        auto [o, g] = slots[b2][j];
        moved[j] = fam[slot_of[b].at({o, y.compose(g, h)})];
      }
      trans[h].push_back(lookup[b2].at(moved));
    }
  }
  return Presheaf(f.cod(), Variance::co, fib, trans, true);
}

}  // namespace bipolar::oracles

namespace bipolar::oracles {

namespace {

std::vector<Subset> closed_subsets(const Poset& x, Direction dir) {
  const int n = x.size();
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Subset s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      for (int j = 0; j < n && closed; ++j) {
        bool related = dir == Direction::up ? x.leq(i, j) : x.leq(j, i);
        if (s[i] && related && !s[j]) closed = false;
      }
    if (closed) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Subset least_closed_superset(const Poset& x, const Subset& p, Direction dir) {
  Subset out(x.size(), true);
  for (const auto& s : closed_subsets(x, dir)) {
    if (!contained(p, s)) continue;
    for (int i = 0; i < x.size(); ++i) out[i] = out[i] && s[i];
  }
  return out;
}

Subset greatest_closed_subset(const Poset& x, const Subset& p, Direction dir) {
  Subset out(x.size(), false);
  for (const auto& s : closed_subsets(x, dir)) {
    if (!contained(s, p)) continue;
    for (int i = 0; i < x.size(); ++i) out[i] = out[i] || s[i];
  }
  return out;
}

}  // namespace bipolar::oracles

namespace bipolar::oracles {

long long graph_hom_count(const FinGraph& g, const FinGraph& h) {
  const int n = g.node_count();
  // parallel[a][b] = edges a -> b in h
  std::vector<std::vector<long long>> parallel(h.node_count(), std::vector<long long>(h.node_count(), 0));
  for (int f = 0; f < h.edge_count(); ++f) ++parallel[h.src(f)][h.tgt(f)];
  std::vector<int> image(n, -1);
  std::function<long long(int)> go = [&](int v) -> long long {
    if (v == n) return 1;
    long long total = 0;
    for (int x = 0; x < h.node_count(); ++x) {
      image[v] = x;
      long long ways = 1;
      for (int e = 0; e < g.edge_count() && ways; ++e) {
        int s = g.src(e), t = g.tgt(e);
        if (std::max(s, t) != v) continue;
        ways *= parallel[image[s]][image[t]];
      }
      if (ways) total += ways * go(v + 1);
    }
    image[v] = -1;
    return total;
  };
  return go(0);
}

FinGraph graph_product(const FinGraph& g, const FinGraph& h) {
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (const auto& v : g.nodes())
    for (const auto& w : h.nodes()) nodes.push_back("(" + v + "," + w + ")");
  for (int e = 0; e < g.edge_count(); ++e)
    for (int f = 0; f < h.edge_count(); ++f)
      edges.push_back({"(" + g.edge(e) + "," + h.edge(f) + ")", "(" + g.node(g.src(e)) + "," + h.node(h.src(f)) + ")",
                       "(" + g.node(g.tgt(e)) + "," + h.node(h.tgt(f)) + ")"});
  return FinGraph::make(nodes, edges);
}

SymbolicEndomap presented_endomap(const FinGraph& g) {
  const int n = g.node_count();
  // Term v is v; term f(v) is n + v.
  UnionFind uf(2 * n);
  for (int e = 0; e < g.edge_count(); ++e) uf.unite(n + g.src(e), g.tgt(e));
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, int> image;  // class -> some f-term of a member
    for (int v = 0; v < n; ++v) {
      if (g.out_edges(v).empty()) continue;
      auto [it, fresh] = image.emplace(uf.find(v), n + v);
      if (!fresh && uf.unite(it->second, n + v)) changed = true;
    }
  }
  std::map<int, int> cls;  // root -> class index
  std::vector<int> first_term;
  for (int t = 0; t < 2 * n; ++t) {
    if (t >= n && g.out_edges(t - n).empty()) continue;
    if (cls.emplace(uf.find(t), static_cast<int>(first_term.size())).second) first_term.push_back(t);
  }
  const int m = static_cast<int>(first_term.size());
  std::vector<int> next(m, -1);
  for (int v = 0; v < n; ++v)
    if (!g.out_edges(v).empty()) next[cls.at(uf.find(v))] = cls.at(uf.find(n + v));

  // Classes whose orbit runs into an undefined step head infinite rays.
  std::vector<int> fate(m, 0);  // 1 cycles, 2 escapes
  for (int c = 0; c < m; ++c) {
    std::set<int> seen;
    int u = c;
    while (next[u] >= 0 && seen.insert(u).second) u = next[u];
    fate[c] = next[u] < 0 ? 2 : 1;
  }
  std::vector<int> indeg(m, 0);
  for (int c = 0; c < m; ++c)
    if (fate[c] == 2 && next[c] >= 0) ++indeg[next[c]];
  SymbolicEndomap out;
  std::vector<std::string> names;
  std::vector<int> core_of(m, -1);
  for (int c = 0; c < m; ++c) {
    if (fate[c] == 2) {
      if (indeg[c] > 1) throw Error(ErrorKind::UnsupportedShape, "an infinite component is not a single chain");
      if (next[c] < 0) ++out.tails;
      continue;
    }
    core_of[c] = static_cast<int>(names.size());
    names.push_back("t" + std::to_string(first_term[c]));
  }
  std::vector<int> succ;
  for (int c = 0; c < m; ++c)
    if (fate[c] == 1) succ.push_back(core_of[next[c]]);
  out.core = endomap_graph(names, succ);
  return out;
}

long long live_walks(const FinGraph& g, int length) {
  const int n = g.node_count();
  // A node continues forever iff some walk of length n starts there.
  std::vector<long long> reach(n, 1);
  for (int step = 0; step < n; ++step) {
    std::vector<long long> next(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) next[g.src(e)] = next[g.src(e)] || reach[g.tgt(e)];
    reach = next;
  }
  std::vector<long long> count(n, 0);
  for (int v = 0; v < n; ++v) count[v] = reach[v] ? 1 : 0;
  for (int step = 0; step < length; ++step) {
    std::vector<long long> next(n, 0);
    for (int e = 0; e < g.edge_count(); ++e)
      if (reach[g.tgt(e)]) next[g.tgt(e)] += count[g.src(e)];
    count = next;
  }
  long long total = 0;
  for (long long c : count) total += c;
  return total;
}

CycleSum zn_action(const CycleSum& a, int n, Transfer dir) {
  std::vector<int> sigma;
  for (const auto& [k, m] : a) {
    for (long long j = 0; j < m; ++j) {
      int base = static_cast<int>(sigma.size());
      for (int i = 0; i < k; ++i) sigma.push_back(base + (i + 1) % k);
    }
  }
  const int size = static_cast<int>(sigma.size());
  auto power = [&](int x) {
    for (int i = 0; i < n; ++i) x = sigma[x];
    return x;
  };
  std::vector<std::string> names;
  std::vector<int> succ;
  if (dir == Transfer::reflect) {
    UnionFind uf(size);
    for (int x = 0; x < size; ++x) uf.unite(x, power(x));
    std::map<int, int> cls;
    for (int x = 0; x < size; ++x)
      if (cls.emplace(uf.find(x), static_cast<int>(names.size())).second) names.push_back(std::to_string(x));
    succ.resize(names.size());
    for (int x = 0; x < size; ++x) succ[cls.at(uf.find(x))] = cls.at(uf.find(sigma[x]));
  } else {
    std::map<int, int> index;
    for (int x = 0; x < size; ++x)
      if (power(x) == x) index.emplace(x, static_cast<int>(index.size()));
    for (const auto& [x, i] : index) {
      names.push_back(std::to_string(x));
      succ.push_back(index.at(sigma[x]));
    }
  }
  return cycle_sum_of(endomap_graph(names, succ));
}

}  // namespace bipolar::oracles
