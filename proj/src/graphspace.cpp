#include "bipolar/graphspace.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "bipolar/union_find.hpp"

namespace bipolar {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::SizeLimit, "count does not fit in 64 bits");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::SizeLimit, "count does not fit in 64 bits");
  return r;
}

std::vector<int> successors(const FinGraph& g) {
  std::vector<int> succ(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.out_edges(v).size() != 1) {
      throw Error(ErrorKind::NotEndo, "node '" + g.node(v) + "' does not have exactly one out-edge", {g.node(v)});
    }
    succ[v] = g.tgt(g.out_edges(v).front());
  }
  return succ;
}

std::string join(const std::vector<int>& edges, const FinGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) out += (i ? "," : "") + g.edge(edges[i]);
  return out;
}

}  // namespace

GraphPart GraphPart::make(FinGraph base, FinGraph total, const std::map<std::string, std::string>& nodes,
                          const std::map<std::string, std::string>& edges) {
  GraphPart p{std::move(base), std::move(total), {}, {}};
  auto lookup = [](const std::map<std::string, std::string>& m, const std::string& key, const char* what) {
    auto it = m.find(key);
    if (it == m.end()) throw Error(ErrorKind::Malformed, std::string(what) + " '" + key + "' is not mapped", {key});
    return it->second;
  };
  for (const auto& v : p.total.nodes()) {
    int x = p.base.find_node(lookup(nodes, v, "node"));
    if (x < 0) throw Error(ErrorKind::UnknownObject, "node '" + v + "' maps to an unknown base node", {v});
    p.node_proj.push_back(x);
  }
  for (int e = 0; e < p.total.edge_count(); ++e) {
    int b = p.base.find_edge(lookup(edges, p.total.edge(e), "edge"));
    if (b < 0) throw Error(ErrorKind::UnknownObject, "edge '" + p.total.edge(e) + "' maps to an unknown base edge");
    p.edge_proj.push_back(b);
  }
  if (nodes.size() != p.node_proj.size() || edges.size() != p.edge_proj.size()) {
    throw Error(ErrorKind::Malformed, "projection mentions ids outside the total graph");
  }
  p.validate();
  return p;
}

GraphPart GraphPart::over_loop(const FinGraph& g) {
  return GraphPart{graphs::loop(), g, std::vector<int>(g.node_count(), 0), std::vector<int>(g.edge_count(), 0)};
}

void GraphPart::validate() const {
  if (static_cast<int>(node_proj.size()) != total.node_count() ||
      static_cast<int>(edge_proj.size()) != total.edge_count()) {
    throw Error(ErrorKind::Malformed, "projection has the wrong size");
  }
  for (int e = 0; e < total.edge_count(); ++e) {
    int b = edge_proj[e];
    if (base.src(b) != node_proj[total.src(e)] || base.tgt(b) != node_proj[total.tgt(e)]) {
      throw Error(ErrorKind::NotFunctor, "edge '" + total.edge(e) + "' does not lie over its image",
                  {total.edge(e), base.edge(b)});
    }
  }
}

const char* to_string(GraphPartKind k) {
  switch (k) {
    case GraphPartKind::bifunctional: return "bifunctional";
    case GraphPartKind::right_functional: return "right-functional";
    case GraphPartKind::left_functional: return "left-functional";
    case GraphPartKind::right_comapping: return "right-comapping";
    case GraphPartKind::left_comapping: return "left-comapping";
    case GraphPartKind::neither: return "neither";
  }
  return "neither";
}

GraphPartKind GraphClassification::kind() const {
  if (right_functional && left_functional) return GraphPartKind::bifunctional;
  if (right_functional) return GraphPartKind::right_functional;
  if (left_functional) return GraphPartKind::left_functional;
  if (right_comapping) return GraphPartKind::right_comapping;
  if (left_comapping) return GraphPartKind::left_comapping;
  return GraphPartKind::neither;
}

GraphClassification classify_graph_part(const GraphPart& p) {
  GraphClassification c{true, true, true, true};
  const FinGraph& t = p.total;
  for (int v = 0; v < t.node_count(); ++v) {
    int x = p.node_proj[v];
    for (int b : p.base.out_edges(x)) {
      std::set<int> ends;
      int count = 0;
      for (int e : t.out_edges(v)) {
        if (p.edge_proj[e] != b) continue;
        ++count;
        ends.insert(t.tgt(e));
      }
      if (count != 1) c.right_functional = false;
      if (count == 0 || ends.size() > 1) c.right_comapping = false;
    }
    for (int b : p.base.in_edges(x)) {
      std::set<int> ends;
      int count = 0;
      for (int e : t.in_edges(v)) {
        if (p.edge_proj[e] != b) continue;
        ++count;
        ends.insert(t.src(e));
      }
      if (count != 1) c.left_functional = false;
      if (count == 0 || ends.size() > 1) c.left_comapping = false;
    }
  }
  return c;
}

bool is_functional(const FinGraph& g) {
  for (int v = 0; v < g.node_count(); ++v)
    if (g.out_edges(v).size() != 1) return false;
  return true;
}

std::string functional_canonical_form(const FinGraph& g) {
  const int n = g.node_count();
  auto succ = successors(g);
  // Nodes left after repeatedly stripping nodes without preimages lie on cycles.
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) ++indeg[succ[v]];
  std::vector<bool> on_cycle(n, true);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    on_cycle[v] = false;
    if (--indeg[succ[v]] == 0) queue.push_back(succ[v]);
  }
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (!on_cycle[v]) children[succ[v]].push_back(v);
  std::function<std::string(int)> code = [&](int v) {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  std::vector<bool> seen(n, false);
  std::vector<std::string> components;
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[v] || seen[v]) continue;
    std::vector<std::string> ring;
    for (int u = v; !seen[u]; u = succ[u]) {
      seen[u] = true;
      ring.push_back(code(u));
    }
    std::vector<std::string> best = ring;
    for (std::size_t r = 1; r < ring.size(); ++r) {
      std::rotate(ring.begin(), ring.begin() + 1, ring.end());
      best = std::min(best, ring);
    }
    std::string s = "[";
    for (const auto& c : best) s += c;
    components.push_back(s + "]");
  }
  std::sort(components.begin(), components.end());
  std::string out;
  for (const auto& c : components) out += c;
  return out;
}

FinGraph endomap_graph(const std::vector<std::string>& names, const std::vector<int>& succ) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < names.size(); ++i) edges.push_back({">" + names[i], names[i], names[succ[i]]});
  return FinGraph::make(names, edges);
}

std::string Lasso::name(const FinGraph& g) const { return join(prefix, g) + "(" + join(cycle, g) + ")"; }

ChainSet chains(const FinGraph& g) {
  const int n = g.node_count();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!live[v]) continue;
      bool any = false;
      for (int e : g.out_edges(v)) any = any || live[g.tgt(e)];
      if (!any) {
        live[v] = false;
        changed = true;
      }
    }
  }
  auto live_out = [&](int v) {
    std::vector<int> out;
    for (int e : g.out_edges(v))
      if (live[g.tgt(e)]) out.push_back(e);
    return out;
  };
  std::vector<bool> on_cycle(n, false);
  for (int v = 0; v < n; ++v) {
    std::vector<bool> reached(n, false);
    std::vector<int> stack;
    for (int e : g.out_edges(v)) stack.push_back(g.tgt(e));
    while (!stack.empty() && !on_cycle[v]) {
      int u = stack.back();
      stack.pop_back();
      if (reached[u]) continue;
      reached[u] = true;
      if (u == v) on_cycle[v] = true;
      for (int e : g.out_edges(u)) stack.push_back(g.tgt(e));
    }
    if (on_cycle[v] && live_out(v).size() >= 2) {
      throw Error(ErrorKind::UncountableChains,
                  "node '" + g.node(v) + "' lies on a cycle and has several continuing out-edges", {g.node(v)});
    }
  }

  std::vector<Lasso> lassos;
  std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& prefix) {
    if (on_cycle[v]) {
      Lasso l{prefix, {}};
      int u = v;
      do {
        int e = live_out(u).front();
        l.cycle.push_back(e);
        u = g.tgt(e);
      } while (u != v);
      lassos.push_back(std::move(l));
      return;
    }
    for (int e : live_out(v)) {
      prefix.push_back(e);
      walk(g.tgt(e), prefix);
      prefix.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    if (!live[v]) continue;
    std::vector<int> prefix;
    walk(v, prefix);
  }

  ChainSet out;
  std::vector<std::pair<std::string, Lasso>> named;
  for (auto& l : lassos) named.push_back({l.name(g), std::move(l)});
  std::sort(named.begin(), named.end());
  std::map<Lasso, int> index;
  std::vector<std::string> names;
  for (auto& [name, l] : named) {
    index[l] = static_cast<int>(out.lassos.size());
    names.push_back(name);
    out.lassos.push_back(std::move(l));
  }
  for (const auto& l : out.lassos) {
    Lasso next = l;
    if (!next.prefix.empty()) {
      next.prefix.erase(next.prefix.begin());
    } else {
      std::rotate(next.cycle.begin(), next.cycle.begin() + 1, next.cycle.end());
    }
    out.shift.push_back(index.at(next));
  }
  out.endomap = endomap_graph(names, out.shift);
  return out;
}

std::string SymbolicEndomap::canonical_form() const {
  return functional_canonical_form(core) + "+" + std::to_string(tails);
}

bool isomorphic(const SymbolicEndomap& a, const SymbolicEndomap& b) {
  return a.canonical_form() == b.canonical_form();
}

SymbolicEndomap loop_reflect_at(const FinGraph& g, int depth) {
  const int n = g.node_count();
  SymbolicEndomap out;
  if (n == 0) {
    out.core = FinGraph::make({}, {});
    return out;
  }
  const int levels = depth + 1;
  const int window = std::max(1, depth / 2);
  // Node (i, v) of the product sits at i * n + v; an edge v -> w joins (i + 1, v) and (i, w).
  UnionFind uf(levels * n);
  for (int e = 0; e < g.edge_count(); ++e)
    for (int i = 0; i + 1 < levels; ++i) uf.unite((i + 1) * n + g.src(e), i * n + g.tgt(e));

  std::vector<std::vector<int>> orbit(n, std::vector<int>(window + 1));
  std::vector<int> period_end(n, -1);  // first index repeating an earlier class
  for (int v = 0; v < n; ++v) {
    std::map<int, int> first;
    for (int i = 0; i <= window; ++i) {
      orbit[v][i] = uf.find(i * n + v);
      if (period_end[v] < 0 && !first.emplace(orbit[v][i], i).second) period_end[v] = i;
    }
  }

  std::map<int, int> core_index;
  std::vector<std::string> names;
  std::vector<int> core_class;
  for (int i = 0; i <= window; ++i) {
    for (int v = 0; v < n; ++v) {
      if (period_end[v] < 0 || i >= period_end[v]) continue;
      if (core_index.emplace(orbit[v][i], static_cast<int>(names.size())).second) {
        names.push_back(i == 0 ? g.node(v) : "f" + std::to_string(i) + "(" + g.node(v) + ")");
        core_class.push_back(orbit[v][i]);
      }
    }
  }
  std::vector<int> succ(names.size(), -1);
  for (int v = 0; v < n; ++v) {
    if (period_end[v] < 0) continue;
    for (int i = 0; i < period_end[v]; ++i) {
      int c = core_index.at(orbit[v][i]), d = core_index.at(orbit[v][i + 1]);
      if (succ[c] >= 0 && succ[c] != d) {
        throw Error(ErrorKind::UnsupportedShape, "translation is not well defined at depth " + std::to_string(depth));
      }
      succ[c] = d;
    }
  }

  std::vector<int> infinite;
  for (int v = 0; v < n; ++v) {
    if (period_end[v] >= 0) continue;
    for (int c : orbit[v]) {
      if (core_index.count(c)) {
        throw Error(ErrorKind::UnsupportedShape, "an unbounded orbit meets the core", {g.node(v)});
      }
    }
    infinite.push_back(v);
  }
  UnionFind groups(n);
  for (std::size_t a = 0; a < infinite.size(); ++a) {
    std::set<int> mine(orbit[infinite[a]].begin(), orbit[infinite[a]].end());
    for (std::size_t b = a + 1; b < infinite.size(); ++b)
      for (int c : orbit[infinite[b]])
        if (mine.count(c)) groups.unite(infinite[a], infinite[b]);
  }
  std::map<int, std::vector<int>> by_group;
  for (int v : infinite) by_group[groups.find(v)].push_back(v);
  for (const auto& [root, members] : by_group) {
    bool chain = false;
    for (int head : members) {
      std::set<int> ray(orbit[head].begin(), orbit[head].end());
      bool all = true;
      for (int w : members) all = all && ray.count(orbit[w][0]);
      chain = chain || all;
    }
    if (!chain) {
      throw Error(ErrorKind::UnsupportedShape, "an infinite component is not a single chain", {g.node(root)});
    }
  }
  out.tails = static_cast<int>(by_group.size());
  out.core = endomap_graph(names, succ);
  return out;
}

SymbolicEndomap loop_reflect(const FinGraph& g, int depth) {
  if (depth < 0) depth = default_truncation(g);
  SymbolicEndomap a = loop_reflect_at(g, depth);
  SymbolicEndomap b = loop_reflect_at(g, depth + 1);
  if (!isomorphic(a, b)) {
    throw Error(ErrorKind::UnsupportedShape, "truncation did not stabilize at depth " + std::to_string(depth));
  }
  return a;
}

void validate(const CycleSum& a) {
  for (const auto& [k, m] : a) {
    if (k < 1) throw Error(ErrorKind::Malformed, "cycle length must be positive", {std::to_string(k)});
    if (m < 1) throw Error(ErrorKind::Malformed, "multiplicity must be positive", {std::to_string(k)});
  }
}

std::string to_string(const CycleSum& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : a) {
    if (!out.empty()) out += " + ";
    out += (m == 1 ? "" : std::to_string(m)) + "L" + std::to_string(k);
  }
  return out;
}

FinGraph cycle_graph(const CycleSum& a) {
  validate(a);
  long long total = 0;
  for (const auto& [k, m] : a) total = checked_add(total, checked_mul(k, m));
  if (total > 1000000) throw Error(ErrorKind::SizeLimit, "cycle sum has more than 10^6 nodes");
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (const auto& [k, m] : a) {
    for (long long j = 0; j < m; ++j) {
      std::string stem = std::to_string(k) + "_" + std::to_string(j) + "_";
      for (int i = 0; i < k; ++i) {
        nodes.push_back("c" + stem + std::to_string(i));
        edges.push_back({"e" + stem + std::to_string(i), "c" + stem + std::to_string(i),
                         "c" + stem + std::to_string((i + 1) % k)});
      }
    }
  }
  return FinGraph::make(nodes, edges);
}

CycleSum cycle_sum_of(const FinGraph& g) {
  auto succ = successors(g);
  const int n = g.node_count();
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) ++indeg[succ[v]];
  for (int v = 0; v < n; ++v) {
    if (indeg[v] != 1) throw Error(ErrorKind::NotEndo, "endomap is not bijective", {g.node(v)});
  }
  CycleSum out;
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (int u = v; !seen[u]; u = succ[u]) {
      seen[u] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

CyclePairing cycle_pairing(const CycleSum& a, const CycleSum& b) {
  validate(a);
  validate(b);
  CyclePairing out;
  for (const auto& [k, n] : a) {
    for (const auto& [l, m] : b) {
      long long g = std::gcd(k, l);
      long long copies = checked_mul(checked_mul(n, m), g);
      long long len = checked_mul(k / g, l);
      if (len > std::numeric_limits<int>::max()) throw Error(ErrorKind::SizeLimit, "cycle length overflows");
      out.product[static_cast<int>(len)] = checked_add(out.product[static_cast<int>(len)], copies);
      out.ten = checked_add(out.ten, copies);
    }
  }
  out.hom = cycle_hom(a, b);
  return out;
}

long long cycle_hom(const CycleSum& a, const CycleSum& b) {
  long long total = 1;
  for (const auto& [k, n] : a) {
    // A k-cycle maps onto an l-cycle iff l divides k, in l ways.
    long long into = 0;
    for (const auto& [l, m] : b)
      if (k % l == 0) into = checked_add(into, checked_mul(m, l));
    for (long long i = 0; i < n; ++i) total = checked_mul(total, into);
    if (total == 0) return 0;
  }
  return total;
}

const char* to_string(Transfer t) { return t == Transfer::reflect ? "reflect" : "coreflect"; }

CycleSum zn_transfer(const CycleSum& a, int n, Transfer dir) {
  validate(a);
  if (n < 1) throw Error(ErrorKind::Malformed, "n must be positive", {std::to_string(n)});
  CycleSum out;
  for (const auto& [k, m] : a) {
    if (dir == Transfer::coreflect) {
      if (n % k == 0) out[k] += m;
    } else {
      out[std::gcd(n, k)] = checked_add(out[std::gcd(n, k)], m);
    }
  }
  return out;
}

Part graph_space_bridge(const GraphPart& p, long long budget) {
  p.validate();
  auto base = share(free_category(p.base, budget));
  auto total = share(free_category(p.total, budget));
  std::vector<int> obj(total->object_count());
  for (int v = 0; v < total->object_count(); ++v) obj[v] = p.node_proj[v];
  std::vector<int> arr(total->arrow_count(), -1);
  std::vector<int> edge_arrow(p.total.edge_count());
  for (int e = 0; e < p.total.edge_count(); ++e) {
    edge_arrow[e] = total->arrow_index(p.total.edge(e));
    arr[edge_arrow[e]] = base->arrow_index(p.base.edge(p.edge_proj[e]));
  }
  // Every non-identity path is r∘e for an edge e leaving its source.
  std::function<int(int)> image = [&](int u) -> int {
    if (arr[u] >= 0) return arr[u];
    if (total->is_identity(u)) return arr[u] = base->identity(obj[total->src(u)]);
    for (int e : p.total.out_edges(total->src(u))) {
      int first = edge_arrow[e];
      for (int r : total->arrows_from(total->tgt(first))) {
        if (total->compose(r, first) == u) return arr[u] = base->compose(image(r), arr[first]);
      }
    }
    throw Error(ErrorKind::NotFunctor, "path '" + total->arrow(u) + "' has no first edge");
  };
  for (int u = 0; u < total->arrow_count(); ++u) image(u);
  return Part(base, total, obj, arr, true);
}

FinGraph dual_graph(const FinGraph& g) {
  const int n = g.node_count();
  // (v, side) sits at 2v + side in g × A.
  UnionFind uf(2 * n);
  for (int e = 0; e < g.edge_count(); ++e) uf.unite(2 * g.src(e), 2 * g.tgt(e) + 1);
  auto name = [&](int i) { return g.node(uf.find(i) / 2) + "." + std::to_string(uf.find(i) % 2); };
  std::set<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (int v = 0; v < n; ++v) {
    nodes.insert(name(2 * v));
    nodes.insert(name(2 * v + 1));
    edges.push_back({g.node(v), name(2 * v), name(2 * v + 1)});
  }
  return FinGraph::make({nodes.begin(), nodes.end()}, edges);
}

}  // namespace bipolar
