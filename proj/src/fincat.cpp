#include "bipolar/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bipolar/union_find.hpp"

namespace bipolar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::BadComposability: return "BadComposability";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotFunctor: return "NotFunctor";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::NotFibration: return "NotFibration";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotEndo: return "NotEndo";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::UncountableChains: return "UncountableChains";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::Schema: return "Schema";
  }
  return "Error";
}

namespace {

std::vector<int> sorted_order(const std::vector<std::string>& names) {
  std::vector<int> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a] < names[b]; });
  return order;
}

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::Malformed, std::string("duplicate ") + what + " id '" + n + "'", {n});
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- FinGraph

FinGraph FinGraph::make(std::vector<std::string> nodes, std::vector<EdgeSpec> edges) {
  require_unique(nodes, "node");
  std::vector<std::string> edge_ids;
  for (const auto& e : edges) edge_ids.push_back(e.id);
  require_unique(edge_ids, "edge");

  FinGraph g;
  g.nodes_ = std::move(nodes);
  std::sort(g.nodes_.begin(), g.nodes_.end());
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  g.out_.resize(g.nodes_.size());
  g.in_.resize(g.nodes_.size());
  for (const auto& e : edges) {
    int s = g.find_node(e.src), t = g.find_node(e.tgt);
    if (s < 0 || t < 0) {
      throw Error(ErrorKind::Malformed, "edge '" + e.id + "' has an unknown endpoint", {e.id});
    }
    int idx = static_cast<int>(g.edge_ids_.size());
    g.edge_ids_.push_back(e.id);
    g.src_.push_back(s);
    g.tgt_.push_back(t);
    g.out_[s].push_back(idx);
    g.in_[t].push_back(idx);
  }
  return g;
}

int FinGraph::find_node(std::string_view id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  return (it != nodes_.end() && *it == id) ? static_cast<int>(it - nodes_.begin()) : -1;
}

int FinGraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
  return (it != edge_ids_.end() && *it == id) ? static_cast<int>(it - edge_ids_.begin()) : -1;
}

std::vector<EdgeSpec> FinGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (int e = 0; e < edge_count(); ++e) out.push_back({edge_ids_[e], nodes_[src_[e]], nodes_[tgt_[e]]});
  return out;
}

bool FinGraph::operator==(const FinGraph& o) const {
  return nodes_ == o.nodes_ && edge_ids_ == o.edge_ids_ && src_ == o.src_ && tgt_ == o.tgt_;
}

// ----------------------------------------------------------------- builder

int CategoryBuilder::add_object(std::string id) {
  objects_.push_back(std::move(id));
  identity_.push_back(-1);
  return static_cast<int>(objects_.size()) - 1;
}

int CategoryBuilder::add_arrow(std::string id, int src, int tgt) {
  arrows_.push_back(std::move(id));
  src_.push_back(src);
  tgt_.push_back(tgt);
  return static_cast<int>(arrows_.size()) - 1;
}

void CategoryBuilder::set_identity(int object, int arrow) { identity_[object] = arrow; }

FinCat CategoryBuilder::build(const std::function<int(int, int)>& compose, bool check_laws) const {
  require_unique(objects_, "object");
  require_unique(arrows_, "arrow");
  const int n = object_count(), m = arrow_count();
  for (int a = 0; a < m; ++a) {
    if (src_[a] < 0 || src_[a] >= n || tgt_[a] < 0 || tgt_[a] >= n) {
      throw Error(ErrorKind::Malformed, "arrow '" + arrows_[a] + "' has an unknown endpoint", {arrows_[a]});
    }
  }
  for (int x = 0; x < n; ++x) {
    int i = identity_[x];
    if (i < 0 || src_[i] != x || tgt_[i] != x) {
      throw Error(ErrorKind::BadIdentity, "object '" + objects_[x] + "' lacks a valid identity", {objects_[x]});
    }
  }

  std::vector<int> obj_order = sorted_order(objects_), arr_order = sorted_order(arrows_);
  std::vector<int> obj_new(n), arr_new(m);
  for (int i = 0; i < n; ++i) obj_new[obj_order[i]] = i;
  for (int i = 0; i < m; ++i) arr_new[arr_order[i]] = i;

  FinCat c;
  c.objects_.resize(n);
  c.identity_.resize(n);
  c.out_.resize(n);
  c.in_.resize(n);
  for (int i = 0; i < n; ++i) {
    c.objects_[i] = objects_[obj_order[i]];
    c.identity_[i] = arr_new[identity_[obj_order[i]]];
    c.object_lookup_.emplace(c.objects_[i], i);
  }
  c.arrows_.resize(m);
  c.src_.resize(m);
  c.tgt_.resize(m);
  c.out_pos_.resize(m);
  for (int i = 0; i < m; ++i) {
    int old = arr_order[i];
    c.arrows_[i] = arrows_[old];
    c.src_[i] = obj_new[src_[old]];
    c.tgt_[i] = obj_new[tgt_[old]];
    c.arrow_lookup_.emplace(c.arrows_[i], i);
    c.out_pos_[i] = static_cast<int>(c.out_[c.src_[i]].size());
    c.out_[c.src_[i]].push_back(i);
    c.in_[c.tgt_[i]].push_back(i);
  }

  c.comp_.resize(m);
  for (int f = 0; f < m; ++f) {
    const auto& outs = c.out_[c.tgt_[f]];
    c.comp_[f].resize(outs.size());
    for (std::size_t k = 0; k < outs.size(); ++k) {
      int g = outs[k];
      int r_old = compose(arr_order[g], arr_order[f]);
      if (r_old < 0 || r_old >= m) {
        throw Error(ErrorKind::BadComposability,
                    "no composite for (" + c.arrows_[g] + ", " + c.arrows_[f] + ")",
                    {c.arrows_[g], c.arrows_[f]});
      }
      int r = arr_new[r_old];
      if (c.src_[r] != c.src_[f] || c.tgt_[r] != c.tgt_[g]) {
        throw Error(ErrorKind::BadComposability,
                    "composite " + c.arrows_[g] + "∘" + c.arrows_[f] + " = " + c.arrows_[r] +
                        " has the wrong endpoints",
                    {c.arrows_[g], c.arrows_[f]});
      }
      c.comp_[f][k] = r;
    }
  }

  if (check_laws) {
    for (int f = 0; f < m; ++f) {
      if (c.compose(c.identity_[c.tgt_[f]], f) != f || c.compose(f, c.identity_[c.src_[f]]) != f) {
        throw Error(ErrorKind::BadIdentity, "identity law fails at " + c.arrows_[f], {c.arrows_[f]});
      }
    }
    for (int f = 0; f < m; ++f) {
      for (int g : c.out_[c.tgt_[f]]) {
        int gf = c.compose(g, f);
        for (int h : c.out_[c.tgt_[g]]) {
          if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
            throw Error(ErrorKind::NotAssociative,
                        "(" + c.arrows_[h] + "∘" + c.arrows_[g] + ")∘" + c.arrows_[f] + " differs",
                        {c.arrows_[h], c.arrows_[g], c.arrows_[f]});
          }
        }
      }
    }
  }
  return c;
}

// ------------------------------------------------------------------ FinCat

FinCat FinCat::from_spec(const CategorySpec& spec) {
  CategoryBuilder b;
  std::unordered_map<std::string, int> objs, arrs;
  for (const auto& o : spec.objects) {
    if (objs.count(o)) throw Error(ErrorKind::Malformed, "duplicate object id '" + o + "'", {o});
    objs[o] = b.add_object(o);
  }
  for (const auto& a : spec.arrows) {
    if (arrs.count(a.id)) throw Error(ErrorKind::Malformed, "duplicate arrow id '" + a.id + "'", {a.id});
    auto s = objs.find(a.src), t = objs.find(a.tgt);
    if (s == objs.end() || t == objs.end()) {
      throw Error(ErrorKind::Malformed, "arrow '" + a.id + "' has an unknown endpoint", {a.id});
    }
    arrs[a.id] = b.add_arrow(a.id, s->second, t->second);
  }
  for (const auto& [o, a] : spec.identities) {
    auto oi = objs.find(o);
    auto ai = arrs.find(a);
    if (oi == objs.end() || ai == arrs.end()) {
      throw Error(ErrorKind::Malformed, "identity entry " + o + " -> " + a + " is unknown", {o, a});
    }
    b.set_identity(oi->second, ai->second);
  }
  std::vector<bool> is_id(b.arrow_count(), false);
  for (const auto& [o, a] : spec.identities) is_id[arrs[a]] = true;

  std::map<std::pair<int, int>, int> table;
  for (const auto& [gf, r] : spec.compose) {
    auto gi = arrs.find(gf.first), fi = arrs.find(gf.second), ri = arrs.find(r);
    if (gi == arrs.end() || fi == arrs.end() || ri == arrs.end()) {
      throw Error(ErrorKind::Malformed, "composition entry references an unknown arrow",
                  {gf.first, gf.second, r});
    }
    if (b.src(gi->second) != b.tgt(fi->second)) {
      throw Error(ErrorKind::BadComposability,
                  "composite given for non-composable pair (" + gf.first + ", " + gf.second + ")",
                  {gf.first, gf.second});
    }
    table[{gi->second, fi->second}] = ri->second;
  }
  return b.build([&](int g, int f) {
    auto it = table.find({g, f});
    if (it != table.end()) return it->second;
    if (is_id[g]) return f;
    if (is_id[f]) return g;
    return -1;
  });
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int a : out_[x]) {
    if (tgt_[a] == y) out.push_back(a);
  }
  return out;
}

int FinCat::find_object(std::string_view id) const {
  auto it = object_lookup_.find(std::string(id));
  return it == object_lookup_.end() ? -1 : it->second;
}

int FinCat::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(std::string(id));
  return it == arrow_lookup_.end() ? -1 : it->second;
}

int FinCat::object_index(std::string_view id) const {
  int x = find_object(id);
  if (x < 0) throw Error(ErrorKind::UnknownObject, "no object '" + std::string(id) + "'", {std::string(id)});
  return x;
}

int FinCat::arrow_index(std::string_view id) const {
  int a = find_arrow(id);
  if (a < 0) throw Error(ErrorKind::UnknownObject, "no arrow '" + std::string(id) + "'", {std::string(id)});
  return a;
}

CategorySpec FinCat::spec() const {
  CategorySpec s;
  s.objects = objects_;
  for (int a = 0; a < arrow_count(); ++a) s.arrows.push_back({arrows_[a], objects_[src_[a]], objects_[tgt_[a]]});
  for (int x = 0; x < object_count(); ++x) s.identities[objects_[x]] = arrows_[identity_[x]];
  for (int f = 0; f < arrow_count(); ++f) {
    if (is_identity(f)) continue;
    for (int g : out_[tgt_[f]]) {
      if (is_identity(g)) continue;
      s.compose[{arrows_[g], arrows_[f]}] = arrows_[compose(g, f)];
    }
  }
  return s;
}

bool FinCat::operator==(const FinCat& o) const {
  return objects_ == o.objects_ && arrows_ == o.arrows_ && src_ == o.src_ && tgt_ == o.tgt_ &&
         identity_ == o.identity_ && comp_ == o.comp_;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  return a == b || (a && b && *a == *b);
}

ValidationResult validate_category(const CategorySpec& spec) {
  ValidationResult r;
  try {
    r.category = FinCat::from_spec(spec);
  } catch (const Error& e) {
    Law law = Law::Malformed;
    switch (e.kind()) {
      case ErrorKind::BadComposability: law = Law::BadComposability; break;
      case ErrorKind::BadIdentity: law = Law::BadIdentity; break;
      case ErrorKind::NotAssociative: law = Law::NotAssociative; break;
      default: break;
    }
    r.violation = LawViolation{law, e.witnesses(), e.what()};
  }
  return r;
}

// ---------------------------------------------------------------- functors

FinFunctor::FinFunctor(CatPtr dom, CatPtr cod, std::vector<int> obj_map, std::vector<int> arr_map,
                       bool check)
    : dom_(std::move(dom)), cod_(std::move(cod)), obj_(std::move(obj_map)), arr_(std::move(arr_map)) {
  if (!check) return;
  const FinCat& d = *dom_;
  const FinCat& c = *cod_;
  if (static_cast<int>(obj_.size()) != d.object_count() || static_cast<int>(arr_.size()) != d.arrow_count()) {
    throw Error(ErrorKind::NotFunctor, "map sizes do not match the domain");
  }
  for (int x : obj_) {
    if (x < 0 || x >= c.object_count()) throw Error(ErrorKind::NotFunctor, "object image out of range");
  }
  for (int a = 0; a < d.arrow_count(); ++a) {
    int b = arr_[a];
    if (b < 0 || b >= c.arrow_count()) throw Error(ErrorKind::NotFunctor, "arrow image out of range");
    if (c.src(b) != obj_[d.src(a)] || c.tgt(b) != obj_[d.tgt(a)]) {
      throw Error(ErrorKind::NotFunctor, "arrow " + d.arrow(a) + " is sent to an arrow with wrong ends",
                  {d.arrow(a)});
    }
  }
  for (int x = 0; x < d.object_count(); ++x) {
    if (arr_[d.identity(x)] != c.identity(obj_[x])) {
      throw Error(ErrorKind::NotFunctor, "identity of " + d.object(x) + " is not preserved", {d.object(x)});
    }
  }
  for (int f = 0; f < d.arrow_count(); ++f) {
    for (int g : d.arrows_from(d.tgt(f))) {
      if (arr_[d.compose(g, f)] != c.compose(arr_[g], arr_[f])) {
        throw Error(ErrorKind::NotFunctor, "composite " + d.arrow(g) + "∘" + d.arrow(f) + " is not preserved",
                    {d.arrow(g), d.arrow(f)});
      }
    }
  }
}

FinFunctor FinFunctor::identity(const CatPtr& c) {
  std::vector<int> o(c->object_count()), a(c->arrow_count());
  std::iota(o.begin(), o.end(), 0);
  std::iota(a.begin(), a.end(), 0);
  return FinFunctor(c, c, std::move(o), std::move(a), false);
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.cod(), g.dom())) throw Error(ErrorKind::BaseMismatch, "functors are not composable");
  std::vector<int> o(f.obj_map().size()), a(f.arr_map().size());
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = g.obj(f.obj(static_cast<int>(i)));
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.arr(f.arr(static_cast<int>(i)));
  return FinFunctor(f.dom(), g.cod(), std::move(o), std::move(a), false);
}

// -------------------------------------------------------------- components

namespace {

ComponentPartition partition_from(UnionFind& uf, int n) {
  ComponentPartition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    if (p.class_of[r] < 0) {
      p.class_of[r] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[x] = p.class_of[r];
    p.classes[p.class_of[x]].push_back(x);
  }
  return p;
}

}  // namespace

ComponentPartition components(const FinCat& c) {
  UnionFind uf(c.object_count());
  for (int a = 0; a < c.arrow_count(); ++a) uf.unite(c.src(a), c.tgt(a));
  return partition_from(uf, c.object_count());
}

ComponentPartition components(const FinGraph& g) {
  UnionFind uf(g.node_count());
  for (int e = 0; e < g.edge_count(); ++e) uf.unite(g.src(e), g.tgt(e));
  return partition_from(uf, g.node_count());
}

// ----------------------------------------------------------- free category

FinCat free_category(const FinGraph& g, long long budget) {
  const int n = g.node_count();
  // Kahn's algorithm doubles as cycle detection and gives a topological order.
  std::vector<int> indeg(n, 0), order;
  for (int e = 0; e < g.edge_count(); ++e) ++indeg[g.tgt(e)];
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int e : g.out_edges(order[i])) {
      if (--indeg[g.tgt(e)] == 0) order.push_back(g.tgt(e));
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::BudgetExceeded, "graph has a directed cycle, so infinitely many paths");
  }
  // paths_from[v] = number of paths starting at v, saturated above the budget.
  std::vector<long long> paths_from(n, 1);
  long long total = 0;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    for (int e : g.out_edges(v)) paths_from[v] = std::min(budget + 1, paths_from[v] + paths_from[g.tgt(e)]);
    total = std::min(budget + 1, total + paths_from[v]);
  }
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " paths");
  }

  CategoryBuilder b;
  for (int v = 0; v < n; ++v) b.add_object(g.node(v));
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> paths;
  std::vector<int> start;
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<std::vector<int>, int>> stack{{{}, v}};
    while (!stack.empty()) {
      auto [path, at] = stack.back();
      stack.pop_back();
      std::string name;
      if (path.empty()) {
        name = "id" + g.node(v);
      } else {
        for (std::size_t k = 0; k < path.size(); ++k) name += (k ? ";" : "") + g.edge(path[k]);
      }
      int a = b.add_arrow(name, v, at);
      if (path.empty()) b.set_identity(v, a);
      index[path] = a;
      paths.push_back(path);
      start.push_back(v);
      for (int e : g.out_edges(at)) {
        auto next = path;
        next.push_back(e);
        stack.push_back({next, g.tgt(e)});
      }
    }
  }
  return b.build(
      [&](int gi, int fi) {
        if (paths[fi].empty()) return gi;
        auto joined = paths[fi];
        joined.insert(joined.end(), paths[gi].begin(), paths[gi].end());
        return index.at(joined);
      },
      false);
}

FinCat opposite(const FinCat& c) {
  CategoryBuilder b;
  for (int x = 0; x < c.object_count(); ++x) b.add_object(c.object(x));
  for (int a = 0; a < c.arrow_count(); ++a) b.add_arrow(c.arrow(a), c.tgt(a), c.src(a));
  for (int x = 0; x < c.object_count(); ++x) b.set_identity(x, c.identity(x));
  return b.build([&](int g, int f) { return c.compose(f, g); }, false);
}

FinFunctor opposite(const FinFunctor& f, const CatPtr& dom_op, const CatPtr& cod_op) {
  return FinFunctor(dom_op, cod_op, f.obj_map(), f.arr_map(), false);
}

// ----------------------------------------------------- standard categories

namespace cats {

FinCat discrete(const std::vector<std::string>& objects) {
  CategoryBuilder b;
  for (const auto& o : objects) {
    int x = b.add_object(o);
    b.set_identity(x, b.add_arrow("id" + o, x, x));
  }
  return b.build([](int g, int) { return g; });
}

FinCat terminal() { return monoid({"1"}, {{0}}); }

FinCat arrow() {
  CategorySpec s;
  s.objects = {"0", "1"};
  s.arrows = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
  s.identities = {{"0", "id0"}, {"1", "id1"}};
  return FinCat::from_spec(s);
}

FinCat chain3() {
  CategorySpec s;
  s.objects = {"0", "1", "2"};
  s.arrows = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"},
              {"a", "0", "1"},   {"b", "1", "2"},   {"ba", "0", "2"}};
  s.identities = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}};
  s.compose = {{{"b", "a"}, "ba"}};
  return FinCat::from_spec(s);
}

FinCat preorder(const std::vector<std::string>& elements,
                const std::vector<std::pair<std::string, std::string>>& leq) {
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  auto pos = [&](const std::string& e) {
    auto it = std::find(elements.begin(), elements.end(), e);
    if (it == elements.end()) throw Error(ErrorKind::Malformed, "unknown element '" + e + "'", {e});
    return static_cast<int>(it - elements.begin());
  };
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [x, y] : leq) r[pos(x)][pos(y)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  CategoryBuilder b;
  for (const auto& e : elements) b.add_object(e);
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r[i][j]) arrow[i][j] = b.add_arrow(elements[i] + "<=" + elements[j], i, j);
  for (int i = 0; i < n; ++i) b.set_identity(i, arrow[i][i]);
  return b.build([&](int g, int f) { return arrow[b.src(f)][b.tgt(g)]; }, false);
}

FinCat monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  int unit = -1;
  for (int u = 0; u < n && unit < 0; ++u) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && table[u][j] == j && table[j][u] == j;
    if (ok) unit = u;
  }
  if (unit < 0) throw Error(ErrorKind::BadIdentity, "monoid table has no unit");
  CategoryBuilder b;
  b.add_object("*");
  for (const auto& e : elements) b.add_arrow(e, 0, 0);
  b.set_identity(0, unit);
  return b.build([&](int g, int f) { return table[g][f]; });
}

FinCat cyclic_group(int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : k == 1 ? "g" : "g" + std::to_string(k));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return monoid(names, t);
}

FinCat idempotent_monoid() { return monoid({"1", "e"}, {{0, 1}, {1, 1}}); }

FinCat nilpotent_monoid() {
  // elements: 0, 1, a
  return monoid({"0", "1", "a"}, {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}});
}

FinCat split_idempotent() {
  CategorySpec s;
  s.objects = {"x", "y"};
  s.arrows = {{"idx", "x", "x"}, {"idy", "y", "y"}, {"r", "x", "y"}, {"i", "y", "x"}, {"e", "x", "x"}};
  s.identities = {{"x", "idx"}, {"y", "idy"}};
  s.compose = {{{"r", "i"}, "idy"}, {{"i", "r"}, "e"}, {{"e", "e"}, "e"}, {{"r", "e"}, "r"}, {{"e", "i"}, "i"}};
  return FinCat::from_spec(s);
}

}  // namespace cats

namespace graphs {

FinGraph dot() { return FinGraph::make({"0"}, {}); }
FinGraph arrow() { return FinGraph::make({"0", "1"}, {{"a", "0", "1"}}); }
FinGraph loop() { return FinGraph::make({"0"}, {{"l", "0", "0"}}); }

FinGraph chain(int n) {
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) nodes.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({"e" + std::to_string(i), nodes[i], nodes[i + 1]});
  return FinGraph::make(nodes, edges);
}

FinGraph cycle(int n) {
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) nodes.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) edges.push_back({"e" + std::to_string(i), nodes[i], nodes[(i + 1) % n]});
  return FinGraph::make(nodes, edges);
}

FinGraph star(int n) {
  std::vector<std::string> nodes{"s"};
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    std::string t = "t" + std::to_string(i);
    nodes.push_back(t);
    edges.push_back({"l" + std::to_string(i), t, t});
    edges.push_back({"u" + std::to_string(i), "s", t});
  }
  return FinGraph::make(nodes, edges);
}

FinGraph sum(const FinGraph& a, const FinGraph& b) {
  std::vector<std::string> nodes;
  std::vector<EdgeSpec> edges;
  for (const auto& v : a.nodes()) nodes.push_back("0:" + v);
  for (const auto& v : b.nodes()) nodes.push_back("1:" + v);
  for (const auto& e : a.edge_specs()) edges.push_back({"0:" + e.id, "0:" + e.src, "0:" + e.tgt});
  for (const auto& e : b.edge_specs()) edges.push_back({"1:" + e.id, "1:" + e.src, "1:" + e.tgt});
  return FinGraph::make(nodes, edges);
}

}  // namespace graphs

}  // namespace bipolar
