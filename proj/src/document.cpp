#include "bipolar/document.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bipolar/catalog.hpp"

namespace bipolar {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::Schema, (path.empty() ? "/" : path) + ": " + message, {path.empty() ? "/" : path});
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path + "/" + key, "missing field");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<long long>();
}

std::vector<std::string> strings(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::map<std::string, std::string> string_map(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = str(it.value(), path + "/" + it.key());
  return out;
}

// Identities of the domain may be left out of an arrow map.
std::vector<int> arrow_map(const FinCat& dom, const FinCat& cod, const std::vector<int>& obj,
                           const std::map<std::string, std::string>& given, const std::string& path) {
  std::vector<int> out(dom.arrow_count(), -1);
  for (const auto& [k, v] : given) {
    int a = dom.find_arrow(k);
    if (a < 0) schema(path + "/" + k, "unknown arrow");
    int b = cod.find_arrow(v);
    if (b < 0) schema(path + "/" + k, "unknown target arrow '" + v + "'");
    out[a] = b;
  }
  for (int a = 0; a < dom.arrow_count(); ++a) {
    if (out[a] >= 0) continue;
    if (!dom.is_identity(a)) schema(path + "/" + dom.arrow(a), "arrow is not mapped");
    out[a] = cod.identity(obj[dom.src(a)]);
  }
  return out;
}

std::vector<int> object_map(const FinCat& dom, const FinCat& cod, const std::map<std::string, std::string>& given,
                            const std::string& path) {
  std::vector<int> out(dom.object_count(), -1);
  for (const auto& [k, v] : given) {
    int x = dom.find_object(k);
    if (x < 0) schema(path + "/" + k, "unknown object");
    int y = cod.find_object(v);
    if (y < 0) schema(path + "/" + k, "unknown target object '" + v + "'");
    out[x] = y;
  }
  for (int x = 0; x < dom.object_count(); ++x) {
    if (out[x] < 0) schema(path + "/" + dom.object(x), "object is not mapped");
  }
  return out;
}

Json category_payload(const FinCat& c) {
  CategorySpec s = c.spec();
  Json arrows = Json::array();
  for (const auto& a : s.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  Json compose = Json::array();
  for (const auto& [gf, h] : s.compose) compose.push_back({gf.first, gf.second, h});
  return {{"objects", s.objects}, {"arrows", arrows}, {"identities", s.identities}, {"compose", compose}};
}

Json graph_payload(const FinGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edge_specs()) edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  return {{"nodes", g.nodes()}, {"edges", edges}};
}

Json graph_ref(const FinGraph& g) {
  for (const auto& name : catalog::graph_names())
    if (catalog::graph(name) == g) return name;
  return graph_payload(g);
}

Document expect(const Document& d, const std::string& kind) {
  if (d.kind != kind) schema("/kind", "expected a " + kind + " document, got " + d.kind);
  return d;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema("", std::string("not valid JSON: ") + e.what());
  }
  Document d;
  d.kind = str(field(j, "kind", ""), "/kind");
  d.version = static_cast<int>(integer(field(j, "version", ""), "/version"));
  if (d.version != kDocumentVersion) schema("/version", "unsupported version " + std::to_string(d.version));
  d.payload = field(j, "payload", "");
  static const std::set<std::string> kinds{"category", "graph",    "part",    "presheaf", "poset",
                                           "cyclesum", "functor", "endomap", "report"};
  if (!kinds.count(d.kind)) schema("/kind", "unknown kind '" + d.kind + "'");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "kind" && it.key() != "version" && it.key() != "payload") schema("/" + it.key(), "unexpected field");
  }
  return d;
}

Json to_json(const Document& d) { return {{"kind", d.kind}, {"version", d.version}, {"payload", d.payload}}; }

std::string dump(const Document& d) { return to_json(d).dump(2) + "\n"; }

CatPtr resolve_base(const Json& ref, const std::string& path) {
  if (!ref.is_string()) return share(category_from(ref, path));
  std::string name = ref.get<std::string>();
  if (const char* dir = std::getenv(kCatalogEnv)) {
    std::filesystem::path file = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(file)) {
      Document d = parse_document(read_file(file));
      return share(to_category(d));
    }
  }
  try {
    return catalog::base(name);
  } catch (const Error&) {
    schema(path, "unknown catalog base '" + name + "'");
  }
}

FinGraph resolve_graph(const Json& ref, const std::string& path) {
  if (!ref.is_string()) return graph_from(ref, path);
  std::string name = ref.get<std::string>();
  try {
    return catalog::graph(name);
  } catch (const Error&) {
    schema(path, "unknown catalog graph '" + name + "'");
  }
}

Json base_ref(const CatPtr& c) {
  for (const auto& name : catalog::base_names())
    if (*catalog::base(name) == *c) return name;
  return category_payload(*c);
}

Document category_document(const FinCat& c) { return {"category", kDocumentVersion, category_payload(c)}; }

Document graph_document(const FinGraph& g) { return {"graph", kDocumentVersion, graph_payload(g)}; }

Document part_document(const Part& p) {
  const FinCat& t = *p.total();
  Json objects = Json::object(), arrows = Json::object();
  for (int a = 0; a < t.object_count(); ++a) objects[t.object(a)] = p.base()->object(p.over(a));
  for (int u = 0; u < t.arrow_count(); ++u)
    if (!t.is_identity(u)) arrows[t.arrow(u)] = p.base()->arrow(p.over_arrow(u));
  return {"part", kDocumentVersion,
          {{"base", base_ref(p.base())},
           {"total", category_payload(t)},
           {"proj", {{"objects", objects}, {"arrows", arrows}}}}};
}

Document graph_part_document(const GraphPart& p) {
  Json nodes = Json::object(), edges = Json::object();
  for (int v = 0; v < p.total.node_count(); ++v) nodes[p.total.node(v)] = p.base.node(p.node_proj[v]);
  for (int e = 0; e < p.total.edge_count(); ++e) edges[p.total.edge(e)] = p.base.edge(p.edge_proj[e]);
  return {"part", kDocumentVersion,
          {{"base", graph_ref(p.base)}, {"total", graph_payload(p.total)}, {"proj", {{"nodes", nodes}, {"edges", edges}}}}};
}

Document presheaf_document(const Presheaf& p) {
  const FinCat& c = *p.base();
  Json fibres = Json::object(), maps = Json::object();
  for (int x = 0; x < c.object_count(); ++x) fibres[c.object(x)] = p.fibre(x);
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    Json m = Json::object();
    const auto& from = p.fibre(p.trans_src(f));
    const auto& to = p.fibre(p.trans_tgt(f));
    for (std::size_t s = 0; s < from.size(); ++s) m[from[s]] = to[p.act(f, static_cast<int>(s))];
    maps[c.arrow(f)] = m;
  }
  return {"presheaf", kDocumentVersion,
          {{"base", base_ref(p.base())}, {"variance", to_string(p.variance())}, {"fibres", fibres}, {"maps", maps}}};
}

Document functor_document(const FinFunctor& f) {
  Json objects = Json::object(), arrows = Json::object();
  const FinCat& d = *f.dom();
  for (int x = 0; x < d.object_count(); ++x) objects[d.object(x)] = f.cod()->object(f.obj(x));
  for (int a = 0; a < d.arrow_count(); ++a)
    if (!d.is_identity(a)) arrows[d.arrow(a)] = f.cod()->arrow(f.arr(a));
  return {"functor", kDocumentVersion,
          {{"dom", base_ref(f.dom())}, {"cod", base_ref(f.cod())}, {"objects", objects}, {"arrows", arrows}}};
}

Document poset_document(const Poset& x) {
  Json leq = Json::array();
  for (const auto& [a, b] : x.pairs()) leq.push_back({a, b});
  return {"poset", kDocumentVersion, {{"elements", x.elements()}, {"leq", leq}}};
}

Document cyclesum_document(const CycleSum& a) {
  Json m = Json::object();
  for (const auto& [k, n] : a) m[std::to_string(k)] = n;
  return {"cyclesum", kDocumentVersion, m};
}

Document endomap_document(const SymbolicEndomap& e) {
  return {"endomap", kDocumentVersion, {{"core", graph_payload(e.core)}, {"tails", e.tails}}};
}

Document report_document(Json payload) { return {"report", kDocumentVersion, std::move(payload)}; }

CategorySpec category_spec(const Json& payload, const std::string& path) {
  CategorySpec s;
  s.objects = strings(field(payload, "objects", path), path + "/objects");
  const Json& arrows = field(payload, "arrows", path);
  if (!arrows.is_array()) schema(path + "/arrows", "expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string p = path + "/arrows/" + std::to_string(i);
    s.arrows.push_back({str(field(arrows[i], "id", p), p + "/id"), str(field(arrows[i], "src", p), p + "/src"),
                        str(field(arrows[i], "tgt", p), p + "/tgt")});
  }
  s.identities = string_map(field(payload, "identities", path), path + "/identities");
  if (const Json* c = optional_field(payload, "compose", path)) {
    if (!c->is_array()) schema(path + "/compose", "expected an array of [g, f, g∘f]");
    for (std::size_t i = 0; i < c->size(); ++i) {
      std::string p = path + "/compose/" + std::to_string(i);
      auto t = strings((*c)[i], p);
      if (t.size() != 3) schema(p, "expected [g, f, g∘f]");
      s.compose[{t[0], t[1]}] = t[2];
    }
  }
  return s;
}

FinCat category_from(const Json& payload, const std::string& path) {
  auto v = validate_category(category_spec(payload, path));
  if (v.ok()) return std::move(*v.category);
  ErrorKind kind = ErrorKind::Malformed;
  switch (v.violation->law) {
    case Law::BadComposability: kind = ErrorKind::BadComposability; break;
    case Law::BadIdentity: kind = ErrorKind::BadIdentity; break;
    case Law::NotAssociative: kind = ErrorKind::NotAssociative; break;
    case Law::Malformed: kind = ErrorKind::Malformed; break;
  }
  throw Error(kind, v.violation->message, v.violation->witnesses);
}

FinGraph graph_from(const Json& payload, const std::string& path) {
  auto nodes = strings(field(payload, "nodes", path), path + "/nodes");
  const Json& edges = field(payload, "edges", path);
  if (!edges.is_array()) schema(path + "/edges", "expected an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string p = path + "/edges/" + std::to_string(i);
    specs.push_back({str(field(edges[i], "id", p), p + "/id"), str(field(edges[i], "src", p), p + "/src"),
                     str(field(edges[i], "tgt", p), p + "/tgt")});
  }
  return FinGraph::make(nodes, specs);
}

bool is_graph_part(const Document& d) {
  if (d.kind != "part" || !d.payload.is_object()) return false;
  auto it = d.payload.find("total");
  return it != d.payload.end() && it->is_object() && it->contains("nodes");
}

FinCat to_category(const Document& d) { return category_from(expect(d, "category").payload, "/payload"); }

FinGraph to_graph(const Document& d) { return graph_from(expect(d, "graph").payload, "/payload"); }

Part to_part(const Document& d) {
  const Json& p = expect(d, "part").payload;
  if (is_graph_part(d)) schema("/payload/total", "graph parts are not category parts");
  CatPtr base = resolve_base(field(p, "base", "/payload"), "/payload/base");
  CatPtr total = share(category_from(field(p, "total", "/payload"), "/payload/total"));
  const Json& proj = field(p, "proj", "/payload");
  auto obj = object_map(*total, *base, string_map(field(proj, "objects", "/payload/proj"), "/payload/proj/objects"),
                        "/payload/proj/objects");
  std::map<std::string, std::string> arrows;
  if (const Json* a = optional_field(proj, "arrows", "/payload/proj")) arrows = string_map(*a, "/payload/proj/arrows");
  auto arr = arrow_map(*total, *base, obj, arrows, "/payload/proj/arrows");
  return Part(base, total, obj, arr, true);
}

GraphPart to_graph_part(const Document& d) {
  const Json& p = expect(d, "part").payload;
  FinGraph base = resolve_graph(field(p, "base", "/payload"), "/payload/base");
  FinGraph total = graph_from(field(p, "total", "/payload"), "/payload/total");
  const Json& proj = field(p, "proj", "/payload");
  return GraphPart::make(base, total, string_map(field(proj, "nodes", "/payload/proj"), "/payload/proj/nodes"),
                         string_map(field(proj, "edges", "/payload/proj"), "/payload/proj/edges"));
}

Presheaf to_presheaf(const Document& d) {
  const Json& p = expect(d, "presheaf").payload;
  CatPtr base = resolve_base(field(p, "base", "/payload"), "/payload/base");
  std::string v = str(field(p, "variance", "/payload"), "/payload/variance");
  if (v != "co" && v != "contra") schema("/payload/variance", "expected \"co\" or \"contra\"");
  Variance variance = v == "co" ? Variance::co : Variance::contra;
  const Json& fj = field(p, "fibres", "/payload");
  if (!fj.is_object()) schema("/payload/fibres", "expected an object");
  std::vector<std::vector<std::string>> fibres(base->object_count());
  for (auto it = fj.begin(); it != fj.end(); ++it) {
    int x = base->find_object(it.key());
    if (x < 0) schema("/payload/fibres/" + it.key(), "unknown object");
    fibres[x] = strings(it.value(), "/payload/fibres/" + it.key());
    std::sort(fibres[x].begin(), fibres[x].end());
    if (std::adjacent_find(fibres[x].begin(), fibres[x].end()) != fibres[x].end()) {
      schema("/payload/fibres/" + it.key(), "duplicate element");
    }
  }
  const Json& mj = field(p, "maps", "/payload");
  if (!mj.is_object()) schema("/payload/maps", "expected an object");
  std::vector<std::vector<int>> trans(base->arrow_count());
  std::vector<bool> given(base->arrow_count(), false);
  for (auto it = mj.begin(); it != mj.end(); ++it) {
    std::string path = "/payload/maps/" + it.key();
    int f = base->find_arrow(it.key());
    if (f < 0) schema(path, "unknown arrow");
    int from = variance == Variance::co ? base->src(f) : base->tgt(f);
    int to = variance == Variance::co ? base->tgt(f) : base->src(f);
    auto m = string_map(it.value(), path);
    trans[f].assign(fibres[from].size(), -1);
    for (const auto& [a, b] : m) {
      auto ia = std::lower_bound(fibres[from].begin(), fibres[from].end(), a);
      if (ia == fibres[from].end() || *ia != a) schema(path + "/" + a, "not an element of the source fibre");
      auto ib = std::lower_bound(fibres[to].begin(), fibres[to].end(), b);
      if (ib == fibres[to].end() || *ib != b) schema(path + "/" + a, "'" + b + "' is not in the target fibre");
      trans[f][ia - fibres[from].begin()] = static_cast<int>(ib - fibres[to].begin());
    }
    for (std::size_t s = 0; s < fibres[from].size(); ++s) {
      if (trans[f][s] < 0) schema(path + "/" + fibres[from][s], "element is not mapped");
    }
    given[f] = true;
  }
  for (int f = 0; f < base->arrow_count(); ++f) {
    if (given[f]) continue;
    int from = variance == Variance::co ? base->src(f) : base->tgt(f);
    if (!base->is_identity(f) && !fibres[from].empty()) schema("/payload/maps/" + base->arrow(f), "missing map");
    trans[f].resize(fibres[from].size());
    for (std::size_t s = 0; s < trans[f].size(); ++s) trans[f][s] = static_cast<int>(s);
  }
  return Presheaf(base, variance, fibres, trans, true);
}

FinFunctor to_functor(const Document& d) {
  const Json& p = expect(d, "functor").payload;
  CatPtr dom = resolve_base(field(p, "dom", "/payload"), "/payload/dom");
  CatPtr cod = resolve_base(field(p, "cod", "/payload"), "/payload/cod");
  auto obj = object_map(*dom, *cod, string_map(field(p, "objects", "/payload"), "/payload/objects"), "/payload/objects");
  std::map<std::string, std::string> arrows;
  if (const Json* a = optional_field(p, "arrows", "/payload")) arrows = string_map(*a, "/payload/arrows");
  auto arr = arrow_map(*dom, *cod, obj, arrows, "/payload/arrows");
  return FinFunctor(dom, cod, obj, arr, true);
}

Poset to_poset(const Document& d) {
  const Json& p = expect(d, "poset").payload;
  auto elements = strings(field(p, "elements", "/payload"), "/payload/elements");
  const Json& lj = field(p, "leq", "/payload");
  if (!lj.is_array()) schema("/payload/leq", "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < lj.size(); ++i) {
    auto pair = strings(lj[i], "/payload/leq/" + std::to_string(i));
    if (pair.size() != 2) schema("/payload/leq/" + std::to_string(i), "expected a pair");
    leq.push_back({pair[0], pair[1]});
  }
  return Poset::make(elements, leq);
}

CycleSum to_cyclesum(const Document& d) {
  const Json& p = expect(d, "cyclesum").payload;
  if (!p.is_object()) schema("/payload", "expected an object of multiplicities");
  CycleSum out;
  for (auto it = p.begin(); it != p.end(); ++it) {
    std::string path = "/payload/" + it.key();
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      schema(path, "cycle length must be an integer");
    }
    if (k < 1) schema(path, "cycle length must be positive");
    long long m = integer(it.value(), path);
    if (m < 1) schema(path, "multiplicity must be positive");
    out[k] = m;
  }
  return out;
}

SymbolicEndomap to_endomap(const Document& d) {
  const Json& p = expect(d, "endomap").payload;
  SymbolicEndomap e;
  e.core = graph_from(field(p, "core", "/payload"), "/payload/core");
  if (!is_functional(e.core)) schema("/payload/core", "core must have exactly one out-edge per node");
  long long t = integer(field(p, "tails", "/payload"), "/payload/tails");
  if (t < 0) schema("/payload/tails", "tail count must be nonnegative");
  e.tails = static_cast<int>(t);
  return e;
}

}  // namespace bipolar
