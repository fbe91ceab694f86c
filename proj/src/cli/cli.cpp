#include "bipolar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bipolar/atoms.hpp"
#include "bipolar/catalog.hpp"
#include "bipolar/checks.hpp"
#include "bipolar/document.hpp"
#include "bipolar/fibrations.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/kan.hpp"
#include "bipolar/parts.hpp"
#include "bipolar/twoval.hpp"

namespace bipolar::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string side = "closed";
  std::string dir;
  long long budget = kDefaultPathBudget;
  int set_size = 2;
  std::string suite = "core";
  std::string subset;
  int zn = 0;
  bool parallel = false;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  int check();
  int components();
  int tensor();
  int hom();
  int negate();
  int reflect(bool co);
  int atoms();
  int karoubi();
  int kan();
  int alex();
  int cycles();
  int verify();

 private:
  Document input(std::size_t i) const;
  void need(std::size_t n) const;
  Part part_input(std::size_t i) const;
  Side side() const;
  void emit(const Document& d) { out_ << dump(d); }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  mutable std::map<std::size_t, Document> cache_;
};

std::string read_all(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Session::need(std::size_t n) const {
  if (o_.inputs.size() != n)
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(n) + " input document(s), got " +
                                          std::to_string(o_.inputs.size()));
}

Document Session::input(std::size_t i) const {
  if (auto it = cache_.find(i); it != cache_.end()) return it->second;
  const std::string& path = o_.inputs.at(i);
  std::string text;
  if (path == "-") {
    text = read_all(in_);
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Malformed, "cannot read " + path, {path});
    text = read_all(f);
  }
  return cache_[i] = parse_document(text);
}

// Presheaves are read through their elements.
Part Session::part_input(std::size_t i) const {
  Document d = input(i);
  if (d.kind == "presheaf") return elements(to_presheaf(d));
  if (d.kind == "part" && is_graph_part(d)) return graph_space_bridge(to_graph_part(d), o_.budget);
  return to_part(d);
}

Side Session::side() const {
  if (o_.side == "open") return Side::open;
  if (o_.side == "closed") return Side::closed;
  throw Error(ErrorKind::Malformed, "--side must be open or closed");
}

Json fibration_report(const Part& p) {
  auto c = classify_part(p);
  Json r{{"classification", to_string(c.kind())}};
  if (c.contra) r["contra"] = presheaf_document(*c.contra).payload;
  if (c.co) r["co"] = presheaf_document(*c.co).payload;
  return r;
}

// df first, then dof.
Presheaf fibration_of(const Part& p) {
  auto c = classify_part(p);
  if (c.contra) return *c.contra;
  if (c.co) return *c.co;
  throw Error(ErrorKind::NotFibration, "the part is neither a df nor a dof");
}

int Session::check() {
  need(1);
  Document d = input(0);
  Json r{{"command", "check"}, {"kind", d.kind}, {"valid", true}};
  if (d.kind == "category") {
    FinCat c = to_category(d);
    r["objects"] = c.object_count();
    r["arrows"] = c.arrow_count();
    r["groupoid"] = is_groupoid(c);
  } else if (d.kind == "graph") {
    FinGraph g = to_graph(d);
    r["functional"] = is_functional(g);
  } else if (d.kind == "part" && is_graph_part(d)) {
    GraphPart p = to_graph_part(d);
    r["classification"] = to_string(classify_graph_part(p).kind());
  } else if (d.kind == "part") {
    r.update(fibration_report(to_part(d)));
  } else if (d.kind == "presheaf") {
    Presheaf p = to_presheaf(d);
    r["sizes"] = p.sizes();
  } else if (d.kind == "functor") {
    to_functor(d);
  } else if (d.kind == "poset") {
    Poset x = to_poset(d);
    r["antisymmetric"] = x.antisymmetric();
    Json groups = Json::array();
    for (const auto& g : nonstrong_atoms(x)) groups.push_back(g);
    r["nonstrong_atoms"] = groups;
  } else if (d.kind == "cyclesum") {
    r["sum"] = to_string(to_cyclesum(d));
  } else if (d.kind == "endomap") {
    r["canonical"] = to_endomap(d).canonical_form();
  }
  emit(report_document(r));
  return ok;
}

int Session::components() {
  need(1);
  Document d = input(0);
  ComponentPartition parts;
  std::vector<std::string> labels;
  if (d.kind == "graph") {
    FinGraph g = to_graph(d);
    parts = bipolar::components(g);
    labels = g.nodes();
  } else {
    FinCat c;
    if (d.kind == "category") c = to_category(d);
    else if (d.kind == "presheaf") c = *elements(to_presheaf(d)).total();
    else if (d.kind == "part" && is_graph_part(d)) {
      FinGraph g = to_graph_part(d).total;
      parts = bipolar::components(g);
      labels = g.nodes();
    } else if (d.kind == "part") c = *to_part(d).total();
    else throw Error(ErrorKind::Schema, "components needs a category, graph, part or presheaf", {"/kind"});
    if (labels.empty() && parts.classes.empty()) {
      parts = bipolar::components(c);
      labels = c.objects();
    }
  }
  Json classes = Json::array();
  for (const auto& cls : parts.classes) {
    Json members = Json::array();
    for (int v : cls) members.push_back(labels[v]);
    classes.push_back(members);
  }
  emit(report_document({{"command", "components"}, {"count", parts.size()}, {"classes", classes}}));
  return ok;
}

int Session::tensor() {
  need(2);
  Part p = part_input(0), q = part_input(1);
  TensorSet t = bipolar::tensor(p, q);
  const FinCat& pt = *p.total();
  const FinCat& qt = *q.total();
  Json classes = Json::array();
  for (const auto& cls : t.classes.classes) {
    Json members = Json::array();
    for (int o : cls) {
      auto [a, b] = t.product.pair_of[o];
      members.push_back({pt.object(a), qt.object(b)});
    }
    classes.push_back(members);
  }
  emit(report_document({{"command", "tensor"}, {"size", t.size()}, {"classes", classes}}));
  return ok;
}

int Session::hom() {
  need(2);
  Document a = input(0), b = input(1);
  if (a.kind == "presheaf" && b.kind == "presheaf") {
    Presheaf pa = to_presheaf(a), pb = to_presheaf(b);
    auto ts = natural_transformations(pa, pb);
    Json list = Json::array();
    for (const auto& t : ts) {
      Json comps = Json::object();
      for (int x = 0; x < pa.base()->object_count(); ++x) {
        Json m = Json::object();
        for (int s = 0; s < pa.size(x); ++s) m[pa.fibre(x)[s]] = pb.fibre(x)[t.comps[x][s]];
        comps[pa.base()->object(x)] = m;
      }
      list.push_back(comps);
    }
    emit(report_document({{"command", "hom"}, {"count", ts.size()}, {"transformations", list}}));
    return ok;
  }
  Part p = part_input(0), q = part_input(1);
  auto ms = hom_over(p, q);
  Json list = Json::array();
  for (const auto& m : ms) {
    Json objects = Json::object();
    for (int o = 0; o < p.total()->object_count(); ++o) objects[p.total()->object(o)] = q.total()->object(m.obj[o]);
    list.push_back(objects);
  }
  emit(report_document({{"command", "hom"}, {"count", ms.size()}, {"morphisms", list}}));
  return ok;
}

int Session::negate() {
  need(1);
  Document d = input(0);
  Presheaf a = d.kind == "presheaf" ? to_presheaf(d) : fibration_of(part_input(0));
  std::vector<std::string> s;
  for (int i = 0; i < o_.set_size; ++i) s.push_back(std::to_string(i));
  emit(presheaf_document(negation(a, s)));
  return ok;
}

int Session::reflect(bool co) {
  need(1);
  Document d = input(0);
  auto loop_input = [&]() -> std::optional<FinGraph> {
    if (d.kind == "graph") return to_graph(d);
    if (d.kind == "part" && is_graph_part(d)) {
      GraphPart p = to_graph_part(d);
      if (p.base == graphs::loop()) return p.total;
    }
    return std::nullopt;
  }();
  if (loop_input) {
    // ↑P by truncation; P↑ as the shift on chains
    if (!co) {
      emit(endomap_document(loop_reflect(*loop_input)));
    } else {
      emit(endomap_document({chains(*loop_input).endomap, 0}));
    }
    return ok;
  }
  Part p = part_input(0);
  if (o_.side == "clopen") {
    if (co) throw Error(ErrorKind::Malformed, "--side clopen is only defined for reflect");
    emit(presheaf_document(clopen_reflect(p, o_.budget)));
    return ok;
  }
  auto r = co ? coreflect(p, side()) : bipolar::reflect(p, side());
  emit(presheaf_document(r.presheaf));
  return ok;
}

int Session::atoms() {
  need(1);
  Document d = input(0);
  if (d.kind == "category") {
    CatPtr base = share(to_category(d));
    auto family = default_family(base);
    Json parts = Json::array();
    for (int x = 0; x < base->object_count(); ++x) {
      auto w = atom_check(parts::object(base, x), family);
      parts.push_back({{"part", "object " + base->object(x)}, {"atom", w.has_value()}});
    }
    for (int e : catalog::idempotents(*base)) {
      if (base->is_identity(e)) continue;
      auto w = atom_check(parts::idempotent(base, e), family);
      parts.push_back({{"part", "idempotent " + base->arrow(e)}, {"atom", w.has_value()},
                       {"split", idempotents_split(*base)}});
    }
    emit(report_document({{"command", "atoms"}, {"parts", parts}}));
    return ok;
  }
  Part p = part_input(0);
  auto w = atom_check(p);
  Json r{{"command", "atoms"}, {"atom", w.has_value()}};
  if (w) {
    r["element"] = w->u_name;
    r["family"] = w->checked_family;
  }
  emit(report_document(r));
  return w ? ok : negative;
}

int Session::karoubi() {
  need(1);
  CatPtr base = share(to_category(input(0)));
  emit(category_document(*bipolar::karoubi(base).cat));
  return ok;
}

int Session::kan() {
  need(2);
  FinFunctor f = to_functor(input(0));
  Presheaf d = to_presheaf(input(1));
  std::string dir = o_.dir.empty() ? "left" : o_.dir;
  if (dir == "left") emit(presheaf_document(lan(f, d)));
  else if (dir == "right") emit(presheaf_document(ran(f, d)));
  else throw Error(ErrorKind::Malformed, "--dir must be left or right for kan");
  return ok;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int Session::alex() {
  need(1);
  Poset x = to_poset(input(0));
  auto wanted = split_list(o_.subset);
  for (const auto& e : wanted) x.find(e);
  Subset s = subset_of(x, wanted);
  Json r{{"command", "alex"},
         {"subset", members(x, s)},
         {"classification", to_string(classify_subset(x, s))},
         {"atom", two_valued_atom(x, s)}};
  std::vector<Direction> dirs{Direction::up, Direction::down};
  if (o_.dir == "up") dirs = {Direction::up};
  else if (o_.dir == "down") dirs = {Direction::down};
  else if (!o_.dir.empty()) throw Error(ErrorKind::Malformed, "--dir must be up or down for alex");
  for (auto dir : dirs) {
    const char* key = dir == Direction::up ? "up" : "down";
    r["reflect"][key] = members(x, alexandrov_reflect(x, s, dir));
    r["coreflect"][key] = members(x, alexandrov_coreflect(x, s, dir));
  }
  if (classify_subset(x, s) != SubsetKind::neither) r["pseudocomplement"] = members(x, pseudocomplement(x, s));
  emit(report_document(r));
  return ok;
}

int Session::cycles() {
  if (o_.inputs.empty() || o_.inputs.size() > 2) throw Error(ErrorKind::Malformed, "cycles takes one or two cycle sums");
  CycleSum a = to_cyclesum(input(0));
  Json r{{"command", "cycles"}, {"a", to_string(a)}};
  if (o_.inputs.size() == 2) {
    CycleSum b = to_cyclesum(input(1));
    auto pairing = cycle_pairing(a, b);
    r["b"] = to_string(b);
    r["ten"] = pairing.ten;
    r["hom"] = pairing.hom;
    r["product"] = cyclesum_document(pairing.product).payload;
  }
  if (o_.zn != 0) {
    if (o_.zn < 0) throw Error(ErrorKind::Malformed, "--zn must be positive");
    r["zn"] = o_.zn;
    r["reflect"] = cyclesum_document(zn_transfer(a, o_.zn, Transfer::reflect)).payload;
    r["coreflect"] = cyclesum_document(zn_transfer(a, o_.zn, Transfer::coreflect)).payload;
  }
  emit(report_document(r));
  return ok;
}

int Session::verify() {
  auto results = checks::run_checks(checks::suite(o_.suite), o_.parallel);
  return checks::report(results, out_) ? ok : negative;
}

void print_error(std::ostream& err, const Error& e) {
  std::string message = e.what();
  for (std::string prefix = std::string(to_string(e.kind())) + ": "; message.rfind(prefix, 0) == 0;)
    message.erase(0, prefix.size());
  Json j{{"error", to_string(e.kind())}, {"message", message}, {"witnesses", e.witnesses()}};
  err << j.dump() << "\n";
}

}  // namespace

int exit_code(ErrorKind kind, const std::string& command) {
  switch (kind) {
    case ErrorKind::NotFibration:
      return negative;
    case ErrorKind::Malformed:
    case ErrorKind::BadComposability:
    case ErrorKind::BadIdentity:
    case ErrorKind::NotAssociative:
      return command == "check" && kind != ErrorKind::Malformed ? negative : input_error;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::SizeLimit:
    case ErrorKind::UncountableChains:
    case ErrorKind::UnsupportedShape:
      return limit;
    default:
      return input_error;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipolar spaces over finite categories", "bipolar"};
  app.require_subcommand(1);
  Options o;
  Session s(o, in, out);

  auto inputs = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("inputs", o.inputs, what)->required();
    sub->add_option("--budget", o.budget, "path and word budget")->check(CLI::PositiveNumber);
  };
  std::map<CLI::App*, std::function<int()>> actions;
  auto add = [&](const std::string& name, const std::string& help, std::function<int()> f) {
    auto* sub = app.add_subcommand(name, help);
    actions[sub] = std::move(f);
    return sub;
  };

  inputs(add("check", "validate a document and classify parts", [&] { return s.check(); }), "document");
  inputs(add("components", "connected components", [&] { return s.components(); }), "document");
  inputs(add("tensor", "ten(P, Q) of two parts", [&] { return s.tensor(); }), "two parts or presheaves");
  inputs(add("hom", "morphisms over the base", [&] { return s.hom(); }), "two parts or presheaves");
  auto* neg = add("negate", "¬A with values in a set of the given size", [&] { return s.negate(); });
  inputs(neg, "a df or dof");
  neg->add_option("--set-size", o.set_size, "size of the value set")->check(CLI::NonNegativeNumber);
  for (bool co : {false, true}) {
    auto* sub = add(co ? "coreflect" : "reflect", co ? "P↑ or P↓" : "↑P or ↓P", [&s, co] { return s.reflect(co); });
    inputs(sub, "a part, presheaf, graph or graph part");
    sub->add_option("--side", o.side, "open, closed or clopen")->check(CLI::IsMember({"open", "closed", "clopen"}));
  }
  inputs(add("atoms", "atom check for a part, or every object and idempotent of a category",
             [&] { return s.atoms(); }),
         "document");
  inputs(add("karoubi", "Karoubi envelope", [&] { return s.karoubi(); }), "category");
  auto* kan = add("kan", "left or right Kan extension along a functor", [&] { return s.kan(); });
  inputs(kan, "functor and covariant or contravariant presheaf");
  kan->add_option("--dir", o.dir, "left or right")->check(CLI::IsMember({"left", "right"}));
  auto* alex = add("alex", "Alexandrov reflections of a subset", [&] { return s.alex(); });
  inputs(alex, "poset");
  alex->add_option("--subset", o.subset, "comma separated elements");
  alex->add_option("--dir", o.dir, "up or down")->check(CLI::IsMember({"up", "down"}));
  auto* cyc = add("cycles", "cycle sum algebra", [&] { return s.cycles(); });
  inputs(cyc, "one or two cycle sums");
  cyc->add_option("--zn", o.zn, "transfer to Z/n")->check(CLI::PositiveNumber);
  auto* ver = add("verify", "run the property suites", [&] { return s.verify(); });
  ver->add_option("--suite", o.suite, "core or all")->check(CLI::IsMember({"core", "all"}));
  ver->add_flag("--parallel", o.parallel, "run checks concurrently");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return input_error;
  }
  auto* sub = app.get_subcommands().front();
  try {
    return actions.at(sub)();
  } catch (const Error& e) {
    print_error(err, e);
    return exit_code(e.kind(), sub->get_name());
  } catch (const std::exception& e) {
    print_error(err, Error(ErrorKind::Malformed, e.what()));
    return input_error;
  }
}

}  // namespace bipolar::cli
