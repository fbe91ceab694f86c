#include "bipolar/catalog.hpp"

#include <map>
#include <mutex>


namespace bipolar::catalog {

const std::vector<std::string>& base_names() {
  static const std::vector<std::string> names{"1",    "2",          "3",     "a<b",    "Z2",
                                              "{1,e}", "discrete-2", "split", "{1,a,0}"};
  return names;
}

CatPtr base(std::string_view name) {
  static std::mutex lock;
  static std::map<std::string, CatPtr, std::less<>> cache;
  std::lock_guard guard(lock);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  FinCat c;
  if (name == "1") c = cats::terminal();
  else if (name == "2") c = cats::arrow();
  else if (name == "3") c = cats::chain3();
  else if (name == "a<b") c = cats::preorder({"a", "b"}, {{"a", "b"}});
  else if (name == "Z2") c = cats::cyclic_group(2);
  else if (name == "{1,e}") c = cats::idempotent_monoid();
  else if (name == "discrete-2") c = cats::discrete({"0", "1"});
  else if (name == "split") c = cats::split_idempotent();
  else if (name == "{1,a,0}") c = cats::nilpotent_monoid();
  else throw Error(ErrorKind::UnknownObject, "no catalog base named " + std::string(name), {std::string(name)});
  return cache.emplace(std::string(name), share(std::move(c))).first->second;
}

std::vector<int> idempotents(const FinCat& c) {
  std::vector<int> out;
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.src(f) == c.tgt(f) && c.compose(f, f) == f) out.push_back(f);
  }
  return out;
}

std::vector<NamedPart> standard_parts(const CatPtr& base) {
  const FinCat& c = *base;
  std::vector<NamedPart> out;
  auto add = [&](std::string name, Part p) {
    if (p.total()->object_count() <= 4) out.push_back({std::move(name), std::move(p)});
  };
  add("identity", parts::identity(base));
  add("empty", parts::empty(base));
  for (int x = 0; x < c.object_count(); ++x) add("object " + c.object(x), parts::object(base, x));
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (!c.is_identity(f)) add("arrow " + c.arrow(f), parts::arrow(base, f));
  }
  for (int e : idempotents(c)) {
    if (!c.is_identity(e)) add("idempotent " + c.arrow(e), parts::idempotent(base, e));
  }
  add("collapse " + c.object(0), parts::collapse(base, 0));
  for (int x = 0; x < c.object_count(); ++x) {
    add("down " + c.object(x), elements(presheaves::representable(base, x, Variance::contra)));
    add("up " + c.object(x), elements(presheaves::representable(base, x, Variance::co)));
  }
  add("constant 2", elements(presheaves::constant(base, {"0", "1"})));
  if (c.object_count() >= 2) {
    int last = c.object_count() - 1;
    add("object " + c.object(0) + " + object " + c.object(last),
        parts::sum(parts::object(base, 0), parts::object(base, last)));
  } else {
    add("object + object", parts::sum(parts::object(base, 0), parts::object(base, 0)));
  }
  return out;
}

const std::vector<std::string>& graph_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"D", "A", "L"};
    for (int k = 1; k <= 5; ++k) n.push_back("C" + std::to_string(k));
    for (int k = 1; k <= 12; ++k) n.push_back("L" + std::to_string(k));
    for (int k = 1; k <= 3; ++k) n.push_back("S" + std::to_string(k));
    return n;
  }();
  return names;
}

FinGraph graph(std::string_view name) {
  if (name == "D") return graphs::dot();
  if (name == "A") return graphs::arrow();
  if (name == "L") return graphs::loop();
  if (name.size() >= 2) {
    int k = 0;
    try {
      k = std::stoi(std::string(name.substr(1)));
    } catch (const std::exception&) {
      k = 0;
    }
    if (std::to_string(k) == name.substr(1)) {
      if (name[0] == 'C' && k >= 1 && k <= 5) return graphs::chain(k);
      if (name[0] == 'L' && k >= 1 && k <= 12) return graphs::cycle(k);
      if (name[0] == 'S' && k >= 1 && k <= 3) return graphs::star(k);
    }
  }
  throw Error(ErrorKind::UnknownObject, "no catalog graph named " + std::string(name), {std::string(name)});
}

}  // namespace bipolar::catalog
