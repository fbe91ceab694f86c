#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bipolar/error.hpp"

namespace bipolar {

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

// A finite directed multigraph. Nodes and edges are kept sorted by id.
class FinGraph {
 public:
  FinGraph() = default;
  static FinGraph make(std::vector<std::string> nodes, std::vector<EdgeSpec> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }
  const std::string& node(int v) const { return nodes_[v]; }
  const std::string& edge(int e) const { return edge_ids_[e]; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  int src(int e) const { return src_[e]; }
  int tgt(int e) const { return tgt_[e]; }
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }
  int find_node(std::string_view id) const;
  int find_edge(std::string_view id) const;
  std::vector<EdgeSpec> edge_specs() const;

  bool operator==(const FinGraph& other) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::string> edge_ids_;
  std::vector<int> src_, tgt_;
  std::vector<std::vector<int>> out_, in_;
};

struct ArrowSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

// Unvalidated description of a category. Composites involving an identity
// may be omitted from `compose`; they are implied.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<ArrowSpec> arrows;
  std::map<std::string, std::string> identities;
  std::map<std::pair<std::string, std::string>, std::string> compose;  // (g, f) -> g∘f
};

class FinCat;

// Index-based construction used by the algorithms; names are sorted on build.
class CategoryBuilder {
 public:
  int add_object(std::string id);
  int add_arrow(std::string id, int src, int tgt);
  void set_identity(int object, int arrow);
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int src(int a) const { return src_[a]; }
  int tgt(int a) const { return tgt_[a]; }

  // `compose(g, f)` is only called on composable pairs, in builder indices.
  FinCat build(const std::function<int(int, int)>& compose, bool check_laws = true) const;

 private:
  friend class FinCat;
  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<int> src_, tgt_;
  std::vector<int> identity_;
};

class FinCat {
 public:
  FinCat() = default;

  // Throws Error with the first violated law.
  static FinCat from_spec(const CategorySpec& spec);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object(int x) const { return objects_[x]; }
  const std::string& arrow(int a) const { return arrows_[a]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& arrows() const { return arrows_; }
  int src(int a) const { return src_[a]; }
  int tgt(int a) const { return tgt_[a]; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int a) const { return src_[a] == tgt_[a] && identity_[src_[a]] == a; }
  // g∘f, or -1 when tgt(f) != src(g).
  int compose(int g, int f) const {
    if (src_[g] != tgt_[f]) return -1;
    return comp_[f][out_pos_[g]];
  }
  const std::vector<int>& arrows_from(int x) const { return out_[x]; }
  const std::vector<int>& arrows_to(int x) const { return in_[x]; }
  std::vector<int> hom(int x, int y) const;

  int find_object(std::string_view id) const;
  int find_arrow(std::string_view id) const;
  int object_index(std::string_view id) const;  // throws UnknownObject
  int arrow_index(std::string_view id) const;   // throws UnknownObject

  CategorySpec spec() const;
  bool operator==(const FinCat& other) const;

 private:
  friend class CategoryBuilder;
  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<int> src_, tgt_, identity_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> out_pos_;
  std::vector<std::vector<int>> comp_;  // comp_[f][k] = arrows_from(tgt f)[k] ∘ f
  std::unordered_map<std::string, int> object_lookup_, arrow_lookup_;
};

using CatPtr = std::shared_ptr<const FinCat>;

inline CatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }
bool same_category(const CatPtr& a, const CatPtr& b);

enum class Law { Malformed, BadComposability, BadIdentity, NotAssociative };

struct LawViolation {
  Law law;
  std::vector<std::string> witnesses;
  std::string message;
};

struct ValidationResult {
  std::optional<FinCat> category;
  std::optional<LawViolation> violation;
  bool ok() const { return category.has_value(); }
};

ValidationResult validate_category(const CategorySpec& spec);

class FinFunctor {
 public:
  FinFunctor() = default;
  // Throws NotFunctor if the maps do not preserve structure.
  FinFunctor(CatPtr dom, CatPtr cod, std::vector<int> obj_map, std::vector<int> arr_map,
             bool check = true);

  static FinFunctor identity(const CatPtr& c);

  const CatPtr& dom() const { return dom_; }
  const CatPtr& cod() const { return cod_; }
  int obj(int x) const { return obj_[x]; }
  int arr(int a) const { return arr_[a]; }
  const std::vector<int>& obj_map() const { return obj_; }
  const std::vector<int>& arr_map() const { return arr_; }

 private:
  CatPtr dom_, cod_;
  std::vector<int> obj_, arr_;
};

FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

struct ComponentPartition {
  std::vector<std::vector<int>> classes;  // sorted members, classes ordered by representative
  std::vector<int> class_of;               // object -> class index
  int size() const { return static_cast<int>(classes.size()); }
  int rep(int c) const { return classes[c].front(); }
};

ComponentPartition components(const FinCat& c);
ComponentPartition components(const FinGraph& g);

constexpr long long kDefaultPathBudget = 10000;

FinCat free_category(const FinGraph& g, long long budget = kDefaultPathBudget);
FinCat opposite(const FinCat& c);
FinFunctor opposite(const FinFunctor& f, const CatPtr& dom_op, const CatPtr& cod_op);

// Standard small categories.
namespace cats {
FinCat discrete(const std::vector<std::string>& objects);
FinCat terminal();                    // "1": object "*", arrow "1"
FinCat arrow();                       // "2": objects 0,1; arrows id0,id1,a
FinCat chain3();                      // "3": 0 -a-> 1 -b-> 2, composite ba
FinCat preorder(const std::vector<std::string>& elements,
                const std::vector<std::pair<std::string, std::string>>& leq);  // arrows "x<=y"
// Single-object monoid on object "*". `table[i][j]` = index of elements[i]·elements[j].
FinCat monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
FinCat cyclic_group(int n);           // arrows "1", "g", "g2", ...
FinCat idempotent_monoid();           // {1, e}
FinCat nilpotent_monoid();            // {1, a, 0} with a·a = 0
FinCat split_idempotent();            // x -r-> y -i-> x with r∘i = id_y, e = i∘r
}  // namespace cats

namespace graphs {
FinGraph dot();
FinGraph arrow();
FinGraph loop();
FinGraph chain(int n);   // n nodes, n-1 edges; chain(0) is empty
FinGraph cycle(int n);   // n nodes in a directed cycle
FinGraph star(int n);    // n loop nodes and a source s with an edge to each
FinGraph sum(const FinGraph& a, const FinGraph& b);
}  // namespace graphs

}  // namespace bipolar
