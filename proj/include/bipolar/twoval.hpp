#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"

namespace bipolar {

// A finite preorder; the given relation is closed reflexively and transitively.
class Poset {
 public:
  Poset() = default;
  static Poset make(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& leq);
  static Poset from_matrix(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& element(int i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(int i, int j) const { return leq_[i][j]; }
  int find(const std::string& e) const;  // throws UnknownObject
  std::vector<std::pair<std::string, std::string>> pairs() const;  // strict part of the relation
  bool antisymmetric() const;
  FinCat category() const;  // arrows "x<=y"

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

// All partial orders on the elements "0".."n-1".
std::vector<Poset> all_posets(int n);

using Subset = std::vector<bool>;

Subset subset_of(const Poset& x, const std::vector<std::string>& members);
std::vector<std::string> members(const Poset& x, const Subset& s);

enum class SubsetKind { sieve, cosieve, clopen, neither };
const char* to_string(SubsetKind k);

bool is_sieve(const Poset& x, const Subset& p);
bool is_cosieve(const Poset& x, const Subset& p);
SubsetKind classify_subset(const Poset& x, const Subset& p);

enum class Direction { up, down };

// up: {x : ↓x meets p}; down: {x : ↑x meets p}
Subset alexandrov_reflect(const Poset& x, const Subset& p, Direction dir);
// down: {x : ↓x ⊆ p}; up: {x : ↑x ⊆ p}
Subset alexandrov_coreflect(const Poset& x, const Subset& p, Direction dir);
// Complement of a sieve or cosieve; throws NotFibration otherwise.
Subset pseudocomplement(const Poset& x, const Subset& p);
// A ⇒ D = D ∪ ¬A
Subset implication(const Poset& x, const Subset& a, const Subset& d);

bool meets(const Subset& a, const Subset& b);
bool contained(const Subset& a, const Subset& b);

// p ⊆ A ⇔ p meets A for every sieve and cosieve A.
bool two_valued_atom(const Poset& x, const Subset& p);
// Classes of two or more pairwise isomorphic elements.
std::vector<std::vector<std::string>> nonstrong_atoms(const Poset& x);

// The full subcategory on p as a part of x.category().
Part subset_part(const CatPtr& category, const Poset& x, const Subset& p);

}  // namespace bipolar
