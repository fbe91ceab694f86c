#pragma once

#include <map>
#include <string>
#include <vector>

#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"

namespace bipolar {

// A graph morphism total -> base.
struct GraphPart {
  FinGraph base;
  FinGraph total;
  std::vector<int> node_proj;
  std::vector<int> edge_proj;

  // Maps are keyed by total ids; throws Malformed or NotFunctor.
  static GraphPart make(FinGraph base, FinGraph total, const std::map<std::string, std::string>& nodes,
                        const std::map<std::string, std::string>& edges);
  static GraphPart over_loop(const FinGraph& g);
  void validate() const;
};

enum class GraphPartKind { bifunctional, right_functional, left_functional, right_comapping, left_comapping, neither };
const char* to_string(GraphPartKind k);

struct GraphClassification {
  bool right_functional = false, left_functional = false;
  bool right_comapping = false, left_comapping = false;
  GraphPartKind kind() const;
};

GraphClassification classify_graph_part(const GraphPart& p);

bool is_functional(const FinGraph& g);
// Isomorphism invariant of a functional graph; throws NotEndo otherwise.
std::string functional_canonical_form(const FinGraph& g);
// Functional graph with one edge ">name" out of each node.
FinGraph endomap_graph(const std::vector<std::string>& names, const std::vector<int>& succ);

// The infinite path prefix·cycle·cycle·..., as edge indices.
struct Lasso {
  std::vector<int> prefix;
  std::vector<int> cycle;
  std::string name(const FinGraph& g) const;  // e.g. "u1(l1)"
  int start(const FinGraph& g) const { return g.src(prefix.empty() ? cycle.front() : prefix.front()); }
  bool operator==(const Lasso&) const = default;
  auto operator<=>(const Lasso&) const = default;
};

struct ChainSet {
  std::vector<Lasso> lassos;  // sorted by name
  std::vector<int> shift;     // translation by one edge
  FinGraph endomap;
};

// All infinite forward paths; throws UncountableChains.
ChainSet chains(const FinGraph& g);

// A finite functional core plus `tails` disjoint copies of the infinite chain.
struct SymbolicEndomap {
  FinGraph core;
  int tails = 0;
  std::string canonical_form() const;
};

bool isomorphic(const SymbolicEndomap& a, const SymbolicEndomap& b);

inline int default_truncation(const FinGraph& g) { return 2 * (g.node_count() + g.edge_count()) + 2; }

// Components of the truncated product with the co-chain, read at one depth.
SymbolicEndomap loop_reflect_at(const FinGraph& g, int depth);
// Compares depths N and N + 1; throws UnsupportedShape if they disagree.
SymbolicEndomap loop_reflect(const FinGraph& g, int depth = -1);

// Multiplicity of each cycle length.
using CycleSum = std::map<int, long long>;

// Throws Malformed on non-positive lengths or multiplicities.
void validate(const CycleSum& a);
std::string to_string(const CycleSum& a);  // "L4 + 2L6"; "0" when empty
FinGraph cycle_graph(const CycleSum& a);
// Cycle decomposition of a bijective endomap; throws NotEndo.
CycleSum cycle_sum_of(const FinGraph& g);

struct CyclePairing {
  CycleSum product;
  long long hom = 0;  // graph morphisms a -> b
  long long ten = 0;
};

// Throws SizeLimit when a count overflows.
CyclePairing cycle_pairing(const CycleSum& a, const CycleSum& b);
long long cycle_hom(const CycleSum& a, const CycleSum& b);

enum class Transfer { reflect, coreflect };
const char* to_string(Transfer t);
CycleSum zn_transfer(const CycleSum& a, int n, Transfer dir);

// The part over free_category(base) induced by p.
Part graph_space_bridge(const GraphPart& p, long long budget = kDefaultPathBudget);

// Edges of the dual are the nodes of g; its nodes are the components of g × A.
FinGraph dual_graph(const FinGraph& g);

}  // namespace bipolar
