#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bipolar/fincat.hpp"
#include "bipolar/part.hpp"

namespace bipolar::catalog {

// "1", "2", "3", "a<b", "Z2", "{1,e}", "discrete-2", "split", "{1,a,0}"
const std::vector<std::string>& base_names();
CatPtr base(std::string_view name);  // throws UnknownObject

struct NamedPart {
  std::string name;
  Part part;
};

// Object, arrow, idempotent and representable parts and a few sums, each
// with at most four total objects.
std::vector<NamedPart> standard_parts(const CatPtr& base);

// D, A, L, C1..C5, L1..L12, S1..S3
const std::vector<std::string>& graph_names();
FinGraph graph(std::string_view name);  // throws UnknownObject

std::vector<int> idempotents(const FinCat& c);  // including identities

}  // namespace bipolar::catalog
