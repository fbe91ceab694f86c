#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "bipolar/fincat.hpp"
#include "bipolar/graphspace.hpp"
#include "bipolar/part.hpp"
#include "bipolar/twoval.hpp"

namespace bipolar {

using Json = nlohmann::json;

constexpr int kDocumentVersion = 1;

// {kind, version, payload}. Kinds: category, graph, part, presheaf, poset,
// cyclesum, functor, endomap, report.
struct Document {
  std::string kind;
  int version = kDocumentVersion;
  Json payload;

  bool operator==(const Document&) const = default;
};

// Throws Schema naming the JSON pointer of the first violation.
Document parse_document(std::string_view text);
Json to_json(const Document& d);
// Sorted keys, two-space indent, trailing newline.
std::string dump(const Document& d);

// Catalog names resolve against $BIPOLAR_CATALOG/<name>.json first.
constexpr const char* kCatalogEnv = "BIPOLAR_CATALOG";
CatPtr resolve_base(const Json& ref, const std::string& path = "/base");
FinGraph resolve_graph(const Json& ref, const std::string& path = "/base");
// The catalog name of `c` if it is a built-in base, else the inline category.
Json base_ref(const CatPtr& c);

Document category_document(const FinCat& c);
Document graph_document(const FinGraph& g);
Document part_document(const Part& p);
Document graph_part_document(const GraphPart& p);
Document presheaf_document(const Presheaf& p);
Document functor_document(const FinFunctor& f);
Document poset_document(const Poset& x);
Document cyclesum_document(const CycleSum& a);
Document endomap_document(const SymbolicEndomap& e);
Document report_document(Json payload);

// Category payloads go through validate_category; law failures throw with
// their own kinds (BadComposability, BadIdentity, NotAssociative).
CategorySpec category_spec(const Json& payload, const std::string& path = "");
FinCat category_from(const Json& payload, const std::string& path = "");
FinGraph graph_from(const Json& payload, const std::string& path = "");

bool is_graph_part(const Document& d);
FinCat to_category(const Document& d);
FinGraph to_graph(const Document& d);
Part to_part(const Document& d);
GraphPart to_graph_part(const Document& d);
Presheaf to_presheaf(const Document& d);
FinFunctor to_functor(const Document& d);
Poset to_poset(const Document& d);
CycleSum to_cyclesum(const Document& d);
SymbolicEndomap to_endomap(const Document& d);

}  // namespace bipolar
