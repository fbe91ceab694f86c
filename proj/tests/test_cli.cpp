#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "bipolar/cli.hpp"
#include "bipolar/document.hpp"

using namespace bipolar;

namespace {

std::string data(const std::string& file) {
  const char* dir = std::getenv("BIPOLAR_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + file;
}

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json error_of(const Outcome& o) { return Json::parse(o.err); }

}  // namespace

TEST(Cli, ReflectEmitsPresheaf) {
  auto o = run({"reflect", "--side", "closed", data("part_object.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  auto d = parse_document(o.out);
  EXPECT_EQ(d.kind, "presheaf");
  EXPECT_EQ(d.payload["variance"], "co");
  EXPECT_EQ(d.payload["fibres"]["1"].size(), 1u);
}

TEST(Cli, EmittedDocumentsReparseToThemselves) {
  for (auto args : std::vector<std::vector<std::string>>{{"reflect", "--side", "open", data("part_object.json")},
                                                         {"coreflect", data("part_object.json")},
                                                         {"karoubi", data("idem.json")},
                                                         {"negate", data("d_on_2.json")},
                                                         {"kan", "--dir", "left", data("collapse.json"), data("d_on_2.json")},
                                                         {"cycles", data("l4_2l6.json"), data("l6.json"), "--zn", "4"}}) {
    auto o = run(args);
    ASSERT_EQ(o.code, 0) << args.front() << " " << o.err;
    EXPECT_EQ(dump(parse_document(o.out)), o.out) << args.front();
  }
}

TEST(Cli, ReadsStandardInput) {
  auto o = run({"cycles", "-"}, R"({"kind":"cyclesum","version":1,"payload":{"3":2}})");
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(parse_document(o.out).payload["a"], "2L3");
}

TEST(Cli, MalformedInputIsExitTwo) {
  auto o = run({"check", data("missing_payload.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(error_of(o)["error"], "Schema");
  EXPECT_EQ(error_of(o)["witnesses"][0], "/payload");
  EXPECT_EQ(run({"check", "-"}, "not json").code, 2);
  EXPECT_EQ(run({"check", data("no_such_file.json")}).code, 2);
  EXPECT_EQ(run({"reflect"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, LawViolationIsAVerdictOnlyUnderCheck) {
  auto o = run({"check", data("bad_assoc.json")});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(error_of(o)["error"], "NotAssociative");
  EXPECT_EQ(error_of(o)["message"].get<std::string>().rfind("NotAssociative", 0), std::string::npos);
  EXPECT_EQ(run({"components", data("bad_assoc.json")}).code, 2);
}

TEST(Cli, NegativeVerdicts) {
  // 2 -> 2 with both ends over 0: the identity of 0 has two lifts at p
  Json part = Json::parse(R"({"kind": "part", "version": 1, "payload": {"base": "2",
    "proj": {"objects": {"p": "0", "q": "0"}, "arrows": {"f": "id0"}},
    "total": {"objects": ["p", "q"], "identities": {"p": "ip", "q": "iq"}, "compose": [],
              "arrows": [{"id": "ip", "src": "p", "tgt": "p"}, {"id": "iq", "src": "q", "tgt": "q"},
                         {"id": "f", "src": "p", "tgt": "q"}]}}})");
  auto o = run({"negate", "-"}, part.dump());
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(error_of(o)["error"], "NotFibration");
  auto c = run({"check", "-"}, part.dump());
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(parse_document(c.out).payload["classification"], "neither");
}

TEST(Cli, LimitsAreExitThree) {
  auto o = run({"coreflect", data("loops2.json")});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(error_of(o)["error"], "UncountableChains");
  EXPECT_EQ(run({"negate", "--set-size", "7", data("d_on_2.json")}).code, 3);
}

TEST(Cli, GraphReflections) {
  auto up = run({"reflect", data("loops2.json")});
  ASSERT_EQ(up.code, 0) << up.err;
  auto e = to_endomap(parse_document(up.out));
  EXPECT_EQ(e.core.node_count(), 1);
  EXPECT_EQ(e.tails, 0);
  auto chains = run({"coreflect", data("s2.json")});
  ASSERT_EQ(chains.code, 0) << chains.err;
  EXPECT_EQ(to_endomap(parse_document(chains.out)).core.node_count(), 2);
}

TEST(Cli, AlexReport) {
  auto o = run({"alex", data("chain3.json"), "--subset", "b"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto p = parse_document(o.out).payload;
  EXPECT_EQ(p["classification"], "neither");
  EXPECT_EQ(p["reflect"]["up"], Json({"b", "c"}));
  EXPECT_EQ(p["reflect"]["down"], Json({"a", "b"}));
  auto sieve = parse_document(run({"alex", data("chain3.json"), "--subset", "a,b", "--dir", "down"}).out).payload;
  EXPECT_EQ(sieve["classification"], "sieve");
  EXPECT_EQ(sieve["pseudocomplement"], Json({"c"}));
  EXPECT_FALSE(sieve["reflect"].contains("up"));
  EXPECT_EQ(run({"alex", data("chain3.json"), "--subset", "z"}).code, 2);
}

TEST(Cli, CycleReport) {
  auto o = run({"cycles", data("l4_2l6.json"), data("l6.json"), "--zn", "4"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto p = parse_document(o.out).payload;
  EXPECT_EQ(p["ten"], 14);
  EXPECT_EQ(p["hom"], 0);
  EXPECT_EQ(p["product"], Json({{"12", 2}, {"6", 12}}));
  EXPECT_EQ(p["reflect"], Json({{"2", 2}, {"4", 1}}));
  EXPECT_EQ(p["coreflect"], Json({{"4", 1}}));
}

TEST(Cli, HomTensorAndComponents) {
  auto h = parse_document(run({"hom", data("part_object.json"), data("d_on_2.json")}).out).payload;
  EXPECT_EQ(h["count"], 1);
  auto t = parse_document(run({"tensor", data("d_on_2.json"), data("part_object.json")}).out).payload;
  EXPECT_EQ(t["size"], 1);
  auto c = parse_document(run({"components", data("d_on_2.json")}).out).payload;
  EXPECT_EQ(c["count"], 2);
  auto n = parse_document(run({"hom", data("d_on_2.json"), data("d_on_2.json")}).out).payload;
  EXPECT_EQ(n["count"], 2);
}

TEST(Cli, AtomsReport) {
  auto o = run({"atoms", data("idem.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  for (const auto& entry : parse_document(o.out).payload["parts"]) EXPECT_TRUE(entry["atom"].get<bool>());
  auto part = run({"atoms", data("part_object.json")});
  EXPECT_EQ(part.code, 0) << part.err;
}

TEST(Cli, CatalogOverride) {
  const char* saved = std::getenv(kCatalogEnv);
  std::string saved_value = saved ? saved : "";
  setenv(kCatalogEnv, data("catalog").c_str(), 1);
  auto o = run({"check", data("part_object.json")});
  if (saved) setenv(kCatalogEnv, saved_value.c_str(), 1);
  else unsetenv(kCatalogEnv);
  // base "2" now names the terminal category, which has no object "0"
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(run({"check", data("part_object.json")}).code, 0);
}

TEST(Cli, VerifyCoreIsGreen) {
  auto o = run({"verify", "--suite", "core"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
}
