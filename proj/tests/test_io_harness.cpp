// JSON round trips, report schema, corpus plumbing, and harness
// determinism.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "holescope/generators.hpp"
#include "holescope/geometry.hpp"
#include "holescope/harness.hpp"
#include "holescope/json_io.hpp"

using namespace holescope;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DrawingDocument doc_of(Drawing d) {
  return DrawingDocument{std::move(d), std::nullopt};
}

}  // namespace

TEST_CASE("serialization round trips are byte-identical") {
  for (DrawingDocument doc :
       {doc_of(convex_gon(6)), doc_of(twisted(7)), doc_of(twisted_prime(7)),
        doc_of(dn_family(7)),
        DrawingDocument{random_convex_instance(9, 4), random_points(9, 4)}}) {
    std::string once = serialize_document(doc);
    DrawingDocument back = parse_document_text(once);
    CHECK(serialize_document(back) == once);
    CHECK(back.drawing.n() == doc.drawing.n());
    CHECK(back.drawing.crossings() == doc.drawing.crossings());
    CHECK(back.drawing.label() == doc.drawing.label());
    CHECK(back.points.has_value() == doc.points.has_value());
  }
}

TEST_CASE("document fields appear in a fixed order") {
  ordered_json j = document_to_json(doc_of(twisted(5)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "label", "crossings", "rotations"});
  CHECK(j["n"] == 5);
  CHECK(j["crossings"].size() == 5);
  CHECK(j["crossings"][0] == ordered_json::parse("[[1,4],[2,3]]"));
}

TEST_CASE("malformed documents are rejected with named fields") {
  CHECK_THROWS_WITH(document_from_json(json::parse(R"({"label":"x"})")),
                    "missing field: n");
  CHECK_THROWS_WITH(document_from_json(json::parse(R"({"n":4,"crossings":3})")),
                    "crossings is not an array");
  CHECK_THROWS_WITH(
      document_from_json(json::parse(R"({"n":4,"crossings":[],"rotations":[[2,3,4]]})")),
      "rotations must list one cycle per vertex");
  CHECK_THROWS_WITH(
      document_from_json(json::parse(R"({"n":3,"crossings":[],"points":[[0,0]]})")),
      "points must list one pair per vertex");
  CHECK_THROWS_AS(
      document_from_json(json::parse(R"({"n":3,"crossings":[],"points":[[0,0],[9000000,1],[1,5]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(parse_document_text("{ not json"), std::invalid_argument);
}

TEST_CASE("file round trip and missing-file errors") {
  std::string path = "roundtrip_tmp.json";
  DrawingDocument doc{random_convex_instance(8, 2), random_points(8, 2)};
  save_document(doc, path);
  DrawingDocument back = load_document(path);
  CHECK(back.drawing.crossings() == doc.drawing.crossings());
  REQUIRE(back.points.has_value());
  CHECK(back.points->points == doc.points->points);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_document("no_such_file.json"), std::runtime_error);
}

TEST_CASE("figures require coordinates") {
  DrawingDocument geo{random_convex_instance(7, 9), random_points(7, 9)};
  std::string svg = render_svg(geo);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK_THROWS_WITH(render_svg(doc_of(twisted(6))), "no coordinates");
}

TEST_CASE("witness fragments") {
  CHECK(edge_to_json(make_edge(3, 1)) == ordered_json::parse("[1,3]"));

  CycleWitness plane = is_empty_cycle(twisted(6), {1, 2, 6, 5});
  ordered_json pj = to_json(plane);
  CHECK(pj.contains("class_a"));
  CHECK(pj["class_a"] == ordered_json::parse("[3,4]"));
  CHECK(pj["empty"] == true);

  CycleWitness crossed = is_empty_cycle(twisted(6), {1, 2, 5, 6});
  ordered_json cj = to_json(crossed);
  CHECK(cj["plane"] == false);
  CHECK(!cj.contains("class_a"));
}

// ── Corpus and harness ──────────────────────────────────────────────────

TEST_CASE("the checked-in corpus file is the canonical serialization") {
  std::string file = slurp(std::string(HOLESCOPE_DATA_DIR) + "/default_corpus.json");
  CHECK(corpus_to_json(default_corpus()).dump(2) + "\n" == file);

  CorpusSpec parsed = corpus_from_json(json::parse(file));
  CHECK(corpus_to_json(parsed).dump(2) + "\n" == file);
}

TEST_CASE("corpus parsing rejects malformed families") {
  CHECK_THROWS_WITH(
      corpus_from_json(json::parse(
          R"({"families":[{"family":"random-convex","count":2,"n_min":9,"n_max":8,"seed":1}]})")),
      "bad random-convex range");
  CHECK_THROWS_WITH(
      corpus_from_json(json::parse(R"({"families":[{"family":"convex"}]})")),
      "family entry without size list");
}

TEST_CASE("claim registry") {
  const auto& ids = known_claims();
  REQUIRE(ids.size() == 12);
  CHECK(ids.front() == "C1");
  CHECK(ids.back() == "C12");

  CorpusSpec tiny;
  tiny.families.push_back({"twisted", {5}, 0, 0, 0, 0});
  HarnessOptions opt;
  opt.claims = {"C99"};
  CHECK_THROWS_WITH(run_claims(tiny, opt), "unknown claim id: C99");
}

TEST_CASE("claims run in registry order over the corpus order") {
  CorpusSpec c;
  c.families.push_back({"twisted", {4, 5, 6}, 0, 0, 0, 0});
  HarnessOptions opt;
  opt.claims = {"C10", "C1"};  // filter order must not matter
  opt.threads = 1;
  auto results = run_claims(c, opt);
  REQUIRE(results.size() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(results[i].claim_id == "C1");
    CHECK(results[i + 3].claim_id == "C10");
    CHECK(results[i].verdict == "pass");
    CHECK(results[i + 3].verdict == "pass");
  }
  CHECK(results[0].corpus_item == "T_4");
  CHECK(results[1].corpus_item == "T_5");
  CHECK(results[2].corpus_item == "T_6");
}

TEST_CASE("sampled claims stay quarantined unless asked for") {
  CorpusSpec c;  // no deterministic items needed
  c.hole6 = {2, 12, 77};
  HarnessOptions opt;
  opt.claims = {"C11"};
  auto rows = run_claims(c, opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == "skip");
  CHECK(rows[0].witness["reason"] == "sampled claim; pass --include-sampled");

  // without an explicit filter the quarantined rows vanish entirely
  HarnessOptions all;
  auto none = run_claims(c, all);
  for (const auto& r : none) CHECK(r.claim_id != "C11");
}

TEST_CASE("sampled 6-hole rows report consistency") {
  CorpusSpec c;
  c.hole6 = {2, 30, 2061};
  HarnessOptions opt;
  opt.claims = {"C11"};
  opt.include_sampled = true;
  auto rows = run_claims(c, opt);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.verdict == "consistent (sampled)");
    CHECK(r.corpus_item.substr(0, 5) == "R_30_");
  }
}

TEST_CASE("harness flags broken corpus inputs instead of dropping them") {
  CorpusSpec c;
  c.point_files = {"missing_points.txt"};
  HarnessOptions opt;
  opt.claims = {"C10"};
  auto rows = run_claims(c, opt);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verdict == "fail");
  CHECK(rows[0].witness.contains("error"));
}

TEST_CASE("census rows skip incompatible sizes") {
  auto rows = census_empty_cycles("dn", {5, 6, 7}, 4);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].count == 5);
  CHECK(rows[1].n == 7);
  CHECK(rows[1].count == 11);

  auto convex = census_empty_cycles("convex", {4, 5}, 4);
  REQUIRE(convex.size() == 2);
  CHECK(convex[0].count == 1);
  CHECK(convex[1].count == 5);

  CHECK_THROWS_WITH(census_empty_cycles("mystery", {5}, 4),
                    "unknown census family: mystery");
}

TEST_CASE("reports are schema-tagged and byte-deterministic") {
  CorpusSpec c;
  c.families.push_back({"twisted", {5, 6}, 0, 0, 0, 0});
  c.families.push_back({"dn", {5, 7}, 0, 0, 0, 0});
  HarnessOptions opt;

  auto run = [&] {
    auto results = run_claims(c, opt);
    return report_document(c, opt, results).dump(2);
  };
  std::string first = run();
  std::string second = run();
  CHECK(first == second);

  ordered_json j = ordered_json::parse(first);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["options"]["claims"] == ordered_json::array({"all"}));
  CHECK(j["options"]["include_sampled"] == false);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["total"] == j["results"].size());
  for (const auto& row : j["results"]) CHECK(row["runtime_ms"] == 0);
}

TEST_CASE("timings stay zero unless requested") {
  CorpusSpec c;
  c.families.push_back({"convex", {8}, 0, 0, 0, 0});
  HarnessOptions opt;
  opt.claims = {"C5"};
  for (const auto& r : run_claims(c, opt)) CHECK(r.runtime_ms == 0);
}
