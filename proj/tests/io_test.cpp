#include <random>
#include <regex>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "kings/enumerate.hpp"
#include "kings/io.hpp"

namespace kings {
namespace {

using nlohmann::json;

TEST(TournamentJson, RoundTripExhaustiveUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& sel : enumerate_tournaments(n)) {
      ASSERT_EQ(io::tournament_from_json(io::tournament_to_json(sel)), sel);
    }
  }
}

TEST(TournamentJson, RoundTripRandomWithNames) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("team \"" + std::to_string(rng() % 1000) + "\"#" + std::to_string(i));
    const auto sel = random_tournament(n, rng()).with_players(names);
    EXPECT_EQ(io::tournament_from_json(io::tournament_to_json(sel)), sel);
  }
}

TEST(TournamentJson, Layout) {
  const auto doc = json::parse(io::tournament_to_json(test::three_cycle()));
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["players"], json({"0", "1", "2"}));
  ASSERT_EQ(doc["choices"].size(), 3u);
  EXPECT_EQ(doc["choices"][0], json({{"i", 0}, {"j", 1}, {"pick", 1}}));
  EXPECT_EQ(doc["choices"][1], json({{"i", 0}, {"j", 2}, {"pick", 0}}));
  EXPECT_EQ(doc["choices"][2], json({{"i", 1}, {"j", 2}, {"pick", 2}}));
}

void expect_rejected(const std::string& text, const std::string& needle) {
  try {
    io::tournament_from_json(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(TournamentJson, RejectsMalformedDocuments) {
  const std::string head = R"({"format_version":1,"players":["a","b","c"],"choices":)";
  expect_rejected("{", "malformed JSON");
  expect_rejected(head + R"([{"i":0,"j":1,"pick":2},{"i":0,"j":2,"pick":0},{"i":1,"j":2,"pick":1}]})", "{0,1}");
  expect_rejected(head + R"([{"i":0,"j":1,"pick":1},{"i":0,"j":1,"pick":0},{"i":1,"j":2,"pick":1}]})", "twice");
  expect_rejected(head + R"([{"i":0,"j":1,"pick":1},{"i":1,"j":2,"pick":1}]})", "{0,2}");
  expect_rejected(head + R"([{"i":1,"j":0,"pick":1}]})", "i < j");
  expect_rejected(head + R"([{"i":0,"j":3,"pick":0}]})", "outside");
  expect_rejected(R"({"format_version":2,"players":[],"choices":[]})", "format_version");
  expect_rejected(R"({"format_version":1,"players":["a","a"],"choices":[{"i":0,"j":1,"pick":0}]})", "duplicate");
  expect_rejected(R"({"format_version":1,"players":[],"choices":[],"extra":1})", "extra");
  expect_rejected(R"({"format_version":1,"choices":[]})", "players");
}

TEST(TournamentJson, EmptyPlayerListParses) {
  EXPECT_TRUE(io::tournament_from_json(R"({"format_version":1,"players":[],"choices":[]})").empty());
}

TEST(SpaceJson, RoundTrip) {
  const SampledSpace space({{0.125, 0.5}, {1.0 / 3.0, 0.0}, {1, 1}}, {0.1, 0.2, 0.3}, {"a", "b", "c"});
  EXPECT_EQ(io::space_from_json(io::space_to_json(space)), space);
  const SampledSpace bare({{0.0, 0.0}});
  EXPECT_EQ(io::space_from_json(io::space_to_json(bare)), bare);
  EXPECT_THROW(io::space_from_json(R"({"format_version":1,"points":[[0.1]]})"), InputError);
  EXPECT_THROW(io::space_from_json(R"({"format_version":1,"points":[[0.1,2]]})"), InputError);
}

TEST(SpecJson, ParsesEveryKind) {
  EXPECT_EQ(io::spec_from_json(R"({"kind":"random","n":5,"seed":42})").n, 5u);
  EXPECT_EQ(io::spec_from_json(R"({"kind":"order_max","keys":[3,1,2]})").keys, (std::vector<double>{3, 1, 2}));
  EXPECT_EQ(io::spec_from_json(R"({"kind":"graph_min","s_values":[0,0.5,1]})").kind, SelectionKind::graph_min);
  const auto sum = io::spec_from_json(
      R"({"kind":"clopen_sum","u":{"kind":"random","n":2,"seed":1},"v":{"kind":"order_min","keys":[1,2]}})");
  ASSERT_EQ(sum.parts.size(), 2u);
  EXPECT_EQ(materialize(sum).size(), 4u);
  const auto graded = io::spec_from_json(
      R"({"kind":"graded_partition","blocks":[[0],[1,2]],"within":[{"kind":"random","n":1,"seed":0},{"kind":"order_min","keys":[5,1]}]})");
  EXPECT_EQ(materialize(graded).size(), 3u);
}

TEST(SpecJson, RoundTrip) {
  const auto text =
      R"({"kind":"clopen_sum","u":{"kind":"graded_partition","blocks":[[1],[0]]},"v":{"kind":"random","n":3,"seed":18446744073709551615}})";
  const auto spec = io::spec_from_json(text);
  EXPECT_EQ(spec.parts[1].seed, 18446744073709551615ULL);
  EXPECT_EQ(io::spec_to_json(io::spec_from_json(io::spec_to_json(spec))), io::spec_to_json(spec));
}

void expect_spec_error(const std::string& text, const std::string& field) {
  try {
    io::spec_from_json(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
  }
}

TEST(SpecJson, ErrorsNameTheField) {
  expect_spec_error(R"({"kind":"random","n":0,"seed":1})", "n");
  expect_spec_error(R"({"kind":"random","n":3})", "seed");
  expect_spec_error(R"({"kind":"random","n":3,"seed":-1})", "seed");
  expect_spec_error(R"({"kind":"mystery"})", "kind");
  expect_spec_error(R"({"kind":"order_min","keys":[1,"x"]})", "keys[1]");
  expect_spec_error(R"({"kind":"order_min","keys":[1,2,1]})", "keys[2]");
  expect_spec_error(R"({"kind":"graph_max","s_values":[0.5,2]})", "s_values[1]");
  expect_spec_error(R"({"kind":"graded_partition","blocks":[[0],[]]})", "blocks[1]");
  expect_spec_error(R"({"kind":"clopen_sum","u":{"kind":"order_min","keys":[1,1]},"v":{"kind":"random","n":1,"seed":0}})",
                    "u.keys");
  expect_spec_error(R"({"kind":"graded_partition","blocks":[[0]],"within":[{"kind":"random","n":2,"seed":0}]})",
                    "within[0]");
  expect_spec_error(R"({"kind":"random","n":3,"seed":1,"colour":"red"})", "colour");
}

TEST(ReportJson, ConsistentWithKingReport) {
  const auto sel = test::three_cycle().with_players({"ann", "bob", "cy"});
  const auto report = king_report(sel);
  io::ReportOptions opts;
  opts.include_k_sets = true;
  opts.include_witnesses = true;
  const auto doc = json::parse(io::report_to_json(sel, report, opts));
  EXPECT_EQ(doc["kings"], json({"ann", "bob", "cy"}));
  EXPECT_EQ(doc["k_sets"]["ann"], json({"ann", "bob", "cy"}));
  EXPECT_EQ(doc["witnesses"].size(), 9u);
  EXPECT_TRUE(doc["metadata"].is_object());
  const auto embedded = io::tournament_from_json(doc["tournament"].dump());
  EXPECT_EQ(embedded, sel);
  EXPECT_EQ(king_report(embedded).kings, report.kings);

  const auto lean = json::parse(io::report_to_json(sel, report, {}));
  EXPECT_FALSE(lean.contains("k_sets"));
  EXPECT_FALSE(lean.contains("witnesses"));
}

TEST(Dot, TwoPlayerHasOneEdge) {
  const auto sel = WeakSelection::from_rule(2, [](std::size_t i, std::size_t) { return i; });  // 1 beats 0
  const auto dot = io::tournament_to_dot(sel);
  EXPECT_NE(dot.find("\"1\" -> \"0\";"), std::string::npos);
  EXPECT_EQ(dot.find("\"0\" -> \"1\""), std::string::npos);
  EXPECT_NE(dot.find("\"1\" [shape=doublecircle"), std::string::npos);
}

TEST(Dot, EdgeCountAndCycle) {
  const auto cyc = io::tournament_to_dot(test::three_cycle());
  for (const char* e : {"\"0\" -> \"1\"", "\"1\" -> \"2\"", "\"2\" -> \"0\""}) EXPECT_NE(cyc.find(e), std::string::npos);

  const auto sel = random_tournament(9, 3);
  const auto dot = io::tournament_to_dot(sel);
  std::regex edge("\" -> \"");
  const auto edges = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
  EXPECT_EQ(edges, 36);
  EXPECT_EQ(dot, io::tournament_to_dot(sel));
}

TEST(TraceFormats, CsvColumns) {
  const auto csv = io::trace_to_csv(gap_escape_experiment(3));
  EXPECT_EQ(csv, "level,sample_size,king_ids,king_metric\n1,2,1,0.5\n2,4,3,0.25\n3,8,7,0.125\n");
  const auto doc = json::parse(io::trace_to_json(gap_escape_experiment(2)));
  EXPECT_EQ(doc["mode"], "gap");
  EXPECT_EQ(doc["levels"][1]["king_metric"][0], 0.25);
}

TEST(CertificateJson, Fields) {
  ContinuityCertificate cert;
  cert.delta = 0.125;
  cert.epsilon = 0.25;
  cert.verdict = Verdict::violation;
  cert.violations.push_back({1, 2, 3, 4, "why"});
  cert.violation_count = 1;
  const auto doc = json::parse(io::certificate_to_json(cert));
  EXPECT_EQ(doc["verdict"], "violation");
  EXPECT_EQ(doc["violations"][0]["a_perturbed"], 3);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(io::format_double(0.0625), "0.0625");
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(io::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace kings
