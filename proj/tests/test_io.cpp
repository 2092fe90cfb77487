#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "pcmrank/problem_io.hpp"

using namespace pcmrank;

namespace {

std::string data_dir() {
  const char* dir = std::getenv("PCMRANK_TEST_DATA");
  REQUIRE(dir != nullptr);
  return dir;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SolveReport solve_all(const DecisionProblem& problem) {
  return SolveReport{problem, ahp_solve(problem), wgm_solve(problem), lca_solve(problem)};
}

}  // namespace

TEST_CASE("parse_problem reads the school fixture with exact fraction entries") {
  auto problem = load_problem(data_dir() + "/school.json");
  CHECK(problem.criteria_count() == 6);
  CHECK(problem.alternative_count() == 3);
  CHECK(problem.criterion_labels() == fixtures::school_criterion_labels());
  CHECK(problem.alternative_labels() == fixtures::school_alternative_labels());
  CHECK(problem.criteria().matrix() == fixtures::school_criteria());
  const auto grids = fixtures::school_alternative_grids();
  for (std::size_t k = 0; k < grids.size(); ++k) {
    CHECK(problem.alternatives()[k].matrix() == grids[k]);
  }
}

TEST_CASE("labels default when absent") {
  auto problem = parse_problem(R"({
    "criteria": [[1, 2], ["1/2", 1]],
    "alternatives": [[[1, 3], ["1/3", 1]], [[1, 1], [1, 1]]]
  })");
  CHECK(problem.criterion_labels() == std::vector<std::string>{"C1", "C2"});
  CHECK(problem.alternative_labels() == std::vector<std::string>{"A1", "A2"});
}

TEST_CASE("parse errors carry positions and context") {
  CHECK_THROWS_AS(parse_problem("{\"criteria\": [[1,"), ParseError);
  CHECK_THROWS_AS(parse_problem("[]"), ParseError);
  CHECK_THROWS_AS(parse_problem("{\"criteria\": [[1]]}"), ParseError);

  // Malformed fractions are parse errors.
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, "1/0"], ["0/1", 1]],
                                    "alternatives": [[[1]], [[1]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, "x"], ["1/2", 1]],
                                    "alternatives": [[[1]], [[1]]]})"),
                  ParseError);

  // Structure problems are validation errors.
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, 2], ["1/2", 1]],
                                    "alternatives": [[[1]], [[1]], [[1]]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, 2, 3], ["1/2", 1]],
                                    "alternatives": [[[1]], [[1]]]})"),
                  ValidationError);

  // Value problems: positivity and reciprocity.
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, 0], [2, 1]],
                                    "alternatives": [[[1]], [[1]]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_problem(R"({"criteria": [[1, 2], [3, 1]],
                                    "alternatives": [[[1]], [[1]]]})"),
                  ValidationError);
}

TEST_CASE("reciprocity violation message names the matrix and entry") {
  try {
    parse_problem(R"({"criteria": [[1, 2], [3, 1]], "alternatives": [[[1]], [[1]]]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string message = e.what();
    CHECK(message.find("criteria") != std::string::npos);
    CHECK(message.find("(1,2)") != std::string::npos);
  }
}

TEST_CASE("parse-serialize-parse round trip is exact") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto reparsed = parse_problem(serialize_problem(problem));
  CHECK(reparsed == problem);
}

TEST_CASE("json report vectors round-trip exactly") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto report = solve_all(problem);
  auto doc = render_json(report, ReportOptions{});
  auto parsed = nlohmann::json::parse(doc.dump());

  const auto& results = parsed.at("results");
  REQUIRE(results.size() == 4);
  CHECK(results[0].at("method") == "ahp");
  CHECK(results[0].at("ratings").at("max_normalized").get<std::vector<double>>() ==
        report.ahp->ratings_max.values());
  CHECK(results[1].at("method") == "wgm");
  CHECK(results[1].at("ratings").at("sum_normalized").get<std::vector<double>>() ==
        report.wgm->ratings_sum.values());
  CHECK(results[2].at("method") == "lca_best");
  CHECK(results[2].at("ratings").at("max_normalized").get<std::vector<double>>() ==
        report.lca->ratings_best().front().values());
  CHECK(results[2].at("diagnostics").at("lambda").get<double>() == report.lca->lambda);
  CHECK(results[3].at("method") == "lca_worst");
  CHECK(results[3].at("ratings").at("max_normalized").get<std::vector<double>>() ==
        report.lca->ratings_worst.values());

  CHECK(parsed.at("comparison").at("plurality").get<std::vector<std::string>>() ==
        std::vector<std::string>{"A"});
}

TEST_CASE("text report shows the expected vectors and rankings") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto text = render_text(solve_all(problem), ReportOptions{});
  CHECK(text.find("(1.0000, 0.9292, 0.6194)") != std::string::npos);
  CHECK(text.find("(1.0000, 0.8787, 1.0000)") != std::string::npos);
  CHECK(text.find("A ≻ B ≻ C") != std::string::npos);
  CHECK(text.find("A ≡ C ≻ B") != std::string::npos);
  CHECK(text.find("B ≻ A ≻ C") != std::string::npos);
  CHECK(text.find("most preferred: A") != std::string::npos);
}

TEST_CASE("csv report emits one row per alternative per method") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto csv = render_csv(solve_all(problem), ReportOptions{});
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "method,alternative,rating_max_norm,rank");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4 * 3);
  CHECK(csv.find("ahp,B,1.0000,1") != std::string::npos);
  CHECK(csv.find("lca_worst,C,1.0000,1") != std::string::npos);
}

TEST_CASE("comparison requires at least two methods with matching labels") {
  auto problem = load_problem(data_dir() + "/school.json");
  SolveReport only_ahp{problem, ahp_solve(problem), std::nullopt, std::nullopt};
  auto summaries = collect_summaries(only_ahp, ReportOptions{});
  REQUIRE(summaries.size() == 1);
  CHECK_THROWS_AS(render_comparison(summaries, 4), ShapeError);

  auto full = collect_summaries(solve_all(problem), ReportOptions{});
  auto mismatched = full;
  mismatched[1].labels[0] = "Z";
  CHECK_THROWS_AS(render_comparison(mismatched, 4), ShapeError);
}

TEST_CASE("plurality counts the worst solution only when asked") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto report = solve_all(problem);

  auto default_summary = collect_summaries(report, ReportOptions{});
  auto comparison = render_comparison(default_summary, 4);
  CHECK(comparison.find("top rating in 2 of 3 methods") != std::string::npos);

  ReportOptions with_worst;
  with_worst.count_worst = true;
  auto counted = render_comparison(collect_summaries(report, with_worst), 4);
  // The worst LCA solution also puts A on top, so A now tops 3 of 4.
  CHECK(counted.find("top rating in 3 of 4 methods") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  auto problem = load_problem(data_dir() + "/school.json");
  auto report = solve_all(problem);
  ReportOptions options;
  CHECK(render_text(report, options) == render_text(report, options));
  CHECK(render_json(report, options).dump(2) == render_json(report, options).dump(2));
  CHECK(render_csv(report, options) == render_csv(report, options));
}

TEST_CASE("single-matrix documents") {
  auto bare = parse_single_matrix("[[1, 2], [\"1/2\", 1]]");
  CHECK(bare.size() == 2);
  CHECK(bare.labels() == std::vector<std::string>{"A1", "A2"});

  auto labeled = parse_single_matrix(R"({"matrix": [[1, 2], [0.5, 1]], "labels": ["x", "y"]})");
  CHECK(labeled.labels() == std::vector<std::string>{"x", "y"});

  CHECK_THROWS_AS(parse_single_matrix("{}"), ParseError);
  CHECK_THROWS_AS(parse_single_matrix(R"({"matrix": [[1, 2], [3, 1]]})"), ValidationError);
}
