#include "pcmrank/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcmrank/problem_io.hpp"
#include "pcmrank/version.hpp"

namespace pcmrank {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string joined;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) joined += ", ";
    joined += labels[i];
  }
  return joined;
}

int do_validate(const std::string& path, std::ostream& out) {
  // parse_problem performs the full structure and reciprocity validation;
  // reaching the report below means the document is well-formed.
  DecisionProblem problem = load_problem(path);
  out << "pcmrank " << kVersion << "\n";
  out << "criteria: " << problem.criteria_count() << "x" << problem.criteria_count()
      << " reciprocal matrix - ok (consistent: "
      << (is_consistent(problem.criteria()) ? "yes" : "no") << ")\n";
  const auto criterion_labels = problem.criterion_labels();
  for (std::size_t k = 0; k < problem.alternatives().size(); ++k) {
    const auto& a = problem.alternatives()[k];
    out << "alternatives[" << k + 1 << "] (" << criterion_labels[k] << "): " << a.size() << "x"
        << a.size() << " reciprocal matrix - ok (consistent: "
        << (is_consistent(a) ? "yes" : "no") << ")\n";
  }
  out << "structure: " << problem.criteria_count() << " criteria, "
      << problem.alternative_count() << " alternatives - ok\n";
  return kExitOk;
}

int do_solve(const std::string& path, const std::string& method, const std::string& format,
             const ReportOptions& options, std::ostream& out) {
  SolveReport report{load_problem(path), std::nullopt, std::nullopt, std::nullopt};
  if (method == "ahp" || method == "all") {
    report.ahp = ahp_solve(report.problem, options.tie_tol);
  }
  if (method == "wgm" || method == "all") {
    report.wgm = wgm_solve(report.problem, options.tie_tol);
  }
  if (method == "lca" || method == "all") {
    report.lca = lca_solve(report.problem, options.tie_tol);
  }

  if (format == "json") {
    out << render_json(report, options).dump(2) << "\n";
  } else if (format == "csv") {
    out << render_csv(report, options);
  } else {
    out << render_text(report, options);
  }
  return kExitOk;
}

int do_single(const std::string& path, const std::string& method, const std::string& format,
              const ReportOptions& options, std::ostream& out) {
  PairwiseComparisonMatrix pcm = parse_single_matrix(read_file(path));
  const auto& labels = pcm.labels();
  const int precision = options.precision;

  auto format_values = [&](const std::vector<double>& values) {
    std::ostringstream text;
    text << "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) text << ", ";
      char buffer[64];
      std::snprintf(buffer, sizeof(buffer), "%.*f", precision, values[i]);
      text << buffer;
    }
    text << ")";
    return text.str();
  };

  nlohmann::json doc;
  std::ostringstream text;
  text << "pcmrank " << kVersion << "\n";
  text << "matrix: " << pcm.size() << "x" << pcm.size() << "\n";
  text << "labels: " << join_labels(labels) << "\n";
  doc["tool"] = {{"name", "pcmrank"}, {"version", kVersion}};
  doc["labels"] = labels;
  doc["method"] = method;

  if (method == "lca") {
    auto gen = solve_single(pcm);
    auto result = differentiate(gen);
    const auto& best = result.best.front();
    auto ranking_best = rank_alternatives(best, options.tie_tol);
    auto ranking_worst = rank_alternatives(result.worst, options.tie_tol);
    text << "objective (lambda): " << format_values({gen.lambda}) << "\n";
    text << "best ratings (max): " << format_values(best.values()) << "\n";
    for (std::size_t i = 1; i < result.best.size(); ++i) {
      text << "best ratings (max, alternate " << i
           << "): " << format_values(result.best[i].values()) << "\n";
    }
    text << "best ranking: " << format_ranking(ranking_best, labels) << "\n";
    text << "worst ratings (max): " << format_values(result.worst.values()) << "\n";
    text << "worst ranking: " << format_ranking(ranking_worst, labels) << "\n";
    nlohmann::json best_list = nlohmann::json::array();
    for (const auto& v : result.best) best_list.push_back(v.values());
    doc["lambda"] = gen.lambda;
    doc["approximation_error"] = gen.lambda - 1.0;
    doc["best"] = {{"ratings", best_list},
                   {"seminorm", result.best_seminorm},
                   {"ranking", format_ranking(ranking_best, labels)}};
    doc["worst"] = {{"ratings", result.worst.values()},
                    {"seminorm", result.worst_seminorm},
                    {"ranking", format_ranking(ranking_worst, labels)}};
  } else if (method == "eig") {
    auto [vec, eigenvalue] = principal_eigenvector(pcm.matrix());
    auto ranking = rank_alternatives(vec, options.tie_tol);
    text << "eigenvalue: " << format_values({eigenvalue}) << "\n";
    text << "ratings (sum): " << format_values(vec.values()) << "\n";
    text << "ratings (max): "
         << format_values(vec.renormalized(Normalization::kMax).values()) << "\n";
    text << "ranking: " << format_ranking(ranking, labels) << "\n";
    doc["eigenvalue"] = eigenvalue;
    doc["ratings"] = {{"sum_normalized", vec.values()},
                      {"max_normalized", vec.renormalized(Normalization::kMax).values()}};
    doc["ranking"] = format_ranking(ranking, labels);
  } else {  // gmean
    auto vec = geometric_mean_vector(pcm.matrix());
    auto ranking = rank_alternatives(vec, options.tie_tol);
    text << "ratings (raw): " << format_values(vec.values()) << "\n";
    text << "ratings (sum): "
         << format_values(vec.renormalized(Normalization::kSum).values()) << "\n";
    text << "ratings (max): "
         << format_values(vec.renormalized(Normalization::kMax).values()) << "\n";
    text << "ranking: " << format_ranking(ranking, labels) << "\n";
    doc["ratings"] = {{"raw", vec.values()},
                      {"sum_normalized", vec.renormalized(Normalization::kSum).values()},
                      {"max_normalized", vec.renormalized(Normalization::kMax).values()}};
    doc["ranking"] = format_ranking(ranking, labels);
  }

  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absolute ratings of decision alternatives from pairwise comparison "
               "matrices: tropical log-Chebyshev approximation (LCA) next to the "
               "classical AHP and weighted-geometric-means methods."};
  app.set_version_flag("--version", std::string("pcmrank ") + kVersion);
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check reciprocity and structure of a problem file");
  validate_cmd->add_option("file", validate_path, "problem file")->required();

  std::string solve_path;
  std::string solve_method = "all";
  std::string solve_format = "text";
  ReportOptions solve_options;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a multicriteria problem file");
  solve_cmd->add_option("file", solve_path, "problem file")->required();
  solve_cmd->add_option("--method", solve_method, "method to run")
      ->check(CLI::IsMember({"lca", "ahp", "wgm", "all"}))
      ->capture_default_str();
  solve_cmd->add_option("--format", solve_format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  solve_cmd->add_option("--tie-tol", solve_options.tie_tol, "relative tie tolerance for rankings")
      ->capture_default_str();
  solve_cmd->add_option("--precision", solve_options.precision, "printed decimal digits")
      ->capture_default_str();
  solve_cmd->add_flag("--count-worst", solve_options.count_worst,
                      "count the worst differentiating LCA solution in the plurality tally");

  std::string single_path;
  std::string single_method = "lca";
  std::string single_format = "text";
  ReportOptions single_options;
  auto* single_cmd = app.add_subcommand("single", "Rate alternatives from one matrix");
  single_cmd->add_option("file", single_path, "matrix file")->required();
  single_cmd->add_option("--method", single_method, "method to run")
      ->check(CLI::IsMember({"lca", "eig", "gmean"}))
      ->capture_default_str();
  single_cmd->add_option("--format", single_format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  single_cmd->add_option("--tie-tol", single_options.tie_tol,
                         "relative tie tolerance for rankings")
      ->capture_default_str();
  single_cmd->add_option("--precision", single_options.precision, "printed decimal digits")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      return do_validate(validate_path, out);
    }
    if (app.got_subcommand(solve_cmd)) {
      return do_solve(solve_path, solve_method, solve_format, solve_options, out);
    }
    return do_single(single_path, single_method, single_format, single_options, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ShapeError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace pcmrank
