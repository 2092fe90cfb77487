#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcmrank/methods.hpp"
#include "pcmrank/pairwise.hpp"

namespace pcmrank {

/**
 * @brief Parses a problem document.
 *
 * The document is a JSON object with a square "criteria" grid, an
 * "alternatives" array holding one square grid per criterion, and optional
 * "criterion_labels" / "alternative_labels" string arrays. Entries are
 * positive numbers or exact fraction strings "p/q". Labels default to
 * C1..Cm and A1..An.
 *
 * Throws ParseError for malformed documents (syntax, types, bad fractions)
 * and ValidationError / DomainError for structural or value problems
 * (dimensions, positivity, reciprocity), naming the matrix and entry.
 */
DecisionProblem parse_problem(const std::string& text);

/// Reads and parses a problem file.
DecisionProblem load_problem(const std::string& path);

/// Serializes a problem back to the document format (numbers, full precision).
std::string serialize_problem(const DecisionProblem& problem, int indent = 2);

/**
 * @brief Parses a single-matrix document for the `single` subcommand: either
 * a bare square grid or an object with "matrix" and optional "labels".
 */
PairwiseComparisonMatrix parse_single_matrix(const std::string& text);

struct ReportOptions {
  int precision = 4;
  double tie_tol = 1e-9;
  /// Count the worst differentiating solution as a separate opinion in the
  /// cross-method plurality tally.
  bool count_worst = false;
};

/// Everything the reports render: the problem plus whichever methods ran.
struct SolveReport {
  DecisionProblem problem;
  std::optional<ClassicalSolution> ahp;
  std::optional<ClassicalSolution> wgm;
  std::optional<LcaSolution> lca;
};

/// One method's view of the final ratings, as used by the comparison table.
struct MethodSummary {
  std::string method;
  std::vector<std::string> labels;
  std::vector<double> ratings_max;
  Ranking ranking;
  bool counts_for_plurality = true;
};

/// Summaries in report order (ahp, wgm, lca_best, lca_worst) for the methods present.
std::vector<MethodSummary> collect_summaries(const SolveReport& report,
                                             const ReportOptions& options);

/**
 * @brief Side-by-side comparison of at least two method results: ratings
 * table, per-method rankings, and the plurality line naming the
 * alternative(s) that top the most methods.
 *
 * Throws ShapeError when fewer than two summaries are given or the label
 * sets differ.
 */
std::string render_comparison(const std::vector<MethodSummary>& summaries, int precision);

/// Human-readable report (vectors at the chosen precision, rankings in ≻/≡ notation).
std::string render_text(const SolveReport& report, const ReportOptions& options);

/// Machine-readable report with full-precision vectors.
nlohmann::json render_json(const SolveReport& report, const ReportOptions& options);

/// CSV rows: method,alternative,rating_max_norm,rank
std::string render_csv(const SolveReport& report, const ReportOptions& options);

}  // namespace pcmrank
