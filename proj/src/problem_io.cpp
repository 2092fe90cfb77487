#include "pcmrank/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pcmrank/version.hpp"

namespace pcmrank {

namespace {

using nlohmann::json;

std::string entry_context(const std::string& name, std::size_t i, std::size_t j) {
  std::ostringstream out;
  out << name << ": entry (" << i + 1 << "," << j + 1 << ")";
  return out.str();
}

/// Exact fraction "p/q" with positive integer parts.
double parse_fraction(const std::string& text, const std::string& context) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError(context + ": empty fraction string");
  }
  const std::string body = text.substr(first, last - first + 1);
  const auto slash = body.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= body.size()) {
    throw ParseError(context + ": malformed fraction \"" + text + "\"");
  }
  auto parse_part = [&](std::size_t begin, std::size_t end) -> long long {
    long long value = 0;
    const char* b = body.data() + begin;
    const char* e = body.data() + end;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e) {
      throw ParseError(context + ": malformed fraction \"" + text + "\"");
    }
    return value;
  };
  const long long numerator = parse_part(0, slash);
  const long long denominator = parse_part(slash + 1, body.size());
  if (numerator < 1 || denominator < 1) {
    throw ParseError(context + ": fraction parts must be positive integers in \"" + text + "\"");
  }
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double parse_entry(const json& value, const std::string& name, std::size_t i, std::size_t j) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!(std::isfinite(v) && v > 0.0)) {
      throw ValidationError(entry_context(name, i, j) + " must be positive, got " +
                            value.dump());
    }
    return v;
  }
  if (value.is_string()) {
    return parse_fraction(value.get<std::string>(), entry_context(name, i, j));
  }
  throw ParseError(entry_context(name, i, j) + " must be a number or a fraction string, got " +
                   value.dump());
}

TropicalMatrix parse_grid(const json& grid, const std::string& name) {
  if (!grid.is_array() || grid.empty()) {
    throw ParseError(name + ": expected a non-empty array of rows");
  }
  const std::size_t n = grid.size();
  std::vector<std::vector<double>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = grid[i];
    if (!row.is_array()) {
      throw ParseError(name + ": row " + std::to_string(i + 1) + " is not an array");
    }
    if (row.size() != n) {
      std::ostringstream msg;
      msg << name << ": row " << i + 1 << " has " << row.size() << " entries, expected " << n
          << " (matrix must be square)";
      throw ValidationError(msg.str());
    }
    std::vector<double> parsed;
    parsed.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      parsed.push_back(parse_entry(row[j], name, i, j));
    }
    rows.push_back(std::move(parsed));
  }
  return TropicalMatrix::from_rows(rows);
}

std::vector<std::string> parse_labels(const json& doc, const std::string& key) {
  if (!doc.contains(key)) return {};
  const json& value = doc.at(key);
  if (!value.is_array()) {
    throw ParseError(key + " must be an array of strings");
  }
  std::vector<std::string> labels;
  labels.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_string()) {
      throw ParseError(key + " must contain only strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

json document_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(err.what());
  }
}

std::string format_double(double v, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, v);
  return buffer;
}

std::string format_vector(const std::vector<double>& values, int precision) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << format_double(values[i], precision);
  }
  out << ")";
  return out.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& separator) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << separator;
    out << parts[i];
  }
  return out.str();
}

json matrix_to_json(const TropicalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json ranking_to_json(const Ranking& ranking, const std::vector<std::string>& labels) {
  json groups = json::array();
  for (const auto& group : ranking.groups) {
    json names = json::array();
    for (std::size_t idx : group) names.push_back(labels[idx]);
    groups.push_back(std::move(names));
  }
  return groups;
}

json vector_views(const RatingVector& v) {
  return json{{"max_normalized", v.renormalized(Normalization::kMax).values()},
              {"sum_normalized", v.renormalized(Normalization::kSum).values()}};
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

DecisionProblem parse_problem(const std::string& text) {
  const json doc = document_root(text);
  if (!doc.is_object()) {
    throw ParseError("problem document must be a JSON object");
  }
  if (!doc.contains("criteria")) {
    throw ParseError("problem document is missing the \"criteria\" matrix");
  }
  if (!doc.contains("alternatives")) {
    throw ParseError("problem document is missing the \"alternatives\" matrices");
  }

  auto criterion_labels = parse_labels(doc, "criterion_labels");
  auto alternative_labels = parse_labels(doc, "alternative_labels");

  TropicalMatrix criteria_grid = parse_grid(doc.at("criteria"), "criteria");
  const std::size_t m = criteria_grid.rows();
  if (criterion_labels.empty()) {
    criterion_labels = default_labels(m, "C");
  } else if (criterion_labels.size() != m) {
    std::ostringstream msg;
    msg << "criterion_labels has " << criterion_labels.size() << " entries for a " << m << "x"
        << m << " criteria matrix";
    throw ValidationError(msg.str());
  }

  const json& alternatives_doc = doc.at("alternatives");
  if (!alternatives_doc.is_array() || alternatives_doc.empty()) {
    throw ParseError("\"alternatives\" must be a non-empty array of matrices");
  }
  if (alternatives_doc.size() != m) {
    std::ostringstream msg;
    msg << "criteria matrix is " << m << "x" << m << " but " << alternatives_doc.size()
        << " alternatives matrices were given";
    throw ValidationError(msg.str());
  }

  std::vector<TropicalMatrix> alternative_grids;
  alternative_grids.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    alternative_grids.push_back(
        parse_grid(alternatives_doc[k], "alternatives[" + std::to_string(k + 1) + "]"));
  }
  const std::size_t n = alternative_grids.front().rows();
  if (alternative_labels.empty()) {
    alternative_labels = default_labels(n, "A");
  } else if (alternative_labels.size() != n) {
    std::ostringstream msg;
    msg << "alternative_labels has " << alternative_labels.size() << " entries for " << n
        << " alternatives";
    throw ValidationError(msg.str());
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (alternative_grids[k].rows() != n) {
      std::ostringstream msg;
      msg << "alternatives[" << k + 1 << "] is " << alternative_grids[k].rows() << "x"
          << alternative_grids[k].cols() << ", expected " << n << "x" << n;
      throw ValidationError(msg.str());
    }
  }

  auto criteria = validate_reciprocal(criteria_grid, 1e-6, criterion_labels, "criteria");
  std::vector<PairwiseComparisonMatrix> alternatives;
  alternatives.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    alternatives.push_back(validate_reciprocal(alternative_grids[k], 1e-6, alternative_labels,
                                               "alternatives[" + std::to_string(k + 1) + "]"));
  }
  return DecisionProblem(std::move(criteria), std::move(alternatives));
}

DecisionProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string serialize_problem(const DecisionProblem& problem, int indent) {
  json doc;
  doc["criterion_labels"] = problem.criterion_labels();
  doc["alternative_labels"] = problem.alternative_labels();
  doc["criteria"] = matrix_to_json(problem.criteria().matrix());
  json alternatives = json::array();
  for (const auto& a : problem.alternatives()) {
    alternatives.push_back(matrix_to_json(a.matrix()));
  }
  doc["alternatives"] = std::move(alternatives);
  return doc.dump(indent);
}

PairwiseComparisonMatrix parse_single_matrix(const std::string& text) {
  const json doc = document_root(text);
  json grid;
  std::vector<std::string> labels;
  if (doc.is_array()) {
    grid = doc;
  } else if (doc.is_object() && doc.contains("matrix")) {
    grid = doc.at("matrix");
    labels = parse_labels(doc, "labels");
  } else {
    throw ParseError("single-matrix document must be a grid or an object with a \"matrix\" key");
  }
  TropicalMatrix m = parse_grid(grid, "matrix");
  if (labels.empty()) {
    labels = default_labels(m.rows(), "A");
  } else if (labels.size() != m.rows()) {
    std::ostringstream msg;
    msg << "labels has " << labels.size() << " entries for a " << m.rows() << "x" << m.rows()
        << " matrix";
    throw ValidationError(msg.str());
  }
  return validate_reciprocal(m, 1e-6, labels, "matrix");
}

std::vector<MethodSummary> collect_summaries(const SolveReport& report,
                                             const ReportOptions& options) {
  std::vector<MethodSummary> summaries;
  const auto labels = report.problem.alternative_labels();
  if (report.ahp) {
    summaries.push_back(
        {"ahp", labels, report.ahp->ratings_max.values(), report.ahp->ranking, true});
  }
  if (report.wgm) {
    summaries.push_back(
        {"wgm", labels, report.wgm->ratings_max.values(), report.wgm->ranking, true});
  }
  if (report.lca) {
    summaries.push_back({"lca_best", labels, report.lca->ratings_best().front().values(),
                         report.lca->ranking_best(), true});
    summaries.push_back({"lca_worst", labels, report.lca->ratings_worst.values(),
                         report.lca->ranking_worst, options.count_worst});
  }
  return summaries;
}

std::string render_comparison(const std::vector<MethodSummary>& summaries, int precision) {
  if (summaries.size() < 2) {
    throw ShapeError("comparison needs at least two method results");
  }
  const auto& labels = summaries.front().labels;
  for (const auto& summary : summaries) {
    if (summary.labels != labels) {
      throw ShapeError("comparison methods disagree on alternative labels");
    }
    if (summary.ratings_max.size() != labels.size()) {
      throw ShapeError("comparison ratings and labels have different lengths");
    }
  }

  // Ratings table, one column per method.
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"alternative"};
  for (const auto& summary : summaries) header.push_back(summary.method);
  cells.push_back(header);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::vector<std::string> row{labels[i]};
    for (const auto& summary : summaries) {
      row.push_back(format_double(summary.ratings_max[i], precision));
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size(), ' ');
    }
    out << "\n";
  }

  for (const auto& summary : summaries) {
    out << "ranking (" << summary.method << "): " << format_ranking(summary.ranking, labels)
        << "\n";
  }

  // Plurality rule: the alternative topping the most counted methods.
  std::vector<std::size_t> top_counts(labels.size(), 0);
  std::size_t counted = 0;
  for (const auto& summary : summaries) {
    if (!summary.counts_for_plurality) continue;
    ++counted;
    for (std::size_t idx : summary.ranking.groups.front()) ++top_counts[idx];
  }
  const std::size_t best_count = *std::max_element(top_counts.begin(), top_counts.end());
  std::vector<std::string> winners;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (top_counts[i] == best_count) winners.push_back(labels[i]);
  }
  out << "most preferred: " << join(winners, ", ") << " (top rating in " << best_count << " of "
      << counted << " methods)\n";
  return out.str();
}

std::string render_text(const SolveReport& report, const ReportOptions& options) {
  const int precision = options.precision;
  const auto criterion_labels = report.problem.criterion_labels();
  const auto alternative_labels = report.problem.alternative_labels();

  std::ostringstream out;
  out << "pcmrank " << kVersion << "\n";
  out << "problem: " << report.problem.criteria_count() << " criteria, "
      << report.problem.alternative_count() << " alternatives\n";
  out << "criteria: " << join(criterion_labels, ", ") << "\n";
  out << "alternatives: " << join(alternative_labels, ", ") << "\n";

  if (report.ahp) {
    const auto& ahp = *report.ahp;
    out << "\n== AHP ==\n";
    out << "criterion weights (sum): " << format_vector(ahp.criterion_weights.values(), precision)
        << "\n";
    out << "criteria eigenvalue: " << format_double(ahp.criteria_eigenvalue, precision) << "\n";
    out << "ratings (sum): " << format_vector(ahp.ratings_sum.values(), precision) << "\n";
    out << "ratings (max): " << format_vector(ahp.ratings_max.values(), precision) << "\n";
    out << "ranking: " << format_ranking(ahp.ranking, alternative_labels) << "\n";
  }

  if (report.wgm) {
    const auto& wgm = *report.wgm;
    out << "\n== WGM ==\n";
    out << "criterion weights (sum): " << format_vector(wgm.criterion_weights.values(), precision)
        << "\n";
    out << "ratings (sum): " << format_vector(wgm.ratings_sum.values(), precision) << "\n";
    out << "ratings (max): " << format_vector(wgm.ratings_max.values(), precision) << "\n";
    out << "ranking: " << format_ranking(wgm.ranking, alternative_labels) << "\n";
  }

  if (report.lca) {
    const auto& lca = *report.lca;
    out << "\n== LCA ==\n";
    out << "criteria objective (lambda): " << format_double(lca.lambda, precision)
        << "  [max relative error " << format_double(lca.lambda - 1.0, precision) << "]\n";
    out << "best weights (max): " << format_vector(lca.weights_best().values(), precision)
        << "\n";
    out << "worst weights (max): " << format_vector(lca.weights_worst.values(), precision)
        << "\n";
    const auto& branch = lca.headline();
    out << "best ratings objective (mu): " << format_double(branch.mu, precision)
        << "  [max relative error " << format_double(branch.mu - 1.0, precision) << "]\n";
    out << "best ratings (max): " << format_vector(branch.ratings.front().values(), precision)
        << "\n";
    for (std::size_t i = 1; i < branch.ratings.size(); ++i) {
      out << "best ratings (max, alternate " << i << "): "
          << format_vector(branch.ratings[i].values(), precision) << "\n";
    }
    out << "best ranking: " << format_ranking(branch.ranking, alternative_labels) << "\n";
    for (std::size_t b = 1; b < lca.branches.size(); ++b) {
      const auto& alt = lca.branches[b];
      out << "branch " << b + 1 << " weights (max): "
          << format_vector(alt.weights.values(), precision) << "\n";
      out << "branch " << b + 1 << " ratings objective (mu): "
          << format_double(alt.mu, precision) << "\n";
      out << "branch " << b + 1 << " ratings (max): "
          << format_vector(alt.ratings.front().values(), precision) << "\n";
      out << "branch " << b + 1 << " ranking: "
          << format_ranking(alt.ranking, alternative_labels) << "\n";
    }
    out << "worst ratings objective (nu): " << format_double(lca.nu, precision)
        << "  [max relative error " << format_double(lca.nu - 1.0, precision) << "]\n";
    out << "worst ratings (max): " << format_vector(lca.ratings_worst.values(), precision)
        << "\n";
    if (!lca.ratings_worst_norm_ok) {
      out << "note: worst ratings were renormalized to max 1\n";
    }
    out << "worst ranking: " << format_ranking(lca.ranking_worst, alternative_labels) << "\n";
  }

  auto summaries = collect_summaries(report, options);
  const int methods_present =
      (report.ahp ? 1 : 0) + (report.wgm ? 1 : 0) + (report.lca ? 1 : 0);
  if (methods_present >= 2) {
    out << "\n== comparison ==\n";
    out << render_comparison(summaries, precision);
  }
  return out.str();
}

nlohmann::json render_json(const SolveReport& report, const ReportOptions& options) {
  const auto criterion_labels = report.problem.criterion_labels();
  const auto alternative_labels = report.problem.alternative_labels();

  json doc;
  doc["tool"] = {{"name", "pcmrank"}, {"version", kVersion}};
  doc["input"] = {{"criterion_labels", criterion_labels},
                  {"alternative_labels", alternative_labels},
                  {"criteria", matrix_to_json(report.problem.criteria().matrix())}};
  json alternatives = json::array();
  for (const auto& a : report.problem.alternatives()) {
    alternatives.push_back(matrix_to_json(a.matrix()));
  }
  doc["input"]["alternatives"] = std::move(alternatives);

  json results = json::array();
  if (report.ahp) {
    const auto& ahp = *report.ahp;
    json per_criterion = json::array();
    for (const auto& v : ahp.per_criterion) per_criterion.push_back(v.values());
    results.push_back(
        {{"method", "ahp"},
         {"weights", vector_views(ahp.criterion_weights)},
         {"ratings", vector_views(ahp.ratings_sum)},
         {"ranking", ranking_to_json(ahp.ranking, alternative_labels)},
         {"tie", ahp.ranking.has_tie()},
         {"diagnostics",
          {{"eigenvalues",
            {{"criteria", ahp.criteria_eigenvalue},
             {"alternatives", ahp.alternative_eigenvalues}}},
           {"per_criterion_vectors", per_criterion}}}});
  }
  if (report.wgm) {
    const auto& wgm = *report.wgm;
    results.push_back({{"method", "wgm"},
                       {"weights", vector_views(wgm.criterion_weights)},
                       {"ratings", vector_views(wgm.ratings_sum)},
                       {"ranking", ranking_to_json(wgm.ranking, alternative_labels)},
                       {"tie", wgm.ranking.has_tie()},
                       {"diagnostics", json::object()}});
  }
  if (report.lca) {
    const auto& lca = *report.lca;
    const auto& branch = lca.headline();
    json alternate_ratings = json::array();
    for (std::size_t i = 1; i < branch.ratings.size(); ++i) {
      alternate_ratings.push_back(branch.ratings[i].values());
    }
    json alternate_branches = json::array();
    for (std::size_t b = 1; b < lca.branches.size(); ++b) {
      const auto& alt = lca.branches[b];
      json ratings = json::array();
      for (const auto& r : alt.ratings) ratings.push_back(r.values());
      alternate_branches.push_back({{"weights", alt.weights.values()},
                                    {"mu", alt.mu},
                                    {"ratings", ratings},
                                    {"ranking", ranking_to_json(alt.ranking,
                                                                alternative_labels)}});
    }
    results.push_back(
        {{"method", "lca_best"},
         {"weights", vector_views(lca.weights_best())},
         {"ratings", vector_views(branch.ratings.front())},
         {"ranking", ranking_to_json(branch.ranking, alternative_labels)},
         {"tie", branch.ranking.has_tie()},
         {"diagnostics",
          {{"lambda", lca.lambda},
           {"mu", branch.mu},
           {"approximation_error",
            {{"weights", lca.lambda - 1.0}, {"ratings", branch.mu - 1.0}}},
           {"weights_seminorm", lca.weights_seminorm},
           {"ratings_seminorm", branch.ratings_seminorm},
           {"weights_tie", lca.weights_tie},
           {"ratings_tie", branch.ratings_tie},
           {"alternate_ratings", alternate_ratings},
           {"alternate_branches", alternate_branches}}}});
    results.push_back(
        {{"method", "lca_worst"},
         {"weights", vector_views(lca.weights_worst)},
         {"ratings", vector_views(lca.ratings_worst)},
         {"ranking", ranking_to_json(lca.ranking_worst, alternative_labels)},
         {"tie", lca.ranking_worst.has_tie()},
         {"diagnostics",
          {{"lambda", lca.lambda},
           {"nu", lca.nu},
           {"approximation_error",
            {{"weights", lca.lambda - 1.0}, {"ratings", lca.nu - 1.0}}},
           {"weights_seminorm", lca.weights_worst_seminorm},
           {"ratings_seminorm", lca.ratings_worst_seminorm},
           {"weights_norm_constraint_ok", lca.weights_worst_norm_ok},
           {"ratings_norm_constraint_ok", lca.ratings_worst_norm_ok}}}});
  }
  doc["results"] = std::move(results);

  auto summaries = collect_summaries(report, options);
  const int methods_present =
      (report.ahp ? 1 : 0) + (report.wgm ? 1 : 0) + (report.lca ? 1 : 0);
  if (methods_present >= 2) {
    std::vector<std::size_t> top_counts(alternative_labels.size(), 0);
    json counted = json::array();
    for (const auto& summary : summaries) {
      if (!summary.counts_for_plurality) continue;
      counted.push_back(summary.method);
      for (std::size_t idx : summary.ranking.groups.front()) ++top_counts[idx];
    }
    const std::size_t best_count = *std::max_element(top_counts.begin(), top_counts.end());
    json winners = json::array();
    json counts = json::object();
    for (std::size_t i = 0; i < alternative_labels.size(); ++i) {
      if (top_counts[i] > 0) counts[alternative_labels[i]] = top_counts[i];
      if (top_counts[i] == best_count) winners.push_back(alternative_labels[i]);
    }
    doc["comparison"] = {{"plurality", winners},
                         {"counted_methods", counted},
                         {"top_counts", counts}};
  }
  return doc;
}

std::string render_csv(const SolveReport& report, const ReportOptions& options) {
  auto summaries = collect_summaries(report, options);
  std::ostringstream out;
  out << "method,alternative,rating_max_norm,rank\n";
  for (const auto& summary : summaries) {
    std::vector<std::size_t> rank(summary.labels.size(), 0);
    for (std::size_t g = 0; g < summary.ranking.groups.size(); ++g) {
      for (std::size_t idx : summary.ranking.groups[g]) rank[idx] = g + 1;
    }
    for (std::size_t i = 0; i < summary.labels.size(); ++i) {
      out << csv_field(summary.method) << "," << csv_field(summary.labels[i]) << ","
          << format_double(summary.ratings_max[i], options.precision) << "," << rank[i] << "\n";
    }
  }
  return out.str();
}

}  // namespace pcmrank
