#include "pcmrank/methods.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pcmrank {

namespace {

constexpr double kPowerIterationTol = 1e-12;
constexpr int kPowerIterationMaxSteps = 10000;

void require_positive_square(const TropicalMatrix& a, const char* op) {
  if (!a.is_square()) {
    std::ostringstream msg;
    msg << op << " requires a square matrix, got " << a.rows() << "x" << a.cols();
    throw ShapeError(msg.str());
  }
  for (double v : a.data()) {
    if (!(v > 0.0)) {
      std::ostringstream msg;
      msg << op << " requires strictly positive entries";
      throw DomainError(msg.str());
    }
  }
}

/// Weighted maximum of the alternatives matrices: (+)_k w_k A_k.
TropicalMatrix weighted_max(const std::vector<PairwiseComparisonMatrix>& alternatives,
                            const RatingVector& weights) {
  TropicalMatrix acc = scalar_mul(weights[0], alternatives[0].matrix());
  for (std::size_t k = 1; k < alternatives.size(); ++k) {
    acc = trop_add(acc, scalar_mul(weights[k], alternatives[k].matrix()));
  }
  return acc;
}

}  // namespace

std::pair<RatingVector, double> principal_eigenvector(const TropicalMatrix& a) {
  require_positive_square(a, "principal_eigenvector");
  const std::size_t n = a.rows();

  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  double eigenvalue = 0.0;
  for (int step = 0; step < kPowerIterationMaxSteps; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * v[j];
      next[i] = acc;
    }
    // The sum of A v converges to the dominant eigenvalue because v stays
    // sum-normalized.
    eigenvalue = std::accumulate(next.begin(), next.end(), 0.0);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= eigenvalue;
      delta = std::max(delta, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    if (delta < kPowerIterationTol) {
      return {RatingVector::sum_normalized(std::move(v)), eigenvalue};
    }
  }
  std::ostringstream msg;
  msg << "power iteration did not converge within " << kPowerIterationMaxSteps
      << " steps (size " << n << ")";
  throw NumericalError(msg.str());
}

RatingVector geometric_mean_vector(const TropicalMatrix& a) {
  require_positive_square(a, "geometric_mean_vector");
  const std::size_t n = a.rows();
  std::vector<double> means(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) log_sum += std::log(a(i, j));
    means[i] = std::exp(log_sum / static_cast<double>(n));
  }
  return RatingVector::raw(std::move(means));
}

ClassicalSolution ahp_solve(const DecisionProblem& problem, double tie_tol) {
  auto [weights, criteria_eigenvalue] = principal_eigenvector(problem.criteria().matrix());

  std::vector<RatingVector> per_criterion;
  std::vector<double> eigenvalues;
  per_criterion.reserve(problem.criteria_count());
  eigenvalues.reserve(problem.criteria_count());
  for (const auto& a : problem.alternatives()) {
    auto [vec, value] = principal_eigenvector(a.matrix());
    per_criterion.push_back(std::move(vec));
    eigenvalues.push_back(value);
  }

  std::vector<double> ratings(problem.alternative_count(), 0.0);
  for (std::size_t k = 0; k < per_criterion.size(); ++k) {
    for (std::size_t i = 0; i < ratings.size(); ++i) {
      ratings[i] += weights[k] * per_criterion[k][i];
    }
  }

  auto ratings_sum = RatingVector::sum_normalized(ratings);
  auto ratings_max = RatingVector::max_normalized(ratings);
  auto ranking = rank_alternatives(ratings_max, tie_tol);
  return ClassicalSolution{Method::kAhp,
                           std::move(weights),
                           std::move(per_criterion),
                           std::move(ratings_sum),
                           std::move(ratings_max),
                           criteria_eigenvalue,
                           std::move(eigenvalues),
                           std::move(ranking)};
}

ClassicalSolution wgm_solve(const DecisionProblem& problem, double tie_tol) {
  auto weights = geometric_mean_vector(problem.criteria().matrix())
                     .renormalized(Normalization::kSum);

  // Ratings via logarithms: log x_i = sum_k w_k * mean_j log a_ij^(k).
  const std::size_t n = problem.alternative_count();
  std::vector<double> log_ratings(n, 0.0);
  for (std::size_t k = 0; k < problem.criteria_count(); ++k) {
    const TropicalMatrix& a = problem.alternatives()[k].matrix();
    for (std::size_t i = 0; i < n; ++i) {
      double log_sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) log_sum += std::log(a(i, j));
      log_ratings[i] += weights[k] * log_sum / static_cast<double>(n);
    }
  }
  std::vector<double> ratings(n);
  std::transform(log_ratings.begin(), log_ratings.end(), ratings.begin(),
                 [](double v) { return std::exp(v); });

  auto ratings_sum = RatingVector::sum_normalized(ratings);
  auto ratings_max = RatingVector::max_normalized(ratings);
  auto ranking = rank_alternatives(ratings_max, tie_tol);
  return ClassicalSolution{Method::kWgm,
                           std::move(weights),
                           {},
                           std::move(ratings_sum),
                           std::move(ratings_max),
                           0.0,
                           {},
                           std::move(ranking)};
}

LcaSolution lca_solve(const DecisionProblem& problem, double tie_tol) {
  // Weights stage: generating matrix for the criteria comparison matrix.
  auto weights_gen = solve_single(problem.criteria());
  auto weights_result = differentiate(weights_gen);

  LcaSolution solution{
      weights_gen.lambda,
      weights_gen.star,
      weights_result.best_seminorm,
      {},
      weights_result.tie_flag,
      weights_result.worst,
      weights_result.worst_seminorm,
      weights_result.worst_norm_ok,
      TropicalMatrix(1, 1),
      0.0,
      TropicalMatrix(1, 1),
      weights_result.worst,  // placeholder, replaced below
      0.0,
      true,
      Ranking{},
  };

  // Best side: one ratings subproblem per minimal weight vector.
  for (const auto& w : weights_result.best) {
    TropicalMatrix p = weighted_max(problem.alternatives(), w);
    auto ratings_gen = solve_single(p);
    auto best = best_differentiating(ratings_gen);
    Ranking ranking = rank_alternatives(best.vectors.front(), tie_tol);
    solution.branches.push_back(LcaRatingsBranch{w, std::move(p), ratings_gen.lambda,
                                                 std::move(ratings_gen.star),
                                                 std::move(best.vectors), best.seminorm,
                                                 false, std::move(ranking)});
    solution.branches.back().ratings_tie = solution.branches.back().ratings.size() > 1;
  }

  // Worst side: ratings under the worst differentiating weights.
  solution.worst_weighted_max = weighted_max(problem.alternatives(), weights_result.worst);
  auto worst_gen = solve_single(solution.worst_weighted_max);
  solution.nu = worst_gen.lambda;
  auto worst_result = differentiate(worst_gen);
  solution.worst_generating = std::move(worst_gen.star);
  solution.ratings_worst = std::move(worst_result.worst);
  solution.ratings_worst_seminorm = worst_result.worst_seminorm;
  solution.ratings_worst_norm_ok = worst_result.worst_norm_ok;
  solution.ranking_worst = rank_alternatives(solution.ratings_worst, tie_tol);
  return solution;
}

}  // namespace pcmrank
