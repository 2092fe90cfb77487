#pragma once

#include <vector>

#include "pcmrank/lca.hpp"
#include "pcmrank/pairwise.hpp"

namespace pcmrank {

/**
 * @brief Principal (Perron) eigenvector of a positive square matrix in
 * ordinary arithmetic, by power iteration.
 *
 * Starts from the uniform vector, renormalizes by the sum each step, and
 * stops when successive iterates agree to 1e-12 in max-norm. Returns the
 * sum-normalized eigenvector and the dominant eigenvalue. Throws
 * NumericalError after 10000 iterations without convergence.
 */
std::pair<RatingVector, double> principal_eigenvector(const TropicalMatrix& a);

/// Row geometric means: entry i is the n-th root of the product of row i.
RatingVector geometric_mean_vector(const TropicalMatrix& a);

enum class Method { kAhp, kWgm };

/**
 * @brief Result of one of the classical methods (AHP or weighted geometric
 * means) on a decision problem.
 */
struct ClassicalSolution {
  Method method;
  /// Criterion weights, sum-normalized.
  RatingVector criterion_weights;
  /// Per-criterion rating vectors (AHP eigenvectors, sum-normalized); empty for WGM.
  std::vector<RatingVector> per_criterion;
  RatingVector ratings_sum;
  RatingVector ratings_max;
  /// Dominant eigenvalues (AHP only; zero-filled for WGM).
  double criteria_eigenvalue = 0.0;
  std::vector<double> alternative_eigenvalues;
  Ranking ranking;
};

/// Analytic hierarchy process: weighted arithmetic sum of principal eigenvectors.
ClassicalSolution ahp_solve(const DecisionProblem& problem, double tie_tol = 1e-9);

/// Weighted geometric means: closed-form ratings from row geometric means.
ClassicalSolution wgm_solve(const DecisionProblem& problem, double tie_tol = 1e-9);

/**
 * @brief One ratings subproblem of the log-Chebyshev pipeline, driven by a
 * single best differentiating weight vector.
 */
struct LcaRatingsBranch {
  /// The weight vector w driving this branch, max-normalized.
  RatingVector weights;
  /// Weighted maximum of the alternatives matrices under w.
  TropicalMatrix weighted_max;
  /// Optimal objective of the ratings problem (spectral radius of weighted_max).
  double mu;
  /// Generating matrix of the ratings solution set.
  TropicalMatrix generating;
  /// Best differentiating rating vectors, max-normalized; headline is front().
  std::vector<RatingVector> ratings;
  double ratings_seminorm;
  bool ratings_tie;
  /// Ranking induced by the headline rating vector.
  Ranking ranking;
};

/**
 * @brief Full log-Chebyshev solution: best and worst differentiating weights,
 * the induced ratings subproblems, and all intermediate matrices.
 */
struct LcaSolution {
  /// Optimal objective of the criteria weights problem.
  double lambda;
  /// Generating matrix of the weights solution set.
  TropicalMatrix weights_generating;
  double weights_seminorm;
  /// One branch per minimal best weight vector; the headline uses the first
  /// (smallest originating column index).
  std::vector<LcaRatingsBranch> branches;
  bool weights_tie;

  /// Worst differentiating weight vector v, max-normalized.
  RatingVector weights_worst;
  double weights_worst_seminorm;
  bool weights_worst_norm_ok;
  /// Weighted maximum of the alternatives matrices under v.
  TropicalMatrix worst_weighted_max;
  /// Optimal objective of the worst-side ratings problem.
  double nu;
  TropicalMatrix worst_generating;
  /// Worst differentiating rating vector y, max-normalized.
  RatingVector ratings_worst;
  double ratings_worst_seminorm;
  bool ratings_worst_norm_ok;
  Ranking ranking_worst;

  const LcaRatingsBranch& headline() const { return branches.front(); }
  const RatingVector& weights_best() const { return headline().weights; }
  const std::vector<RatingVector>& ratings_best() const { return headline().ratings; }
  double mu() const { return headline().mu; }
  const Ranking& ranking_best() const { return headline().ranking; }
};

/// Log-Chebyshev approximation pipeline over a decision problem.
LcaSolution lca_solve(const DecisionProblem& problem, double tie_tol = 1e-9);

}  // namespace pcmrank
