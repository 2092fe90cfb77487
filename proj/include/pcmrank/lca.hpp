#pragma once

#include <vector>

#include "pcmrank/max_algebra.hpp"
#include "pcmrank/pairwise.hpp"

namespace pcmrank {

/**
 * @brief Generating matrix of the solution set of the single-matrix
 * log-Chebyshev rating problem min_{x>0} max_ij a_ij x_j / x_i.
 *
 * `lambda` is the optimal objective value (the max-algebraic spectral radius
 * of the comparison matrix) and `star` is the Kleene star of the matrix
 * rescaled by 1/lambda. Every product star * u with u > 0 attains the
 * optimum, and every optimal vector arises this way.
 */
struct GeneratingMatrix {
  TropicalMatrix star;
  double lambda;
};

/**
 * @brief Log-Chebyshev objective max_ij a_ij x_j / x_i, the tropical product
 * x^- a x.
 *
 * For a reciprocal matrix the value equals 1 plus the maximum relative error
 * between a and the consistent matrix generated by x, so it is >= 1.
 */
double lc_objective(const TropicalMatrix& a, const std::vector<double>& x);
double lc_objective(const PairwiseComparisonMatrix& a, const RatingVector& x);

/**
 * @brief Solves the single-matrix rating problem in closed form.
 *
 * Accepts any square matrix with positive spectral radius; reciprocity is not
 * required (weighted maxima of reciprocal matrices are generally not
 * reciprocal themselves).
 */
GeneratingMatrix solve_single(const TropicalMatrix& a);
GeneratingMatrix solve_single(const PairwiseComparisonMatrix& a);

/// Best differentiating solutions: max-normalized, maximal Hilbert seminorm.
struct BestSolutions {
  /// Componentwise-minimal representatives among the argmax columns; usually one.
  std::vector<RatingVector> vectors;
  /// The maximal seminorm attained.
  double seminorm;
};

/**
 * @brief Extracts the best differentiating solutions from a generating matrix.
 *
 * Scores every column by its Hilbert seminorm, keeps the columns attaining
 * the maximum (within 1e-9 relative), max-normalizes, deduplicates, and
 * filters to the componentwise-minimal vectors. When the smallest vector is
 * not unique, all vectors not dominated from below are returned.
 */
BestSolutions best_differentiating(const GeneratingMatrix& g);

/**
 * @brief Extracts the unique worst differentiating solution: the reciprocal
 * of the row of column maxima of the generating matrix.
 */
RatingVector worst_differentiating(const GeneratingMatrix& g);

/// Bundle of best and worst differentiating solutions with diagnostics.
struct DifferentiatingResult {
  std::vector<RatingVector> best;
  RatingVector worst;
  double best_seminorm;
  double worst_seminorm;
  /// True when several incomparable best vectors remain after filtering.
  bool tie_flag;
  /// True when the worst vector came out max-normalized (within 1e-9) by
  /// itself, as it does in all known inputs; it is renormalized either way.
  bool worst_norm_ok;
};

DifferentiatingResult differentiate(const GeneratingMatrix& g);

}  // namespace pcmrank
