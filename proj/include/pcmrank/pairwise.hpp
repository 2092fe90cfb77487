#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcmrank/errors.hpp"
#include "pcmrank/max_algebra.hpp"

namespace pcmrank {

enum class Normalization { kMax, kSum, kRaw };

/**
 * @brief Strictly positive vector of ratings (or criterion weights) with a
 * declared normalization convention.
 *
 * Solutions of pairwise comparison problems are defined up to a positive
 * factor; the convention records which representative is stored.
 * Max-normalized vectors have largest entry exactly 1, sum-normalized
 * vectors sum to 1.
 */
class RatingVector {
 public:
  /// Rescales so the largest entry becomes exactly 1.
  static RatingVector max_normalized(std::vector<double> values);
  /// Rescales so the entries sum to 1.
  static RatingVector sum_normalized(std::vector<double> values);
  /// Keeps the values as given.
  static RatingVector raw(std::vector<double> values);

  /// Returns a copy under the requested convention.
  RatingVector renormalized(Normalization convention) const;

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  Normalization normalization() const noexcept { return normalization_; }

  bool operator==(const RatingVector& other) const = default;

 private:
  RatingVector(std::vector<double> values, Normalization normalization);

  std::vector<double> values_;
  Normalization normalization_;
};

/**
 * @brief Positive square matrix of preference ratios with the reciprocity
 * invariant a_ij * a_ji = 1 and unit diagonal.
 *
 * Instances are created through validate_reciprocal() or
 * consistent_from_vector(), which establish the invariant.
 */
class PairwiseComparisonMatrix {
 public:
  std::size_t size() const noexcept { return matrix_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }
  const TropicalMatrix& matrix() const noexcept { return matrix_; }

  /// Optional names, one per index; empty when unnamed.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool operator==(const PairwiseComparisonMatrix& other) const = default;

 private:
  PairwiseComparisonMatrix(TropicalMatrix matrix, std::vector<std::string> labels);

  friend PairwiseComparisonMatrix validate_reciprocal(const TropicalMatrix&, double,
                                                      std::vector<std::string>,
                                                      const std::string&);
  friend PairwiseComparisonMatrix consistent_from_vector(const RatingVector&);

  TropicalMatrix matrix_;
  std::vector<std::string> labels_;
};

/**
 * @brief Validates a square positive matrix as a pairwise comparison matrix.
 *
 * Checks positivity and reciprocity (|a_ij * a_ji - 1| <= tol) and forces the
 * diagonal to exactly 1. `name` prefixes error messages; indices in messages
 * are 1-based.
 *
 * Throws DomainError on nonpositive entries and ValidationError on
 * reciprocity violations, naming the offending entry.
 */
PairwiseComparisonMatrix validate_reciprocal(const TropicalMatrix& m, double tol = 1e-6,
                                             std::vector<std::string> labels = {},
                                             const std::string& name = "matrix");

/// Rank-one consistent matrix with entries x_i / x_j.
PairwiseComparisonMatrix consistent_from_vector(const RatingVector& x);

/// True iff |a_ij - a_ik * a_kj| <= tol * a_ij for all triples (i, j, k).
bool is_consistent(const PairwiseComparisonMatrix& a, double tol = 1e-9);

/**
 * @brief Ordered partition of indices by descending rating.
 *
 * Each group holds indices whose ratings tie within the ranking tolerance;
 * groups are ordered best first, indices inside a group ascend.
 */
struct Ranking {
  std::vector<std::vector<std::size_t>> groups;

  bool has_tie() const noexcept;
  bool operator==(const Ranking& other) const = default;
};

/// Ranks alternatives by descending rating, grouping ties within tie_tol (relative).
Ranking rank_alternatives(const RatingVector& x, double tie_tol = 1e-9);

/// Renders a ranking like "A > B > C" with ties joined by the equivalence sign.
std::string format_ranking(const Ranking& ranking, const std::vector<std::string>& labels);

/// "A1".."An" (or another prefix) for unnamed indices.
std::vector<std::string> default_labels(std::size_t n, const std::string& prefix);

/**
 * @brief One criteria comparison matrix plus one alternatives comparison
 * matrix per criterion.
 */
class DecisionProblem {
 public:
  DecisionProblem(PairwiseComparisonMatrix criteria,
                  std::vector<PairwiseComparisonMatrix> alternatives);

  std::size_t criteria_count() const noexcept { return criteria_.size(); }
  std::size_t alternative_count() const noexcept { return alternatives_.front().size(); }

  const PairwiseComparisonMatrix& criteria() const noexcept { return criteria_; }
  const std::vector<PairwiseComparisonMatrix>& alternatives() const noexcept {
    return alternatives_;
  }

  /// Criterion names; defaults to C1..Cm when the matrices are unnamed.
  std::vector<std::string> criterion_labels() const;
  /// Alternative names; defaults to A1..An when the matrices are unnamed.
  std::vector<std::string> alternative_labels() const;

  bool operator==(const DecisionProblem& other) const = default;

 private:
  PairwiseComparisonMatrix criteria_;
  std::vector<PairwiseComparisonMatrix> alternatives_;
};

}  // namespace pcmrank
