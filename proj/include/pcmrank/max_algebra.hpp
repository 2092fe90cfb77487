#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pcmrank/errors.hpp"

namespace pcmrank {

/**
 * @brief Dense matrix over the max-times semiring.
 *
 * Addition is entrywise maximum, multiplication is ordinary multiplication,
 * entries are nonnegative finite reals. The additive neutral element is 0
 * and the multiplicative one is 1, so the identity and zero matrices look
 * exactly like their ordinary counterparts.
 *
 * Storage is row-major. Construction validates the entry invariant
 * (finite, >= 0); mutable element access is unchecked.
 */
class TropicalMatrix {
 public:
  TropicalMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  TropicalMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static TropicalMatrix identity(std::size_t n);
  static TropicalMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const noexcept { return data_; }

  /// True when every entry equals zero exactly.
  bool is_zero() const noexcept;

  bool operator==(const TropicalMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/**
 * @brief Column vector over the max-times semiring (nonnegative finite entries).
 *
 * Orientation is contextual: conj_transpose() returns the same type but the
 * result is to be read as a row vector.
 */
class TropicalVector {
 public:
  explicit TropicalVector(std::vector<double> entries);
  TropicalVector(std::initializer_list<double> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& values() const noexcept { return entries_; }

  bool operator==(const TropicalVector& other) const = default;

 private:
  std::vector<double> entries_;
};

/// Entrywise maximum. Throws ShapeError on dimension mismatch.
TropicalMatrix trop_add(const TropicalMatrix& a, const TropicalMatrix& b);

/// Max-times matrix product: (a b)_ij = max_k a_ik * b_kj.
TropicalMatrix trop_mul(const TropicalMatrix& a, const TropicalMatrix& b);

/// Max-times matrix-vector product.
TropicalVector trop_mul(const TropicalMatrix& a, const TropicalVector& x);

/// Multiplies every entry by s (s >= 0, same as ordinary scaling).
TropicalMatrix scalar_mul(double s, const TropicalMatrix& a);

/**
 * @brief Multiplicative conjugate transpose of a nonzero vector.
 *
 * Entry j of the result is 1/x_j for x_j != 0 and 0 otherwise; the result
 * carries row semantics.
 */
TropicalVector conj_transpose(const TropicalVector& x);

/// Multiplicative conjugate transpose of a nonzero matrix: (a^-)_ij = 1/a_ji, zeros fixed.
TropicalMatrix matrix_conj_transpose(const TropicalMatrix& a);

/// p-th max-times power of a square matrix; a^0 is the identity.
TropicalMatrix trop_power(const TropicalMatrix& a, unsigned p);

/// Maximum of the diagonal entries.
double trop_trace(const TropicalMatrix& a);

/**
 * @brief Spectral radius in max-algebra: max over k = 1..n of tr(a^k)^(1/k).
 *
 * Equals the maximum geometric mean over all cycles of the matrix.
 * Returns 0 for the all-zero matrix.
 */
double spectral_radius(const TropicalMatrix& a);

/**
 * @brief Kleene star: I (+) a (+) ... (+) a^(n-1).
 *
 * Defined when the spectral radius is at most one; `tol` absorbs the rounding
 * incurred when the caller rescales by a spectral radius computed in floating
 * point. Throws DivergenceError when spectral_radius(a) > 1 + tol.
 */
TropicalMatrix kleene_star(const TropicalMatrix& a, double tol = 1e-9);

/// Largest entry of the vector.
double trop_norm(const TropicalVector& x);

/// Largest entry of the matrix.
double trop_norm(const TropicalMatrix& a);

/**
 * @brief Multiplicative Hilbert (span) seminorm: max entry divided by min entry.
 *
 * Requires strictly positive entries; invariant under positive scaling.
 */
double hilbert_seminorm(const std::vector<double>& x);
double hilbert_seminorm(const TropicalVector& x);

}  // namespace pcmrank
