#include "pcmrank/max_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pcmrank {

namespace {

void check_entry(double v) {
  if (!(std::isfinite(v) && v >= 0.0)) {
    throw DomainError("tropical entries must be finite and nonnegative");
  }
}

void require_square(const TropicalMatrix& a, const char* op) {
  if (!a.is_square()) {
    std::ostringstream msg;
    msg << op << " requires a square matrix, got " << a.rows() << "x" << a.cols();
    throw ShapeError(msg.str());
  }
}

void require_same_shape(const TropicalMatrix& a, const TropicalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
        << b.cols() << " do not match";
    throw ShapeError(msg.str());
  }
}

}  // namespace

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows_ == 0 || cols_ == 0) {
    throw ShapeError("matrix dimensions must be at least 1x1");
  }
  check_entry(fill);
}

TropicalMatrix::TropicalMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw ShapeError("matrix dimensions must be at least 1x1");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw ShapeError("all matrix rows must have the same length");
    }
    for (double v : row) {
      check_entry(v);
      data_.push_back(v);
    }
  }
}

TropicalMatrix TropicalMatrix::identity(std::size_t n) {
  TropicalMatrix eye(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1.0;
  return eye;
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ShapeError("matrix dimensions must be at least 1x1");
  }
  TropicalMatrix m(rows.size(), rows.front().size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw ShapeError("all matrix rows must have the same length");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      check_entry(rows[i][j]);
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

bool TropicalMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
}

TropicalVector::TropicalVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ShapeError("vector length must be at least 1");
  }
  for (double v : entries_) check_entry(v);
}

TropicalVector::TropicalVector(std::initializer_list<double> entries)
    : TropicalVector(std::vector<double>(entries)) {}

TropicalMatrix trop_add(const TropicalMatrix& a, const TropicalMatrix& b) {
  require_same_shape(a, b, "trop_add");
  TropicalMatrix sum(a.rows(), a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      sum(i, j) = std::max(a(i, j), b(i, j));
    }
  }
  return sum;
}

TropicalMatrix trop_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "trop_mul: inner dimensions " << a.cols() << " and " << b.rows() << " do not match";
    throw ShapeError(msg.str());
  }
  TropicalMatrix product(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        product(i, j) = std::max(product(i, j), aik * b(k, j));
      }
    }
  }
  return product;
}

TropicalVector trop_mul(const TropicalMatrix& a, const TropicalVector& x) {
  if (a.cols() != x.size()) {
    std::ostringstream msg;
    msg << "trop_mul: matrix has " << a.cols() << " columns but vector has " << x.size()
        << " entries";
    throw ShapeError(msg.str());
  }
  std::vector<double> result(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      result[i] = std::max(result[i], a(i, j) * x[j]);
    }
  }
  return TropicalVector(std::move(result));
}

TropicalMatrix scalar_mul(double s, const TropicalMatrix& a) {
  if (!(std::isfinite(s) && s >= 0.0)) {
    throw DomainError("scalar factor must be finite and nonnegative");
  }
  TropicalMatrix scaled(a.rows(), a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      scaled(i, j) = s * a(i, j);
    }
  }
  return scaled;
}

TropicalVector conj_transpose(const TropicalVector& x) {
  bool nonzero = false;
  std::vector<double> inv(x.size(), 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0.0) {
      inv[j] = 1.0 / x[j];
      nonzero = true;
    }
  }
  if (!nonzero) {
    throw DomainError("conjugate transpose of the zero vector is undefined");
  }
  return TropicalVector(std::move(inv));
}

TropicalMatrix matrix_conj_transpose(const TropicalMatrix& a) {
  if (a.is_zero()) {
    throw DomainError("conjugate transpose of the zero matrix is undefined");
  }
  TropicalMatrix conj(a.cols(), a.rows(), 0.0);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      const double v = a(j, i);
      conj(i, j) = v != 0.0 ? 1.0 / v : 0.0;
    }
  }
  return conj;
}

TropicalMatrix trop_power(const TropicalMatrix& a, unsigned p) {
  require_square(a, "trop_power");
  TropicalMatrix result = TropicalMatrix::identity(a.rows());
  for (unsigned k = 0; k < p; ++k) {
    result = trop_mul(result, a);
  }
  return result;
}

double trop_trace(const TropicalMatrix& a) {
  require_square(a, "trop_trace");
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = std::max(t, a(i, i));
  return t;
}

double spectral_radius(const TropicalMatrix& a) {
  require_square(a, "spectral_radius");
  const std::size_t n = a.rows();
  double radius = 0.0;
  TropicalMatrix power = a;
  for (std::size_t k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(trop_trace(power), 1.0 / static_cast<double>(k)));
    if (k < n) power = trop_mul(power, a);
  }
  return radius;
}

TropicalMatrix kleene_star(const TropicalMatrix& a, double tol) {
  require_square(a, "kleene_star");
  const double radius = spectral_radius(a);
  if (radius > 1.0 + tol) {
    std::ostringstream msg;
    msg << "kleene_star diverges: spectral radius " << radius << " exceeds 1";
    throw DivergenceError(msg.str());
  }
  const std::size_t n = a.rows();
  TropicalMatrix star = TropicalMatrix::identity(n);
  TropicalMatrix power = TropicalMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = trop_mul(power, a);
    star = trop_add(star, power);
  }
  return star;
}

double trop_norm(const TropicalVector& x) {
  return *std::max_element(x.values().begin(), x.values().end());
}

double trop_norm(const TropicalMatrix& a) {
  return *std::max_element(a.data().begin(), a.data().end());
}

double hilbert_seminorm(const std::vector<double>& x) {
  if (x.empty()) {
    throw ShapeError("vector length must be at least 1");
  }
  double lo = x.front();
  double hi = x.front();
  for (double v : x) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError("hilbert_seminorm requires strictly positive entries");
    }
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi / lo;
}

double hilbert_seminorm(const TropicalVector& x) { return hilbert_seminorm(x.values()); }

}  // namespace pcmrank
