#include "pcmrank/lca.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pcmrank {

namespace {

constexpr double kSelectTol = 1e-9;

struct ColumnStats {
  double max;
  double min;
};

ColumnStats column_stats(const TropicalMatrix& b, std::size_t j) {
  ColumnStats stats{b(0, j), b(0, j)};
  for (std::size_t i = 1; i < b.rows(); ++i) {
    stats.max = std::max(stats.max, b(i, j));
    stats.min = std::min(stats.min, b(i, j));
  }
  return stats;
}

void require_positive_star(const TropicalMatrix& b) {
  for (double v : b.data()) {
    if (!(v > 0.0)) {
      throw DomainError("differentiating solutions need a strictly positive generating matrix");
    }
  }
}

std::vector<double> normalized_column(const TropicalMatrix& b, std::size_t j, double top) {
  std::vector<double> column(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) column[i] = b(i, j) / top;
  return column;
}

bool approx_equal(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kSelectTol * std::max(a[i], b[i])) return false;
  }
  return true;
}

// u dominates v from below: u <= v componentwise (within tolerance).
bool dominates_below(const std::vector<double>& u, const std::vector<double>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i] * (1.0 + kSelectTol)) return false;
  }
  return true;
}

}  // namespace

double lc_objective(const TropicalMatrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size() || !a.is_square()) {
    std::ostringstream msg;
    msg << "lc_objective: matrix " << a.rows() << "x" << a.cols() << " against vector of length "
        << x.size();
    throw ShapeError(msg.str());
  }
  for (double v : x) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError("lc_objective requires a strictly positive vector");
    }
  }
  double value = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      value = std::max(value, a(i, j) * x[j] / x[i]);
    }
  }
  return value;
}

double lc_objective(const PairwiseComparisonMatrix& a, const RatingVector& x) {
  return lc_objective(a.matrix(), x.values());
}

GeneratingMatrix solve_single(const TropicalMatrix& a) {
  const double lambda = spectral_radius(a);
  if (!(lambda > 0.0)) {
    throw DomainError("solve_single requires a matrix with positive spectral radius");
  }
  return GeneratingMatrix{kleene_star(scalar_mul(1.0 / lambda, a)), lambda};
}

GeneratingMatrix solve_single(const PairwiseComparisonMatrix& a) {
  return solve_single(a.matrix());
}

BestSolutions best_differentiating(const GeneratingMatrix& g) {
  const TropicalMatrix& b = g.star;
  require_positive_star(b);
  const std::size_t n = b.cols();

  std::vector<ColumnStats> stats(n);
  double best_score = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    stats[j] = column_stats(b, j);
    best_score = std::max(best_score, stats[j].max / stats[j].min);
  }

  // All argmax columns within tolerance, max-normalized, first occurrence kept.
  std::vector<std::vector<double>> candidates;
  for (std::size_t j = 0; j < n; ++j) {
    const double score = stats[j].max / stats[j].min;
    if (score < best_score * (1.0 - kSelectTol)) continue;
    auto column = normalized_column(b, j, stats[j].max);
    const bool duplicate = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const auto& c) { return approx_equal(c, column); });
    if (!duplicate) candidates.push_back(std::move(column));
  }

  BestSolutions best{{}, best_score};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool keep = true;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (k != i && dominates_below(candidates[k], candidates[i])) {
        keep = false;
        break;
      }
    }
    if (keep) best.vectors.push_back(RatingVector::max_normalized(candidates[i]));
  }
  return best;
}

RatingVector worst_differentiating(const GeneratingMatrix& g) {
  require_positive_star(g.star);
  const TropicalMatrix& b = g.star;
  std::vector<double> worst(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    worst[j] = 1.0 / column_stats(b, j).max;
  }
  return RatingVector::max_normalized(std::move(worst));
}

DifferentiatingResult differentiate(const GeneratingMatrix& g) {
  require_positive_star(g.star);
  const TropicalMatrix& b = g.star;

  std::vector<double> worst_raw(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    worst_raw[j] = 1.0 / column_stats(b, j).max;
  }
  const double worst_top = *std::max_element(worst_raw.begin(), worst_raw.end());
  const bool norm_ok = std::abs(worst_top - 1.0) <= kSelectTol;
  auto worst = RatingVector::max_normalized(std::move(worst_raw));
  const double worst_seminorm = hilbert_seminorm(worst.values());

  auto best = best_differentiating(g);
  const bool tie = best.vectors.size() > 1;
  return DifferentiatingResult{std::move(best.vectors), std::move(worst),
                               best.seminorm,           worst_seminorm,
                               tie,                     norm_ok};
}

}  // namespace pcmrank
