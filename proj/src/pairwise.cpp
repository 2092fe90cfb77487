#include "pcmrank/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pcmrank {

namespace {

constexpr double kNormalizationSlack = 1e-12;

void check_positive_values(const std::vector<double>& values) {
  if (values.empty()) {
    throw ShapeError("rating vector must have at least one entry");
  }
  for (double v : values) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw DomainError("rating vector entries must be finite and strictly positive");
    }
  }
}

}  // namespace

RatingVector::RatingVector(std::vector<double> values, Normalization normalization)
    : values_(std::move(values)), normalization_(normalization) {
  check_positive_values(values_);
  if (normalization_ == Normalization::kMax) {
    const double top = *std::max_element(values_.begin(), values_.end());
    if (std::abs(top - 1.0) > kNormalizationSlack) {
      throw DomainError("max-normalized rating vector must have largest entry 1");
    }
  } else if (normalization_ == Normalization::kSum) {
    const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(total - 1.0) > kNormalizationSlack) {
      throw DomainError("sum-normalized rating vector must sum to 1");
    }
  }
}

RatingVector RatingVector::max_normalized(std::vector<double> values) {
  check_positive_values(values);
  const double top = *std::max_element(values.begin(), values.end());
  for (double& v : values) v /= top;
  return RatingVector(std::move(values), Normalization::kMax);
}

RatingVector RatingVector::sum_normalized(std::vector<double> values) {
  check_positive_values(values);
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  for (double& v : values) v /= total;
  return RatingVector(std::move(values), Normalization::kSum);
}

RatingVector RatingVector::raw(std::vector<double> values) {
  return RatingVector(std::move(values), Normalization::kRaw);
}

RatingVector RatingVector::renormalized(Normalization convention) const {
  switch (convention) {
    case Normalization::kMax:
      return max_normalized(values_);
    case Normalization::kSum:
      return sum_normalized(values_);
    case Normalization::kRaw:
      return raw(values_);
  }
  throw DomainError("unknown normalization convention");
}

PairwiseComparisonMatrix::PairwiseComparisonMatrix(TropicalMatrix matrix,
                                                   std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {}

PairwiseComparisonMatrix validate_reciprocal(const TropicalMatrix& m, double tol,
                                             std::vector<std::string> labels,
                                             const std::string& name) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << name << ": pairwise comparison matrix must be square, got " << m.rows() << "x"
        << m.cols();
    throw ShapeError(msg.str());
  }
  const std::size_t n = m.rows();
  if (!labels.empty() && labels.size() != n) {
    std::ostringstream msg;
    msg << name << ": " << labels.size() << " labels for " << n << " rows";
    throw ValidationError(msg.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(m(i, j) > 0.0)) {
        std::ostringstream msg;
        msg << name << ": entry (" << i + 1 << "," << j + 1 << ") must be positive, got "
            << m(i, j);
        throw DomainError(msg.str());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double product = m(i, j) * m(j, i);
      if (std::abs(product - 1.0) > tol) {
        std::ostringstream msg;
        msg << name << ": reciprocity violated at (" << i + 1 << "," << j + 1 << "): a(" << i + 1
            << "," << j + 1 << ")*a(" << j + 1 << "," << i + 1 << ") = " << product;
        throw ValidationError(msg.str());
      }
    }
  }
  TropicalMatrix normalized = m;
  for (std::size_t i = 0; i < n; ++i) normalized(i, i) = 1.0;
  return PairwiseComparisonMatrix(std::move(normalized), std::move(labels));
}

PairwiseComparisonMatrix consistent_from_vector(const RatingVector& x) {
  const std::size_t n = x.size();
  TropicalMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = i == j ? 1.0 : x[i] / x[j];
    }
  }
  return PairwiseComparisonMatrix(std::move(m), {});
}

bool is_consistent(const PairwiseComparisonMatrix& a, double tol) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(a(i, j) - a(i, k) * a(k, j)) > tol * a(i, j)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Ranking::has_tie() const noexcept {
  return std::any_of(groups.begin(), groups.end(),
                     [](const std::vector<std::size_t>& g) { return g.size() > 1; });
}

Ranking rank_alternatives(const RatingVector& x, double tie_tol) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });

  Ranking ranking;
  for (std::size_t i : order) {
    // A rating joins the current group when it ties the group's leader.
    if (!ranking.groups.empty()) {
      const double leader = x[ranking.groups.back().front()];
      if (leader - x[i] <= tie_tol * leader) {
        ranking.groups.back().push_back(i);
        continue;
      }
    }
    ranking.groups.push_back({i});
  }
  for (auto& group : ranking.groups) std::sort(group.begin(), group.end());
  return ranking;
}

std::string format_ranking(const Ranking& ranking, const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
    if (g > 0) out << " ≻ ";  // ≻
    const auto& group = ranking.groups[g];
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (k > 0) out << " ≡ ";  // ≡
      const std::size_t idx = group[k];
      if (idx >= labels.size()) {
        throw ShapeError("ranking index outside the label list");
      }
      out << labels[idx];
    }
  }
  return out.str();
}

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

DecisionProblem::DecisionProblem(PairwiseComparisonMatrix criteria,
                                 std::vector<PairwiseComparisonMatrix> alternatives)
    : criteria_(std::move(criteria)), alternatives_(std::move(alternatives)) {
  if (alternatives_.empty()) {
    throw ValidationError("decision problem needs at least one alternatives matrix");
  }
  if (alternatives_.size() != criteria_.size()) {
    std::ostringstream msg;
    msg << "criteria matrix is " << criteria_.size() << "x" << criteria_.size() << " but "
        << alternatives_.size() << " alternatives matrices were given";
    throw ValidationError(msg.str());
  }
  const std::size_t n = alternatives_.front().size();
  const auto& labels = alternatives_.front().labels();
  for (std::size_t k = 1; k < alternatives_.size(); ++k) {
    if (alternatives_[k].size() != n) {
      std::ostringstream msg;
      msg << "alternatives matrix " << k + 1 << " is " << alternatives_[k].size() << "x"
          << alternatives_[k].size() << ", expected " << n << "x" << n;
      throw ValidationError(msg.str());
    }
    if (alternatives_[k].labels() != labels) {
      std::ostringstream msg;
      msg << "alternatives matrix " << k + 1 << " carries different labels";
      throw ValidationError(msg.str());
    }
  }
}

std::vector<std::string> DecisionProblem::criterion_labels() const {
  if (!criteria_.labels().empty()) return criteria_.labels();
  return default_labels(criteria_count(), "C");
}

std::vector<std::string> DecisionProblem::alternative_labels() const {
  if (!alternatives_.front().labels().empty()) return alternatives_.front().labels();
  return default_labels(alternative_count(), "A");
}

}  // namespace pcmrank
