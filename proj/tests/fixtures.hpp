#pragma once

// School-selection fixture: a classic three-school / six-criteria pairwise
// comparison problem from the decision-analysis literature, with the values
// every method is expected to reproduce (four printed decimals).

#include <vector>

#include "pcmrank/pairwise.hpp"

namespace fixtures {

inline pcmrank::TropicalMatrix school_criteria() {
  return pcmrank::TropicalMatrix{
      {1.0, 4.0, 3.0, 1.0, 3.0, 4.0},
      {1.0 / 4, 1.0, 7.0, 3.0, 1.0 / 5, 1.0},
      {1.0 / 3, 1.0 / 7, 1.0, 1.0 / 5, 1.0 / 5, 1.0 / 6},
      {1.0, 1.0 / 3, 5.0, 1.0, 1.0, 1.0 / 3},
      {1.0 / 3, 5.0, 5.0, 1.0, 1.0, 3.0},
      {1.0 / 4, 1.0, 6.0, 3.0, 1.0 / 3, 1.0},
  };
}

inline std::vector<pcmrank::TropicalMatrix> school_alternative_grids() {
  using pcmrank::TropicalMatrix;
  return {
      TropicalMatrix{{1.0, 1.0 / 3, 1.0 / 2}, {3.0, 1.0, 3.0}, {2.0, 1.0 / 3, 1.0}},
      TropicalMatrix{{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}},
      TropicalMatrix{{1.0, 5.0, 1.0}, {1.0 / 5, 1.0, 1.0 / 5}, {1.0, 5.0, 1.0}},
      TropicalMatrix{{1.0, 9.0, 7.0}, {1.0 / 9, 1.0, 1.0 / 5}, {1.0 / 7, 5.0, 1.0}},
      TropicalMatrix{{1.0, 1.0 / 2, 1.0}, {2.0, 1.0, 2.0}, {1.0, 1.0 / 2, 1.0}},
      TropicalMatrix{{1.0, 6.0, 4.0}, {1.0 / 6, 1.0, 1.0 / 3}, {1.0 / 4, 3.0, 1.0}},
  };
}

inline std::vector<std::string> school_criterion_labels() {
  return {"learning",          "friends",
          "school life",       "vocational training",
          "college preparation", "music classes"};
}

inline std::vector<std::string> school_alternative_labels() { return {"A", "B", "C"}; }

inline pcmrank::DecisionProblem school_problem() {
  auto criteria =
      pcmrank::validate_reciprocal(school_criteria(), 1e-6, school_criterion_labels(), "criteria");
  std::vector<pcmrank::PairwiseComparisonMatrix> alternatives;
  for (const auto& grid : school_alternative_grids()) {
    alternatives.push_back(
        pcmrank::validate_reciprocal(grid, 1e-6, school_alternative_labels(), "alternatives"));
  }
  return pcmrank::DecisionProblem(std::move(criteria), std::move(alternatives));
}

// Expected values, four decimals.

inline constexpr double kLambda = 2.5900;
inline constexpr double kMu = 3.2287;
inline constexpr double kNu = 3.4140;

inline std::vector<double> lca_weights_best() {
  return {1.0000, 0.4472, 0.1287, 0.3861, 0.8633, 0.4472};
}
inline std::vector<double> lca_weights_worst() {
  return {1.0000, 0.4472, 0.1655, 0.3861, 0.8633, 0.6475};
}
inline std::vector<double> lca_ratings_best() { return {1.0000, 0.9292, 0.6194}; }
inline std::vector<double> lca_ratings_worst() { return {1.0000, 0.8787, 1.0000}; }

inline std::vector<std::vector<double>> weights_generating_expected() {  // D
  return {{1.0000, 2.2361, 6.0434, 2.5900, 1.1583, 1.5444},
          {0.4472, 1.0000, 2.7027, 1.1583, 0.5180, 0.6907},
          {0.1287, 0.2878, 1.0000, 0.3333, 0.1491, 0.1988},
          {0.3861, 0.8633, 2.3333, 1.0000, 0.4472, 0.5963},
          {0.8633, 1.9305, 5.2175, 2.2361, 1.0000, 1.3333},
          {0.4472, 1.0000, 2.7027, 1.1583, 0.5180, 1.0000}};
}

inline std::vector<std::vector<double>> best_weighted_expected() {  // P
  return {{1.0000, 3.4749, 2.7027}, {3.0000, 1.0000, 3.0000}, {2.0000, 1.9305, 1.0000}};
}

inline std::vector<std::vector<double>> best_generating_expected() {  // Q
  return {{1.0000, 1.0762, 1.0000}, {0.9292, 1.0000, 0.9292}, {0.6194, 0.6667, 1.0000}};
}

inline std::vector<std::vector<double>> worst_weighted_expected() {  // R
  return {{1.0000, 3.8850, 2.7027}, {3.0000, 1.0000, 3.0000}, {2.0000, 1.9425, 1.0000}};
}

inline std::vector<std::vector<double>> worst_generating_expected() {  // S
  return {{1.0000, 1.1380, 1.0000}, {0.8787, 1.0000, 0.8787}, {0.5858, 0.6667, 1.0000}};
}

inline std::vector<double> ahp_weights() {
  return {0.3208, 0.1395, 0.0348, 0.1285, 0.2374, 0.1391};
}
inline std::vector<std::vector<double>> ahp_eigenvectors() {
  return {{0.1571, 0.5936, 0.2493}, {0.3333, 0.3333, 0.3333}, {0.4545, 0.0909, 0.4545},
          {0.7720, 0.0545, 0.1734}, {0.2500, 0.5000, 0.2500}, {0.6910, 0.0914, 0.2176}};
}
inline std::vector<double> ahp_ratings_sum() { return {0.3673, 0.3785, 0.2542}; }
inline std::vector<double> ahp_ratings_max() { return {0.9705, 1.0000, 0.6715}; }

inline std::vector<double> wgm_weights() {
  return {0.3160, 0.1391, 0.0360, 0.1251, 0.2360, 0.1477};
}
inline std::vector<std::vector<double>> wgm_geometric_means() {
  return {{0.5503, 2.0801, 0.8736}, {1.0000, 1.0000, 1.0000}, {1.7100, 0.3420, 1.7100},
          {3.9791, 0.2811, 0.8939}, {0.7937, 1.5874, 0.7937}, {2.8845, 0.3816, 0.9086}};
}
inline std::vector<double> wgm_ratings_max() { return {1.0000, 0.9007, 0.8094}; }

}  // namespace fixtures
