#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pcmrank/pairwise.hpp"

using namespace pcmrank;

TEST_CASE("validate_reciprocal accepts the school matrices") {
  CHECK_NOTHROW(validate_reciprocal(fixtures::school_criteria()));
  for (const auto& grid : fixtures::school_alternative_grids()) {
    CHECK_NOTHROW(validate_reciprocal(grid));
  }
}

TEST_CASE("validate_reciprocal rejects reciprocity violations naming the entry") {
  TropicalMatrix bad{{1, 2}, {3, 1}};
  try {
    validate_reciprocal(bad, 1e-6);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string message = e.what();
    CHECK(message.find("(1,2)") != std::string::npos);
    CHECK(message.find("6") != std::string::npos);
  }
}

TEST_CASE("validate_reciprocal accepts exact reciprocals and forces the diagonal") {
  auto pcm = validate_reciprocal(TropicalMatrix{{1, 0.5}, {2, 1}});
  CHECK(pcm(0, 1) == 0.5);
  CHECK(pcm(1, 0) == 2.0);
  CHECK(pcm(0, 0) == 1.0);

  // A slightly-off diagonal inside tolerance is normalized to exactly 1.
  auto forced = validate_reciprocal(TropicalMatrix{{1.0 + 1e-8, 0.5}, {2, 1}});
  CHECK(forced(0, 0) == 1.0);
}

TEST_CASE("validate_reciprocal rejects nonpositive entries") {
  CHECK_THROWS_AS(validate_reciprocal(TropicalMatrix{{1, 0}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(validate_reciprocal(TropicalMatrix(2, 3, 1.0)), ShapeError);
}

TEST_CASE("consistent_from_vector builds exact ratio matrices") {
  auto ones = consistent_from_vector(RatingVector::raw({1, 1, 1}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(ones(i, j) == 1.0);
  }

  auto ratio = consistent_from_vector(RatingVector::raw({2, 1}));
  CHECK(ratio(0, 1) == 2.0);
  CHECK(ratio(1, 0) == 0.5);

  // Ratios cancel any positive scaling.
  auto scaled = consistent_from_vector(RatingVector::raw({6, 3}));
  CHECK(ratio == scaled);
}

TEST_CASE("is_consistent") {
  CHECK(is_consistent(consistent_from_vector(RatingVector::raw({3, 2, 1}))));
  // The first school matrix breaks transitivity: a13 = 1/2 but a12*a23 = 1.
  CHECK_FALSE(is_consistent(validate_reciprocal(fixtures::school_alternative_grids()[0])));
  // Any 2x2 reciprocal matrix is consistent.
  CHECK(is_consistent(validate_reciprocal(TropicalMatrix{{1, 7}, {1.0 / 7, 1}})));
}

TEST_CASE("consistency round trip on random vectors") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    auto x = oracle::random_positive_vector(rng, 2 + round % 5);
    auto pcm = consistent_from_vector(RatingVector::raw(x));
    CHECK(is_consistent(pcm, 1e-9));
    CHECK_NOTHROW(validate_reciprocal(pcm.matrix()));
  }
}

TEST_CASE("rank_alternatives orders descending and groups ties") {
  auto labels = fixtures::school_alternative_labels();

  auto ahp = rank_alternatives(RatingVector::raw({0.9705, 1.0000, 0.6715}));
  CHECK(format_ranking(ahp, labels) == "B ≻ A ≻ C");

  auto worst = rank_alternatives(RatingVector::raw({1.0000, 0.8787, 1.0000}));
  CHECK(format_ranking(worst, labels) == "A ≡ C ≻ B");
  CHECK(worst.has_tie());

  auto constant = rank_alternatives(RatingVector::raw({2, 2, 2}));
  CHECK(constant.groups.size() == 1);
  CHECK(constant.groups.front() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("ranking is invariant under positive scaling") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 50; ++round) {
    auto x = oracle::random_positive_vector(rng, 3 + round % 4);
    auto base = rank_alternatives(RatingVector::raw(x));
    const double scale = oracle::log_uniform(rng, 1e-3, 1e3);
    auto scaled = x;
    for (double& v : scaled) v *= scale;
    CHECK(rank_alternatives(RatingVector::raw(scaled)) == base);
  }
}

TEST_CASE("rating vector normalizations") {
  auto max_view = RatingVector::max_normalized({2, 4, 1});
  CHECK(max_view.values() == std::vector<double>{0.5, 1.0, 0.25});
  CHECK(max_view.normalization() == Normalization::kMax);

  auto sum_view = RatingVector::sum_normalized({1, 1, 2});
  CHECK(sum_view.values() == std::vector<double>{0.25, 0.25, 0.5});

  CHECK_THROWS_AS(RatingVector::raw({1, 0}), DomainError);
  CHECK_THROWS_AS(RatingVector::raw({}), ShapeError);
}

TEST_CASE("decision problem validates structure") {
  auto problem = fixtures::school_problem();
  CHECK(problem.criteria_count() == 6);
  CHECK(problem.alternative_count() == 3);
  CHECK(problem.criterion_labels() == fixtures::school_criterion_labels());
  CHECK(problem.alternative_labels() == fixtures::school_alternative_labels());

  // Count mismatch between criteria size and alternatives list.
  auto criteria = validate_reciprocal(TropicalMatrix{{1, 2}, {0.5, 1}});
  auto a = validate_reciprocal(TropicalMatrix{{1, 3}, {1.0 / 3, 1}});
  CHECK_THROWS_AS(DecisionProblem(criteria, {a, a, a}), ValidationError);

  // Alternatives of different sizes.
  auto b = validate_reciprocal(TropicalMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(DecisionProblem(criteria, {a, b}), ValidationError);
}

TEST_CASE("default labels") {
  auto criteria = validate_reciprocal(TropicalMatrix{{1, 2}, {0.5, 1}});
  auto a = validate_reciprocal(TropicalMatrix{{1, 3}, {1.0 / 3, 1}});
  DecisionProblem problem(criteria, {a, a});
  CHECK(problem.criterion_labels() == std::vector<std::string>{"C1", "C2"});
  CHECK(problem.alternative_labels() == std::vector<std::string>{"A1", "A2"});
}
