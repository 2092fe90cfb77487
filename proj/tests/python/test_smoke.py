"""Smoke tests for the Python bindings against the school-selection example."""

import json
import os

import pytest

pcmrank = pytest.importorskip("pcmrank")


def data_path(name):
    return os.path.join(os.environ["PCMRANK_TEST_DATA"], name)


@pytest.fixture(scope="module")
def school():
    with open(data_path("school.json"), encoding="utf-8") as fh:
        return pcmrank.parse_problem(fh.read())


def test_tropical_basics():
    a = pcmrank.TropicalMatrix([[1, 4], [1, 1]])
    assert pcmrank.spectral_radius(a) == pytest.approx(2.0)
    assert pcmrank.trop_mul(a, a).to_lists() == [[4, 4], [1, 4]]
    star = pcmrank.kleene_star(pcmrank.TropicalMatrix([[0.5, 2], [0.5, 0.5]]))
    assert star.to_lists() == [[1, 2], [0.5, 1]]
    assert pcmrank.hilbert_seminorm([1.0, 0.9292, 0.6194]) == pytest.approx(1.6145, abs=1e-4)


def test_problem_parsing(school):
    assert school.criteria_count == 6
    assert school.alternative_count == 3
    assert school.alternative_labels == ["A", "B", "C"]
    assert school.criteria[0, 1] == 4.0
    reparsed = pcmrank.parse_problem(pcmrank.serialize_problem(school))
    assert reparsed.criteria.matrix.to_lists() == school.criteria.matrix.to_lists()


def test_lca_pipeline(school):
    sol = pcmrank.lca_solve(school)
    assert sol.lambda_ == pytest.approx(2.5900, abs=5e-4)
    assert sol.mu == pytest.approx(3.2287, abs=5e-4)
    assert sol.nu == pytest.approx(3.4140, abs=5e-4)
    assert sol.ratings_best[0] == pytest.approx([1.0, 0.9292, 0.6194], abs=5e-4)
    assert sol.ratings_worst == pytest.approx([1.0, 0.8787, 1.0], abs=5e-4)
    assert sol.ranking_best == [[0], [1], [2]]
    assert sol.ranking_worst == [[0, 2], [1]]
    assert pcmrank.format_ranking(sol.ranking_worst, ["A", "B", "C"]) == "A ≡ C ≻ B"


def test_classical_methods(school):
    ahp = pcmrank.ahp_solve(school)
    assert ahp.ratings_max == pytest.approx([0.9705, 1.0, 0.6715], abs=5e-4)
    assert ahp.ranking == [[1], [0], [2]]

    wgm = pcmrank.wgm_solve(school)
    assert wgm.ratings_max == pytest.approx([1.0, 0.9007, 0.8094], abs=5e-4)
    assert wgm.ranking == [[0], [1], [2]]


def test_single_matrix_route():
    pcm = pcmrank.validate_reciprocal([[1, 1 / 3, 1 / 2], [3, 1, 3], [2, 1 / 3, 1]])
    gen = pcmrank.solve_single(pcm.matrix)
    vectors, seminorm = pcmrank.best_differentiating(gen)
    assert seminorm >= 1.0
    for vec in vectors:
        assert pcmrank.lc_objective(pcm.matrix, vec) == pytest.approx(gen.lambda_, rel=1e-9)
    worst = pcmrank.worst_differentiating(gen)
    assert pcmrank.lc_objective(pcm.matrix, worst) == pytest.approx(gen.lambda_, rel=1e-9)


def test_validation_errors():
    with pytest.raises(ValueError):
        pcmrank.validate_reciprocal([[1, 2], [3, 1]])
    with pytest.raises(ValueError):
        pcmrank.parse_problem("{not json")
