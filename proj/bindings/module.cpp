#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcmrank/lca.hpp"
#include "pcmrank/max_algebra.hpp"
#include "pcmrank/methods.hpp"
#include "pcmrank/pairwise.hpp"
#include "pcmrank/problem_io.hpp"
#include "pcmrank/version.hpp"

namespace py = pybind11;
using namespace pcmrank;

namespace {

std::vector<std::vector<double>> matrix_rows(const TropicalMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

std::vector<std::vector<std::size_t>> ranking_groups(const Ranking& r) { return r.groups; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ratings of decision alternatives from pairwise comparison matrices";
  m.attr("__version__") = kVersion;

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<TropicalMatrix>(m, "TropicalMatrix")
      .def(py::init(&TropicalMatrix::from_rows), py::arg("rows"))
      .def_static("identity", &TropicalMatrix::identity, py::arg("n"))
      .def_property_readonly("rows", &TropicalMatrix::rows)
      .def_property_readonly("cols", &TropicalMatrix::cols)
      .def("to_lists", &matrix_rows)
      .def("__getitem__",
           [](const TropicalMatrix& self, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= self.rows() || ij.second >= self.cols()) {
               throw py::index_error("matrix index out of range");
             }
             return self(ij.first, ij.second);
           })
      .def("__repr__", [](const TropicalMatrix& self) {
        return "TropicalMatrix(" + std::to_string(self.rows()) + "x" +
               std::to_string(self.cols()) + ")";
      });

  m.def("trop_add", py::overload_cast<const TropicalMatrix&, const TropicalMatrix&>(&trop_add));
  m.def("trop_mul", py::overload_cast<const TropicalMatrix&, const TropicalMatrix&>(&trop_mul));
  m.def(
      "trop_mul_vec",
      [](const TropicalMatrix& a, const std::vector<double>& x) {
        return trop_mul(a, TropicalVector(x)).values();
      },
      py::arg("a"), py::arg("x"));
  m.def("scalar_mul", &scalar_mul, py::arg("s"), py::arg("a"));
  m.def(
      "conj_transpose",
      [](const std::vector<double>& x) { return conj_transpose(TropicalVector(x)).values(); },
      py::arg("x"));
  m.def("matrix_conj_transpose", &matrix_conj_transpose, py::arg("a"));
  m.def("trop_power", &trop_power, py::arg("a"), py::arg("p"));
  m.def("trop_trace", &trop_trace, py::arg("a"));
  m.def("spectral_radius", &spectral_radius, py::arg("a"));
  m.def("kleene_star", &kleene_star, py::arg("a"), py::arg("tol") = 1e-9);
  m.def("trop_norm", py::overload_cast<const TropicalMatrix&>(&trop_norm), py::arg("a"));
  m.def(
      "trop_norm_vec",
      [](const std::vector<double>& x) { return trop_norm(TropicalVector(x)); }, py::arg("x"));
  m.def("hilbert_seminorm",
        py::overload_cast<const std::vector<double>&>(&hilbert_seminorm), py::arg("x"));

  py::class_<RatingVector>(m, "RatingVector")
      .def_static(
          "max_normalized",
          [](std::vector<double> v) { return RatingVector::max_normalized(std::move(v)); })
      .def_static(
          "sum_normalized",
          [](std::vector<double> v) { return RatingVector::sum_normalized(std::move(v)); })
      .def_static("raw", [](std::vector<double> v) { return RatingVector::raw(std::move(v)); })
      .def_property_readonly("values",
                             [](const RatingVector& self) { return self.values(); })
      .def("__len__", &RatingVector::size)
      .def("__getitem__",
           [](const RatingVector& self, std::size_t i) {
             if (i >= self.size()) throw py::index_error("index out of range");
             return self[i];
           });

  py::class_<PairwiseComparisonMatrix>(m, "PairwiseComparisonMatrix")
      .def_property_readonly("n", &PairwiseComparisonMatrix::size)
      .def_property_readonly("labels",
                             [](const PairwiseComparisonMatrix& self) { return self.labels(); })
      .def_property_readonly("matrix",
                             [](const PairwiseComparisonMatrix& self) { return self.matrix(); })
      .def("__getitem__", [](const PairwiseComparisonMatrix& self,
                             std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= self.size() || ij.second >= self.size()) {
          throw py::index_error("matrix index out of range");
        }
        return self(ij.first, ij.second);
      });

  m.def(
      "validate_reciprocal",
      [](const std::vector<std::vector<double>>& rows, double tol,
         std::vector<std::string> labels, const std::string& name) {
        return validate_reciprocal(TropicalMatrix::from_rows(rows), tol, std::move(labels),
                                   name);
      },
      py::arg("rows"), py::arg("tol") = 1e-6, py::arg("labels") = std::vector<std::string>{},
      py::arg("name") = "matrix");
  m.def(
      "consistent_from_vector",
      [](const std::vector<double>& x) {
        return consistent_from_vector(RatingVector::raw(x));
      },
      py::arg("x"));
  m.def("is_consistent", &is_consistent, py::arg("a"), py::arg("tol") = 1e-9);
  m.def(
      "rank_alternatives",
      [](const std::vector<double>& x, double tie_tol) {
        return ranking_groups(rank_alternatives(RatingVector::raw(x), tie_tol));
      },
      py::arg("x"), py::arg("tie_tol") = 1e-9);
  m.def(
      "format_ranking",
      [](const std::vector<std::vector<std::size_t>>& groups,
         const std::vector<std::string>& labels) {
        return format_ranking(Ranking{groups}, labels);
      },
      py::arg("groups"), py::arg("labels"));

  py::class_<GeneratingMatrix>(m, "GeneratingMatrix")
      .def_readonly("star", &GeneratingMatrix::star)
      .def_readonly("lambda_", &GeneratingMatrix::lambda);

  m.def(
      "lc_objective",
      [](const TropicalMatrix& a, const std::vector<double>& x) { return lc_objective(a, x); },
      py::arg("a"), py::arg("x"));
  m.def("solve_single", py::overload_cast<const TropicalMatrix&>(&solve_single), py::arg("a"));
  m.def(
      "best_differentiating",
      [](const GeneratingMatrix& g) {
        auto best = best_differentiating(g);
        std::vector<std::vector<double>> vectors;
        for (const auto& v : best.vectors) vectors.push_back(v.values());
        return py::make_tuple(vectors, best.seminorm);
      },
      py::arg("g"));
  m.def(
      "worst_differentiating",
      [](const GeneratingMatrix& g) { return worst_differentiating(g).values(); }, py::arg("g"));

  py::class_<DecisionProblem>(m, "DecisionProblem")
      .def(py::init<PairwiseComparisonMatrix, std::vector<PairwiseComparisonMatrix>>(),
           py::arg("criteria"), py::arg("alternatives"))
      .def_property_readonly("criteria_count", &DecisionProblem::criteria_count)
      .def_property_readonly("alternative_count", &DecisionProblem::alternative_count)
      .def_property_readonly("criteria", &DecisionProblem::criteria)
      .def_property_readonly("alternatives",
                             [](const DecisionProblem& self) { return self.alternatives(); })
      .def_property_readonly("criterion_labels", &DecisionProblem::criterion_labels)
      .def_property_readonly("alternative_labels", &DecisionProblem::alternative_labels);

  m.def(
      "principal_eigenvector",
      [](const TropicalMatrix& a) {
        auto [vec, value] = principal_eigenvector(a);
        return py::make_tuple(vec.values(), value);
      },
      py::arg("a"));
  m.def(
      "geometric_mean_vector",
      [](const TropicalMatrix& a) { return geometric_mean_vector(a).values(); }, py::arg("a"));

  py::class_<ClassicalSolution>(m, "ClassicalSolution")
      .def_property_readonly("method",
                             [](const ClassicalSolution& self) {
                               return self.method == Method::kAhp ? "ahp" : "wgm";
                             })
      .def_property_readonly(
          "criterion_weights",
          [](const ClassicalSolution& self) { return self.criterion_weights.values(); })
      .def_property_readonly("per_criterion",
                             [](const ClassicalSolution& self) {
                               std::vector<std::vector<double>> vectors;
                               for (const auto& v : self.per_criterion)
                                 vectors.push_back(v.values());
                               return vectors;
                             })
      .def_property_readonly(
          "ratings_sum",
          [](const ClassicalSolution& self) { return self.ratings_sum.values(); })
      .def_property_readonly(
          "ratings_max",
          [](const ClassicalSolution& self) { return self.ratings_max.values(); })
      .def_readonly("criteria_eigenvalue", &ClassicalSolution::criteria_eigenvalue)
      .def_readonly("alternative_eigenvalues", &ClassicalSolution::alternative_eigenvalues)
      .def_property_readonly(
          "ranking", [](const ClassicalSolution& self) { return ranking_groups(self.ranking); });

  py::class_<LcaSolution>(m, "LcaSolution")
      .def_readonly("lambda_", &LcaSolution::lambda)
      .def_readonly("nu", &LcaSolution::nu)
      .def_property_readonly("mu", &LcaSolution::mu)
      .def_readonly("weights_generating", &LcaSolution::weights_generating)
      .def_property_readonly(
          "weights_best", [](const LcaSolution& self) { return self.weights_best().values(); })
      .def_property_readonly(
          "weights_worst", [](const LcaSolution& self) { return self.weights_worst.values(); })
      .def_property_readonly("best_weighted_max",
                             [](const LcaSolution& self) { return self.headline().weighted_max; })
      .def_property_readonly("best_generating",
                             [](const LcaSolution& self) { return self.headline().generating; })
      .def_readonly("worst_weighted_max", &LcaSolution::worst_weighted_max)
      .def_readonly("worst_generating", &LcaSolution::worst_generating)
      .def_property_readonly("ratings_best",
                             [](const LcaSolution& self) {
                               std::vector<std::vector<double>> vectors;
                               for (const auto& v : self.ratings_best())
                                 vectors.push_back(v.values());
                               return vectors;
                             })
      .def_property_readonly(
          "ratings_worst", [](const LcaSolution& self) { return self.ratings_worst.values(); })
      .def_property_readonly(
          "ranking_best", [](const LcaSolution& self) { return ranking_groups(self.ranking_best()); })
      .def_property_readonly(
          "ranking_worst", [](const LcaSolution& self) { return ranking_groups(self.ranking_worst); })
      .def_readonly("weights_tie", &LcaSolution::weights_tie)
      .def_readonly("weights_seminorm", &LcaSolution::weights_seminorm);

  m.def("ahp_solve", &ahp_solve, py::arg("problem"), py::arg("tie_tol") = 1e-9);
  m.def("wgm_solve", &wgm_solve, py::arg("problem"), py::arg("tie_tol") = 1e-9);
  m.def("lca_solve", &lca_solve, py::arg("problem"), py::arg("tie_tol") = 1e-9);

  m.def("parse_problem", &parse_problem, py::arg("text"));
  m.def("load_problem", &load_problem, py::arg("path"));
  m.def("serialize_problem", &serialize_problem, py::arg("problem"), py::arg("indent") = 2);
}
