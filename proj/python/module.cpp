#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqcoll/json_io.hpp"

namespace py = pybind11;
using namespace eqcoll;

namespace {

// GradedDim crosses the boundary as {degree: multiplicity}; Int as Python int
// via decimal strings, which is lossless in both directions.
py::dict graded_to_py(const GradedDim& g) {
  py::dict d;
  for (const auto& [degree, mult] : g.dims())
    d[py::int_(degree)] = py::int_(py::str(mult.str()));
  return d;
}

GradedDim graded_from_py(const py::dict& d) {
  GradedDim g;
  for (const auto& item : d) {
    int degree = py::cast<int>(item.first);
    Int mult(py::cast<std::string>(py::str(item.second)));
    if (mult < 0) throw py::value_error("negative multiplicity");
    g.add(degree, mult);
  }
  return g;
}

py::int_ int_to_py(const Int& v) { return py::int_(py::str(v.str())); }

ExceptionalCollection collection_from_py(const py::dict& d) {
  return collection_from_json(json::parse(std::string(py::str(py::module_::import("json")
                                                                  .attr("dumps")(d)))));
}

InducedLabel label_from_py(const py::tuple& t) {
  if (t.size() != 2) throw py::value_error("label must be (alpha, irrep)");
  InducedLabel label;
  label.alpha = py::cast<MultiIndex>(t[0]);
  label.irrep = py::cast<std::vector<Partition>>(t[1]);
  return label;
}

py::tuple label_to_py(const InducedLabel& label) {
  return py::make_tuple(label.alpha, label.irrep);
}

py::dict kernel_to_py(const FormalKernel& k) {
  py::dict d;
  if (!k.diagonal.is_zero()) d["Diagonal"] = graded_to_py(k.diagonal);
  if (!k.product.is_zero()) d["Product"] = graded_to_py(k.product);
  if (!k.product_omega.is_zero()) d["ProductOmega"] = graded_to_py(k.product_omega);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with induced exceptional collections, kernel "
            "calculus and twist-group actions";

  m.def("partitions", &partitions, py::arg("n"),
        "All partitions of n, largest-part-first order");
  m.def("partition_count", [](int n) { return int_to_py(partition_count(n)); }, py::arg("n"));
  m.def("mn_character",
        [](const Partition& lambda, const Partition& mu) {
          return int_to_py(mn_character(lambda, mu));
        },
        py::arg("shape"), py::arg("cycle_type"),
        "Irreducible symmetric-group character value");

  m.def("sym_power",
        [](const py::dict& h, int k) { return graded_to_py(sym_power(graded_from_py(h), k)); },
        py::arg("h"), py::arg("k"),
        "Graded super symmetric power of a dimension vector {degree: dim}");
  m.def("tensor",
        [](const py::dict& a, const py::dict& b) {
          return graded_to_py(tensor(graded_from_py(a), graded_from_py(b)));
        },
        py::arg("a"), py::arg("b"));

  m.def("sequence_length", [](int k, int n) { return int_to_py(sequence_length(k, n)); },
        py::arg("k"), py::arg("n"),
        "Number of objects in the induced collection on the n-th power");

  m.def("enumerate_labels",
        [](const py::dict& base, int n) {
          auto ic = enumerate_labels(collection_from_py(base), n);
          py::list out;
          for (const auto& label : ic.labels) out.append(label_to_py(label));
          return out;
        },
        py::arg("collection"), py::arg("n"),
        "Canonically ordered labels (alpha, irrep) of the induced collection");

  m.def("equivariant_ext",
        [](const py::tuple& a, const py::tuple& b, const py::dict& base, bool twist_omega,
           bool oracle) {
          return graded_to_py(equivariant_ext(
              label_from_py(a), label_from_py(b), collection_from_py(base), twist_omega,
              oracle ? ExtMethod::BruteForce : ExtMethod::Character));
        },
        py::arg("a"), py::arg("b"), py::arg("collection"), py::arg("twist_omega") = false,
        py::arg("oracle") = false,
        "Equivariant Ext dimensions between two induced objects");

  m.def("verify_sequence",
        [](const py::dict& base, int n, bool oracle) {
          auto c = collection_from_py(base);
          auto report = verify_sequence(enumerate_labels(c, n), c,
                                        oracle ? ExtMethod::BruteForce : ExtMethod::Character);
          py::dict d;
          d["objects"] = report.object_count;
          d["passed"] = report.passed();
          d["strength"] = strength_name(report.strength);
          d["fullness"] = report.fullness_note;
          py::list failures;
          for (const auto& f : report.failures)
            failures.append(py::make_tuple(f.i, f.j, f.kind, graded_to_py(f.actual)));
          d["failures"] = failures;
          return d;
        },
        py::arg("collection"), py::arg("n"), py::arg("oracle") = false,
        "Check exceptionality and semiorthogonality of the induced sequence");

  m.def("validate_collection",
        [](const py::dict& base) {
          auto report = validate(collection_from_py(base));
          py::list violations;
          for (const auto& v : report.violations)
            violations.append(py::make_tuple(v.i, v.j, v.message));
          py::dict d;
          d["valid"] = report.valid();
          d["violations"] = violations;
          return d;
        },
        py::arg("collection"));

  m.def("classify_functor",
        [](const std::string& case_tag, int n, int d) {
          GeometricInput g;
          if (case_tag == "even-cy" || case_tag == "odd-cy")
            g = make_cy_input(n, d);
          else if (case_tag == "trivial")
            g = make_trivial_input(n, d);
          else
            throw py::value_error("unknown case: " + case_tag);
          GrgResult result = grg(g);
          py::dict out;
          out["class"] = functor_class_name(result.cls);
          if (result.kernel) out["kernel"] = kernel_to_py(*result.kernel);
          return out;
        },
        py::arg("case"), py::arg("n"), py::arg("d"),
        "Classify the monad of the truncated ideal functor");

  m.def("rank_fr",
        [](py::int_ chi, int n) { return int_to_py(rank_fr({Int(std::string(py::str(chi))), n})); },
        py::arg("chi"), py::arg("n"));
  m.def("rank_twist",
        [](py::int_ chi, int n) {
          return int_to_py(rank_twist({Int(std::string(py::str(chi))), n}));
        },
        py::arg("chi"), py::arg("n"));

  m.def("twist_group_rank",
        [](int n) {
          auto report = twist_group_report(n);
          py::dict d;
          d["rank"] = report.rank;
          d["expected_rank"] = int_to_py(report.expected_rank);
          d["commutes"] = report.commutes;
          d["integer_kernel_trivial"] = report.integer_kernel_trivial;
          d["note"] = report.discrepancy_note;
          return d;
        },
        py::arg("n"), "Rank of the shift/twist action on the proof-level test objects");
}
