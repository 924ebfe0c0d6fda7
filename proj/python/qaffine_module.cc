// Copyright 2026 The qaffine Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Indices in lists are 0-based; permutations and groups are
// exchanged as 1-based cycle strings such as "(1 2)(3 4)".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/autgroup.h"
#include "qaffine/classify.h"
#include "qaffine/decompose.h"
#include "qaffine/errors.h"
#include "qaffine/families.h"
#include "qaffine/galois_field.h"

namespace py = pybind11;
using namespace qaffine;

namespace {

std::vector<std::string> generator_strings(const PermGroup& g) {
  std::vector<std::string> out;
  for (const Perm& p : g.generators()) out.push_back(format_cycles(p));
  return out;
}

py::dict structure_dict(const StructuredAutGroup& a) {
  py::dict d;
  d["blocks"] = a.blocks.blocks();
  d["gl_degrees"] = a.gl_degrees;
  d["stab_order"] = a.stab.order();
  d["stab_generators"] = generator_strings(a.stab);
  d["structure"] = structure_string(a);
  d["monomial"] = a.monomial;
  return d;
}

FieldMatrix to_field_matrix(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  FieldMatrix h(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidArgument("h must be square");
    }
    for (int j = 0; j < n; ++j) h.at(i, j) = rows[i][j];
  }
  return h;
}

Perm parse_perm(const std::string& text, int degree) {
  return parse_cycles(text, degree);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded automorphism groups of quantum affine spaces";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<MatrixValidationError>(m, "MatrixValidationError",
                                                error.ptr());
  py::register_exception<ValueGroupMismatch>(m, "ValueGroupMismatch",
                                             error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<EmbeddingError>(m, "EmbeddingError", error.ptr());
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", error.ptr());

  py::class_<QMatrix>(m, "QMatrix")
      .def_property_readonly("n", &QMatrix::size)
      .def_property_readonly(
          "mode", [](const QMatrix& q) { return q.group()->describe(); })
      .def("entry",
           [](const QMatrix& q, int i, int j) {
             if (i < 0 || j < 0 || i >= q.size() || j >= q.size()) {
               throw py::index_error("entry index out of range");
             }
             return format_scalar(q(i, j));
           })
      .def("to_text", &write_qmatrix)
      .def("__str__", &format_matrix)
      .def("__repr__",
           [](const QMatrix& q) {
             return "<QMatrix n=" + std::to_string(q.size()) + " " +
                    q.group()->describe() + ">";
           })
      .def("__eq__", &QMatrix::operator==);

  m.def("read_qmatrix", [](const std::string& text) { return read_qmatrix(text); },
        py::arg("text"), "Parse the qmatrix text format.");
  m.def("read_qmatrix_file", &read_qmatrix_file, py::arg("path"));
  m.def("write_qmatrix", &write_qmatrix, py::arg("q"));

  m.def("row_blocks", [](const QMatrix& q) { return row_blocks(q).blocks(); },
        py::arg("q"));
  m.def("stab",
        [](const QMatrix& q) { return generator_strings(stab(q)); },
        py::arg("q"), "Generators of Stab(q) on block indices.");
  m.def("stab_order", [](const QMatrix& q) { return stab(q).order(); },
        py::arg("q"));
  m.def("aut_structure",
        [](const QMatrix& q) { return structure_dict(aut_structure(q)); },
        py::arg("q"));
  m.def("structure_string",
        [](const std::vector<int>& sizes, const std::string& group) {
          return structure_string(
              sizes, parse_group(group, static_cast<int>(sizes.size())));
        },
        py::arg("sizes"), py::arg("group"));
  m.def("is_orbit_maximal",
        [](const std::string& group, int degree) {
          return is_orbit_maximal(parse_group(group, degree));
        },
        py::arg("group"), py::arg("degree"));

  m.def("independence_partition",
        [](const QMatrix& q) { return independence_partition(q).blocks(); },
        py::arg("q"));
  m.def("direct_product_decomposition",
        [](const QMatrix& q) {
          std::vector<std::pair<std::vector<int>, QMatrix>> out;
          for (const Factor& f : direct_product_decomposition(q)) {
            out.emplace_back(f.indices, f.sub);
          }
          return out;
        },
        py::arg("q"));
  m.def("direct_sum",
        [](const QMatrix& a, const QMatrix& b, const std::string& scalar) {
          if (a.group()->is_finite()) {
            return direct_sum(a, b, parse_scalar(scalar, a.group()));
          }
          // The scalar lives in the group of the names it uses; direct_sum
          // merges symbolic groups.
          std::vector<std::string> names;
          std::string name;
          for (char c : scalar + " ") {
            if (std::isalpha(static_cast<unsigned char>(c))) {
              name += c;
            } else if (!name.empty()) {
              if (std::find(names.begin(), names.end(), name) == names.end()) {
                names.push_back(name);
              }
              name.clear();
            }
          }
          return direct_sum(a, b,
                            parse_scalar(scalar, ValueGroup::symbolic(names)));
        },
        py::arg("a"), py::arg("b"), py::arg("scalar"),
        "[[a, s], [s^-1, b]] with the scalar s written in text form.");
  m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"));
  m.def("mult_independent", &mult_independent, py::arg("a"), py::arg("b"));
  m.def("tensor_structure",
        [](const QMatrix& a, const QMatrix& b) {
          return structure_dict(tensor_structure(a, b));
        },
        py::arg("a"), py::arg("b"));

  m.def("symmetric_family", [](int n) { return symmetric_family(n); },
        py::arg("n"));
  m.def("dihedral_family", [](int n) { return dihedral_family(n); },
        py::arg("n"));
  m.def("cyclic_family",
        [](const std::string& sigma, int degree) {
          return cyclic_family(parse_perm(sigma, degree));
        },
        py::arg("sigma"), py::arg("degree"));
  m.def("inflate", &inflate, py::arg("q"), py::arg("m"));

  m.def("specialize", &specialize, py::arg("q"), py::arg("field_order"));
  m.def("is_graded_automorphism",
        [](const std::vector<std::vector<int>>& h, const QMatrix& q,
           int field) {
          return is_graded_automorphism(to_field_matrix(h), q,
                                        GaloisField(field));
        },
        py::arg("h"), py::arg("q"), py::arg("field"));
  m.def("relation_oracle",
        [](const std::vector<std::vector<int>>& h, const QMatrix& q,
           int field) {
          return relation_oracle(to_field_matrix(h), q, GaloisField(field));
        },
        py::arg("h"), py::arg("q"), py::arg("field"));

  m.def("classify",
        [](int n, std::optional<int> field, bool monomial_only,
           bool min_field, std::optional<uint64_t> budget) {
          FieldSpec spec =
              field ? FieldSpec::finite(*field) : FieldSpec::generic();
          ClassifyOptions options;
          options.monomial_only = monomial_only;
          options.compute_min_field = min_field && spec.is_generic();
          if (budget) options.search.node_budget = *budget;
          std::vector<ClassRecord> records;
          {
            py::gil_scoped_release release;
            records = classify(n, spec, options);
          }
          py::list out;
          for (const ClassRecord& r : records) {
            py::dict d;
            d["sizes"] = r.sizes;
            d["stab_generators"] = generator_strings(r.stab_rep);
            d["stab_order"] = r.stab_rep.order();
            d["structure"] = structure_string(r.sizes, r.stab_rep);
            d["min_field"] = r.min_field;
            d["min_field_exact"] = r.min_field_exact;
            d["witness"] = r.witness;
            out.append(d);
          }
          return out;
        },
        py::arg("n"), py::arg("field") = py::none(),
        py::arg("monomial_only") = false, py::arg("min_field") = true,
        py::arg("budget") = py::none(),
        "Graded automorphism types in dimension n; generic when field is "
        "None.");
}
