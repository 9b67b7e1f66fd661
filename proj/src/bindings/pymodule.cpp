// Copyright 2026 The mopdim Authors
//
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mopdim/dim2.hpp"
#include "mopdim/families.hpp"
#include "mopdim/io.hpp"
#include "mopdim/metric.hpp"
#include "mopdim/resolving_set.hpp"

namespace py = pybind11;
using namespace mopdim;

namespace {

VertexSet to_set(const std::vector<int>& xs) { return VertexSet(xs); }

}  // namespace

PYBIND11_MODULE(_mopdim, m) {
  m.doc() = "metric dimension algorithms for maximal outerplanar graphs";

  py::register_exception<Error>(m, "MopError");

  py::class_<MopGraph>(m, "MopGraph")
      .def_static(
          "from_diagonals",
          [](int n, const std::vector<std::pair<int, int>>& d) {
            return MopGraph::from_diagonals(n, d);
          },
          py::arg("n"), py::arg("diagonals"))
      .def_property_readonly("n", &MopGraph::order)
      .def_property_readonly("diagonals",
                             [](const MopGraph& g) { return g.diagonals(); })
      .def("degree", &MopGraph::degree, py::arg("v"))
      .def("has_edge", &MopGraph::has_edge, py::arg("u"), py::arg("v"))
      .def("neighbors",
           [](const MopGraph& g, int v) {
             auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           })
      .def("edges", &MopGraph::edges)
      .def("to_text", [](const MopGraph& g) { return to_text(g); })
      .def("__repr__", [](const MopGraph& g) {
        std::ostringstream ss;
        ss << "MopGraph(n=" << g.order() << ", diagonals=" << g.diagonals().size() << ")";
        return ss.str();
      });

  m.def("fan", &fan, py::arg("n"));
  m.def("zigzag", &zigzag, py::arg("n"));
  m.def("random_mop", &random_mop, py::arg("n"), py::arg("seed"));
  m.def(
      "enumerate_mops",
      [](int n) {
        std::vector<MopGraph> out;
        enumerate_mops(n, [&](const MopGraph& g) { out.push_back(g); });
        return out;
      },
      py::arg("n"));
  m.def(
      "recognize",
      [](const std::vector<std::pair<int, int>>& edges) {
        Recognized r = recognize(edges);
        return py::make_tuple(r.graph, r.relabel);
      },
      py::arg("edges"), "canonicalize an edge list; returns (graph, old-to-new labels)");
  m.def("is_mop_zigzag", &is_mop_zigzag, py::arg("graph"));

  m.def(
      "distance_matrix",
      [](const MopGraph& g) {
        DistanceTable t = distance_table(g);
        std::vector<std::vector<int>> rows(g.order() + 1, std::vector<int>(g.order() + 1, 0));
        for (int u = 1; u <= g.order(); ++u)
          for (int v = 1; v <= g.order(); ++v) rows[u][v] = t.at(u, v);
        return rows;
      },
      py::arg("graph"), "dense hop counts, 1-based (row/column 0 unused)");
  m.def(
      "is_resolving",
      [](const MopGraph& g, const std::vector<int>& s) {
        auto r = is_resolving(g, to_set(s));
        return py::make_tuple(r.resolving, r.collision ? py::cast(*r.collision) : py::none());
      },
      py::arg("graph"), py::arg("landmarks"),
      "returns (resolving, first colliding pair or None)");
  m.def(
      "is_locating_dominating",
      [](const MopGraph& g, const std::vector<int>& s) {
        return is_locating_dominating(g, to_set(s));
      },
      py::arg("graph"), py::arg("landmarks"));

  m.def(
      "decide_dim_two",
      [](const MopGraph& g) -> py::object {
        auto basis = decide_dim_two(g);
        if (!basis) return py::none();
        return py::cast(basis->members());
      },
      py::arg("graph"), "a verified 2-element basis, or None when the dimension exceeds 2");
  m.def(
      "build_resolving_set",
      [](const MopGraph& g, bool verify) {
        BuildOptions opts;
        opts.verify = verify;
        return build_resolving_set(g, opts).members();
      },
      py::arg("graph"), py::arg("verify") = true,
      "resolving set of size ceil(2n/5), built by the linear scan");
  m.def(
      "brute_force_beta",
      [](const MopGraph& g) {
        auto r = brute_force_beta(g);
        return py::make_tuple(r.beta, r.basis.members());
      },
      py::arg("graph"), "exhaustive metric dimension with a witness basis (n <= 16)");
  m.def("brute_force_lambda", &brute_force_lambda, py::arg("n"),
        "exhaustive location-domination number of the path (n <= 18)");
  m.def("fan_basis", [](int n) { return fan_basis(n).members(); }, py::arg("n"));
  m.def("fan_dimension", &fan_dimension, py::arg("n"));
  m.def(
      "grid_embedding",
      [](const MopGraph& g, const std::vector<int>& basis) {
        DistanceTable t = distance_table(g);
        GridEmbedding e = embed(g, to_set(basis), t);
        std::vector<std::pair<int, int>> coords(e.coords.begin() + 1, e.coords.end());
        return py::make_tuple(e.d, coords);
      },
      py::arg("graph"), py::arg("basis"),
      "(d, per-vertex grid coordinates) for a resolving pair");
}
