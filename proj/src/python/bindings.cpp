// Copyright 2026 The ptorsion Authors
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

// Python bindings. Everything crosses the boundary as JSON text; the Python
// package converts to and from dicts.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptorsion/catalog.hpp"
#include "ptorsion/ech.hpp"
#include "ptorsion/enumerate.hpp"
#include "ptorsion/json_io.hpp"
#include "ptorsion/torsion.hpp"

namespace py = pybind11;
using ptorsion::io::json;

namespace {

ptorsion::Domain load(const std::string& text) { return ptorsion::io::parse_domain(text); }

ptorsion::Domain load_valid(const std::string& text) {
  auto d = load(text);
  ptorsion::require_valid(d);
  return d;
}

std::string validate(const std::string& text) {
  const auto r = ptorsion::validate(load(text));
  return json{{"violations", r.violations}, {"components", r.components}}.dump();
}

std::string canonical(const std::string& text) { return ptorsion::io::emit_domain(load_valid(text)); }

std::string torsion_report(const std::string& text) {
  return ptorsion::io::to_json(ptorsion::planar_torsion_order(load_valid(text))).dump();
}

std::string analyze(const std::string& text) { return ptorsion::catalog::analyze(load_valid(text)).dump(); }

std::string ech_report(const std::string& text, const std::optional<std::string>& piece, std::int64_t umap,
                       bool twisted, std::int64_t k0) {
  const auto d = load_valid(text);
  std::string p;
  if (piece) {
    p = *piece;
  } else {
    const auto r = ptorsion::planar_torsion_order(d);
    if (!r.witness) throw ptorsion::PreconditionError("no torsion witness");
    p = *r.witness;
  }
  const auto mode = twisted ? ptorsion::ech::Coefficients::Twisted : ptorsion::ech::Coefficients::Untwisted;
  return ptorsion::io::ech_report(ptorsion::ech::perturb(d, p, k0), umap, mode).dump();
}

std::string evaluate_index_record(const std::string& text) {
  return ptorsion::io::evaluate_index_record(ptorsion::io::parse_json(text)).dump();
}

std::string named_models() {
  json out = json::array();
  for (const auto& m : ptorsion::catalog::named_models()) {
    json expected = json::array();
    for (const auto& e : m.expected) {
      expected.push_back({{"field", e.field}, {"value", e.value}, {"basis", ptorsion::catalog::to_string(e.basis)}});
    }
    out.push_back({{"name", m.name},
                   {"summary", m.summary},
                   {"domain", ptorsion::io::domain_to_json(m.domain)},
                   {"expected", std::move(expected)}});
  }
  return out.dump();
}

std::string enumerate_domains(std::size_t max_pieces, int max_edges) {
  json out = json::array();
  ptorsion::enumerate::Bounds b;
  b.max_pieces = max_pieces;
  b.max_edges = max_edges;
  ptorsion::enumerate::for_each_domain(b, [&](const ptorsion::Domain& d) {
    out.push_back(ptorsion::io::domain_to_json(ptorsion::canonicalize(d)));
  });
  return out.dump();
}

std::string write_catalog(const std::string& dir, std::optional<std::pair<std::size_t, int>> bounds,
                          unsigned threads) {
  std::optional<ptorsion::enumerate::Bounds> b;
  if (bounds) {
    b.emplace();
    b->max_pieces = bounds->first;
    b->max_edges = bounds->second;
  }
  const auto s = ptorsion::catalog::write_catalog(dir, b, threads);
  json files = json::array();
  for (const auto& f : s.files) files.push_back(f.string());
  return json{{"files", files},
              {"models", s.models},
              {"enumerated", s.enumerated},
              {"soft_mismatches", s.soft_mismatches.size()}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_ptorsion, m) {
  m.doc() = "Planar torsion detection on blown up summed open books";

  auto base = py::register_exception<ptorsion::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ptorsion::io::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ptorsion::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ptorsion::InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<ptorsion::InvalidReference>(m, "InvalidReference", base.ptr());
  py::register_exception<ptorsion::OverflowError>(m, "IntegerOverflowError", base.ptr());
  py::register_exception<ptorsion::catalog::CatalogMismatch>(m, "CatalogMismatch", base.ptr());

  m.def("validate", &validate, py::arg("domain"));
  m.def("canonical", &canonical, py::arg("domain"));
  m.def("torsion_report", &torsion_report, py::arg("domain"));
  m.def("analyze", &analyze, py::arg("domain"));
  m.def("ech_report", &ech_report, py::arg("domain"), py::arg("piece") = std::nullopt, py::arg("umap") = 0,
        py::arg("twisted") = false, py::arg("k0") = ptorsion::ech::kDefaultCoverBound);
  m.def("evaluate_index_record", &evaluate_index_record, py::arg("record"));
  m.def("named_models", &named_models);
  m.def("enumerate_domains", &enumerate_domains, py::arg("max_pieces"), py::arg("max_edges"),
        py::call_guard<py::gil_scoped_release>());
  m.def("write_catalog", &write_catalog, py::arg("directory"), py::arg("bounds") = std::nullopt,
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
