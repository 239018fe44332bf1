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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptorsion/domain.hpp"
#include "ptorsion/enumerate.hpp"
#include "ptorsion/errors.hpp"

namespace ptorsion::catalog {

using json = nlohmann::json;

// Where an expected value comes from: a published statement, an independent
// computation (graph or lattice oracle), or immediate from the definitions.
enum class Basis { Published, Oracle, Immediate };
std::string_view to_string(Basis b);

struct Expectation {
  std::string field;  // JSON pointer into the analysis record, e.g. "/ech/n"
  json value;
  Basis basis = Basis::Published;
};

struct Model {
  std::string name;
  std::string summary;
  Domain domain;
  std::vector<Expectation> expected;
};

Domain lutz();
Domain giroux();
Domain t3_xi(int n);
Domain t3_mod_z2();
Domain vgk(int g, int k);
Domain symmetric_disk_pair();
Domain torsion_ambiguity();
Domain solid_torus_schematic();
Domain self_sum_schematic();

// Every named model with its expectations.
std::vector<Model> named_models();

// Analysis record of a domain:
// {order, witness, candidate_orders, symmetric, partially_planar,
//  fully_separating, pt_upper_bound, components, giroux, closed_class,
//  ech: null | {piece, n, r, m, vanishes_untwisted, vanishes_twisted}}
json analyze(const Domain& d);

struct Mismatch {
  std::string model;
  std::string field;
  json expected;
  json actual;
  Basis basis;
};

std::vector<Mismatch> check(const Model& m, const json& analysis);
std::vector<Mismatch> check(const Model& m);

class CatalogMismatch : public Error {
 public:
  explicit CatalogMismatch(std::vector<Mismatch> mismatches);
  const std::vector<Mismatch>& mismatches() const { return mismatches_; }

 private:
  std::vector<Mismatch> mismatches_;
};

struct WriteSummary {
  std::vector<std::filesystem::path> files;
  std::size_t models = 0;
  std::size_t enumerated = 0;
  std::vector<Mismatch> soft_mismatches;  // non-published expectations that failed
};

// Writes <name>.json per model and catalog.json (expectations plus computed
// analysis). With bounds, also enumeration.json listing every enumerated
// domain with its analysis. Throws CatalogMismatch, before writing anything,
// if a published expectation fails.
WriteSummary write_catalog(const std::filesystem::path& dir,
                           const std::optional<enumerate::Bounds>& bounds = std::nullopt, unsigned threads = 1);

}  // namespace ptorsion::catalog
