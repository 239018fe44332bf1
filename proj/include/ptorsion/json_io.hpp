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

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ptorsion/domain.hpp"
#include "ptorsion/ech.hpp"
#include "ptorsion/errors.hpp"
#include "ptorsion/index_calculus.hpp"
#include "ptorsion/torsion.hpp"

namespace ptorsion::io {

using json = nlohmann::json;

// Malformed input text or a document that does not follow the schema.
// line/column are 1-based; 0 when the position is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Parses JSON text, translating parser errors into line/column diagnostics.
json parse_json(std::string_view text);

// Domain documents. Parsing checks the schema, never the domain invariants.
Domain domain_from_json(const json& doc);
Domain parse_domain(std::string_view text);
// Writes the domain as given (no canonicalization), e.g. for invalid input.
json domain_to_json(const Domain& d);
// Canonical, byte-stable text: canonicalize + sorted keys + 2-space indent.
std::string emit_domain(const Domain& d);

json to_json(const TorsionReport& r);
json to_json(const CycleClass& c);
json to_json(const ech::ChainElement& c);
json to_json(const ech::OrbitSet& s);
json to_json(const ech::TowerReport& t);

// {n, r, m, gamma0, differential, vanishes_untwisted, vanishes_twisted,
//  offending_tori, u_tower}
json ech_report(const ech::PerturbedModel& model, std::int64_t tower_depth, ech::Coefficients tower_mode);

// Batch index records: each input object carries "kind" (one of "curve",
// "ech", "cover", "ghost") and the corresponding fields; the output copy has
// the computed values appended.
index::CurveData curve_from_json(const json& rec);
index::EchCurveData ech_curve_from_json(const json& rec);
json evaluate_index_record(const json& rec);

}  // namespace ptorsion::io
