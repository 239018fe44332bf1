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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ptorsion/domain.hpp"

namespace ptorsion {

// The piece multigraph of a well-formed domain.
struct PieceGraph {
  struct GraphEdge {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    bool is_self_edge() const { return source == target; }
  };

  std::vector<std::string> piece_ids;
  std::vector<GraphEdge> edges;

  std::size_t edge_index(std::string_view id) const;  // throws InvalidReference
};

PieceGraph piece_graph(const Domain& d);
// Same, for callers that already validated d.
PieceGraph piece_graph_unchecked(const Domain& d);

// An element of Z^E / span{r_v}, where r_v[e] = #source ends of e at v minus
// #target ends of e at v. The quotient is free of rank E - V + C; a class is
// stored by its coordinates against the fundamental cycles of a spanning
// forest, which identifies the quotient with Z^(E - V + C).
class CycleClass {
 public:
  CycleClass() = default;
  explicit CycleClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static CycleClass zero(std::size_t rank) { return CycleClass(std::vector<std::int64_t>(rank, 0)); }

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }
  bool is_zero() const;

  CycleClass operator+(const CycleClass& other) const;
  CycleClass operator-(const CycleClass& other) const;
  CycleClass operator-() const;
  CycleClass scaled(std::int64_t k) const;

  auto operator<=>(const CycleClass&) const = default;
  bool operator==(const CycleClass&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

class CycleSpace {
 public:
  explicit CycleSpace(const PieceGraph& graph);

  std::size_t rank() const { return cycles_.size(); }
  std::size_t component_count() const { return components_; }

  // Class of the interface torus of edge `e`, oriented source to target.
  CycleClass edge_class(std::size_t e) const;
  // Class of an arbitrary integer combination of edges.
  CycleClass project(std::span<const std::int64_t> edge_vector) const;

  // Fundamental cycles as signed edge-incidence vectors.
  const std::vector<std::vector<std::int64_t>>& cycles() const { return cycles_; }

 private:
  std::size_t edge_count_ = 0;
  std::size_t components_ = 0;
  std::vector<std::vector<std::int64_t>> cycles_;
};

}  // namespace ptorsion
