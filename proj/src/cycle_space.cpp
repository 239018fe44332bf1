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

#include "ptorsion/cycle_space.hpp"

#include <algorithm>
#include <sstream>

#include "ptorsion/checked.hpp"
#include "ptorsion/errors.hpp"

namespace ptorsion {

std::size_t PieceGraph::edge_index(std::string_view id) const {
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].id == id) return e;
  }
  throw InvalidReference("no interface edge with id '" + std::string(id) + "'");
}

PieceGraph piece_graph(const Domain& d) {
  require_valid(d);
  return piece_graph_unchecked(d);
}

PieceGraph piece_graph_unchecked(const Domain& d) {
  PieceGraph g;
  for (const auto& p : d.pieces()) g.piece_ids.push_back(p.id);
  for (const auto& e : d.edges()) g.edges.push_back({e.id, e.source.piece, e.target.piece});
  return g;
}

bool CycleClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

CycleClass CycleClass::operator+(const CycleClass& other) const {
  if (other.rank() != rank()) throw PreconditionError("cycle classes of different rank");
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked::add(coords_[i], other.coords_[i]);
  return CycleClass(std::move(out));
}

CycleClass CycleClass::operator-(const CycleClass& other) const { return *this + (-other); }

CycleClass CycleClass::operator-() const { return scaled(-1); }

CycleClass CycleClass::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked::mul(coords_[i], k);
  return CycleClass(std::move(out));
}

std::string CycleClass::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

CycleSpace::CycleSpace(const PieceGraph& graph) : edge_count_(graph.edges.size()) {
  const std::size_t n = graph.piece_ids.size();
  // incidence lists: (edge, neighbour)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> inc(n);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& ge = graph.edges[e];
    inc[ge.source].emplace_back(e, ge.target);
    if (!ge.is_self_edge()) inc[ge.target].emplace_back(e, ge.source);
  }

  // BFS spanning forest; parent edge and depth per vertex
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, none), parent_edge(n, none), depth(n, 0);
  std::vector<bool> seen(n, false), tree_edge(graph.edges.size(), false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++components_;
    seen[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t v = queue[q];
      for (auto [e, w] : inc[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        tree_edge[e] = true;
        queue.push_back(w);
      }
    }
  }

  // z[e] = +1 when the cycle runs along e from source to target
  for (std::size_t f = 0; f < graph.edges.size(); ++f) {
    if (tree_edge[f]) continue;
    std::vector<std::int64_t> z(graph.edges.size(), 0);
    z[f] = 1;
    // close the cycle with the tree path from target(f) back to source(f)
    std::size_t a = graph.edges[f].target;
    std::size_t b = graph.edges[f].source;
    std::vector<std::pair<std::size_t, std::size_t>> tail;  // from b's side, reversed later
    auto step_up = [&](std::size_t v, bool forward) {
      const std::size_t e = parent_edge[v];
      // walking v -> parent[v]; forward walk direction along the cycle
      const bool along = graph.edges[e].source == v;
      z[e] += (along == forward) ? 1 : -1;
      return parent[v];
    };
    while (a != b) {
      if (depth[a] >= depth[b]) {
        a = step_up(a, true);
      } else {
        // b's side is traversed parent -> b, i.e. against the upward walk
        b = step_up(b, false);
      }
    }
    cycles_.push_back(std::move(z));
  }
}

CycleClass CycleSpace::edge_class(std::size_t e) const {
  if (e >= edge_count_) throw InvalidReference("edge index out of range");
  std::vector<std::int64_t> coords(cycles_.size());
  for (std::size_t i = 0; i < cycles_.size(); ++i) coords[i] = cycles_[i][e];
  return CycleClass(std::move(coords));
}

CycleClass CycleSpace::project(std::span<const std::int64_t> edge_vector) const {
  if (edge_vector.size() != edge_count_) throw PreconditionError("edge vector has the wrong length");
  std::vector<std::int64_t> coords(cycles_.size(), 0);
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    for (std::size_t e = 0; e < edge_count_; ++e) {
      coords[i] = checked::add(coords[i], checked::mul(cycles_[i][e], edge_vector[e]));
    }
  }
  return CycleClass(std::move(coords));
}

}  // namespace ptorsion
