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
#include <functional>
#include <vector>

#include "ptorsion/domain.hpp"

namespace ptorsion::enumerate {

// Symmetric piece-adjacency matrix, row-major. a[i*n+j] counts interface
// edges between pieces i and j; the diagonal counts self-edges.
struct Multigraph {
  std::size_t n = 0;
  std::vector<int> a;
  int at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  int degree(std::size_t v) const;  // self-edges count twice
  int edge_count() const;
};

// Connected multigraphs (self-edges allowed) on exactly `pieces` vertices with
// at most `max_edges` edges, one per isomorphism class.
std::vector<Multigraph> connected_multigraphs(std::size_t pieces, int max_edges);

// Vertex permutations p with a[p(i), p(j)] = a[i, j].
std::vector<std::vector<std::size_t>> automorphisms(const Multigraph& g);

struct Bounds {
  std::size_t max_pieces = 3;
  int max_edges = 4;
  int max_genus = 1;
  int max_bindings = 1;
  int max_boundary = 1;
};

// Per-piece decoration on top of a multigraph.
struct Decoration {
  int genus = 0;
  int bindings = 0;
  int boundary = 0;
  auto operator<=>(const Decoration&) const = default;
};

// Builds the domain: pieces P0.., edges I0.. (source at the lower-index end),
// bindings B0.., boundary tori T0... Slots are interface ends in edge order,
// then bindings, then boundary tori.
Domain build_domain(const Multigraph& g, const std::vector<Decoration>& deco);

// Visits every connected domain within the bounds exactly once up to
// isomorphism of decorated multigraphs (edge orientations are not part of
// the data). Every piece has at least one slot. With threads > 1 the
// visitor runs concurrently and must be thread-safe; visiting order is then
// unspecified. Returns the number of domains visited.
std::size_t for_each_domain(const Bounds& bounds, const std::function<void(const Domain&)>& visit,
                            unsigned threads = 1);

std::vector<Domain> all_domains(const Bounds& bounds);

}  // namespace ptorsion::enumerate
