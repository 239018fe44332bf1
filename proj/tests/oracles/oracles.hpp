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

// Independent reference implementations used only by the tests. Nothing here
// calls into the cycle-space or torsion code.

#pragma once

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ptorsion/domain.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Nonzero invariant factors of an integer matrix, in divisibility order.
inline std::vector<std::int64_t> smith_invariants(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero magnitude in the remaining block
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (!pivot || std::llabs(a[i][j]) < std::llabs(a[pivot->first][pivot->second])))
          pivot = {i, j};
    if (!pivot) break;
    std::swap(a[t], a[pivot->first]);
    for (auto& row : a) std::swap(row[t], row[pivot->second]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const auto q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const auto q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pick a new pivot

    // the pivot must divide the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (source, target)
};

inline Graph graph_of(const ptorsion::Domain& d) {
  Graph g;
  g.vertices = d.pieces().size();
  for (const auto& e : d.edges()) g.edges.emplace_back(e.source.piece, e.target.piece);
  return g;
}

inline std::size_t components(const Graph& g, std::optional<std::size_t> skip = std::nullopt) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = g.vertices;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (skip && *skip == e) continue;
    const auto a = find(g.edges[e].first), b = find(g.edges[e].second);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Removing the edge disconnects its component.
inline bool brute_force_separates(const Graph& g, std::size_t e) {
  return components(g, e) > components(g);
}

// Rows r_v: +1 per source end of e at v, -1 per target end.
inline Matrix relation_matrix(const Graph& g) {
  Matrix r(g.vertices, std::vector<std::int64_t>(g.edges.size(), 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    r[g.edges[e].first][e] += 1;
    r[g.edges[e].second][e] -= 1;
  }
  return r;
}

// Whether the integer vector lies in the row lattice of r.
inline bool in_row_lattice(const Matrix& r, const std::vector<std::int64_t>& v) {
  Matrix extended = r;
  extended.push_back(v);
  return smith_invariants(r) == smith_invariants(extended);
}

inline std::vector<std::int64_t> unit(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

// Class of edge e in Z^E / rowspan(R) is zero.
inline bool snf_class_zero(const Graph& g, std::size_t e) {
  return in_row_lattice(relation_matrix(g), unit(g.edges.size(), e));
}

// Random well-formed domain with up to max_pieces pieces and max_edges edges.
inline ptorsion::Domain random_domain(std::mt19937_64& rng, std::size_t max_pieces, std::size_t max_edges) {
  using namespace ptorsion;
  std::uniform_int_distribution<std::size_t> npieces(1, max_pieces), nedges(0, max_edges);
  const std::size_t n = npieces(rng), m = nedges(rng);
  std::vector<Piece> pieces(n);
  std::uniform_int_distribution<int> genus(0, 2), coin(0, 3);
  for (std::size_t v = 0; v < n; ++v) {
    pieces[v].id = "V" + std::to_string(v);
    pieces[v].genus = genus(rng);
  }
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  for (std::size_t e = 0; e < m; ++e) {
    const auto a = vertex(rng), b = vertex(rng);
    const std::string id = "E" + std::to_string(e);
    pieces[a].slots.emplace_back(InterfaceSlot{id, EndMarker::Source});
    pieces[b].slots.emplace_back(InterfaceSlot{id, EndMarker::Target});
  }
  int circle = 0;
  for (auto& p : pieces) {
    if (coin(rng) == 0) p.slots.emplace_back(BindingSlot{"b" + std::to_string(circle++)});
    if (coin(rng) == 0) p.slots.emplace_back(BoundarySlot{"t" + std::to_string(circle++)});
    if (p.slots.empty()) p.slots.emplace_back(BindingSlot{"b" + std::to_string(circle++)});
    std::shuffle(p.slots.begin(), p.slots.end(), rng);
  }
  return Domain(std::move(pieces));
}

// Same decorated multigraph with pieces and slots permuted and every name
// replaced. Provenance is dropped.
inline ptorsion::Domain relabeled(const ptorsion::Domain& d, std::mt19937_64& rng) {
  using namespace ptorsion;
  auto pieces = d.pieces();
  std::shuffle(pieces.begin(), pieces.end(), rng);
  std::map<std::string, std::string> rename;
  std::size_t k = 0;
  auto fresh = [&](const std::string& name) -> std::string {
    auto it = rename.find(name);
    if (it != rename.end()) return it->second;
    return rename[name] = "n" + std::to_string(k++) + "_" + std::to_string(rng() % 1000);
  };
  std::optional<Domain::SignMap> signs;
  if (d.s1_signs()) signs.emplace();
  for (auto& p : pieces) {
    const auto old = p.id;
    p.id = fresh(p.id);
    if (signs) (*signs)[p.id] = d.s1_signs()->at(old);
    std::shuffle(p.slots.begin(), p.slots.end(), rng);
    for (auto& s : p.slots) {
      if (auto* b = std::get_if<BindingSlot>(&s)) b->name = fresh(b->name);
      if (auto* t = std::get_if<BoundarySlot>(&s)) t->name = fresh(t->name);
      if (auto* i = std::get_if<InterfaceSlot>(&s)) i->edge = fresh(i->edge);
    }
  }
  return Domain(std::move(pieces), {}, std::move(signs));
}

}  // namespace oracle
