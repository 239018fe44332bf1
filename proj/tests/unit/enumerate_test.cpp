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

#include <algorithm>
#include <numeric>
#include <mutex>
#include <optional>
#include <set>

#include <gtest/gtest.h>

#include "ptorsion/enumerate.hpp"

namespace ptorsion::enumerate {
namespace {

TEST(Multigraphs, SmallCounts) {
  EXPECT_EQ(connected_multigraphs(1, 4).size(), 5u);
  EXPECT_EQ(connected_multigraphs(2, 2).size(), 3u);
  EXPECT_EQ(connected_multigraphs(3, 1).size(), 0u);
  EXPECT_EQ(connected_multigraphs(3, 2).size(), 1u);  // the path
  for (const auto& g : connected_multigraphs(4, 5)) EXPECT_LE(g.edge_count(), 5);
}

TEST(Multigraphs, Automorphisms) {
  const auto cycles = connected_multigraphs(3, 3);
  // the triangle has all six permutations as automorphisms
  bool found = false;
  for (const auto& g : cycles) {
    if (g.edge_count() == 3 && g.at(0, 1) == 1 && g.at(1, 2) == 1 && g.at(0, 2) == 1) {
      EXPECT_EQ(automorphisms(g).size(), 6u);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

// Canonical key of a decorated undirected multigraph by brute force over
// all relabelings.
using Key = std::pair<std::vector<Decoration>, std::vector<int>>;

Key brute_key(const Multigraph& g, const std::vector<Decoration>& deco) {
  std::vector<std::size_t> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  std::optional<Key> best;
  do {
    Key k;
    for (std::size_t i = 0; i < g.n; ++i) k.first.push_back(deco[p[i]]);
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j) k.second.push_back(g.at(p[i], p[j]));
    if (!best || k < *best) best = k;
  } while (std::next_permutation(p.begin(), p.end()));
  return *best;
}

Key key_of(const Domain& d) {
  Multigraph g{d.pieces().size(), std::vector<int>(d.pieces().size() * d.pieces().size(), 0)};
  for (const auto& e : d.edges()) {
    ++g.a[e.source.piece * g.n + e.target.piece];
    if (!e.is_self_edge()) ++g.a[e.target.piece * g.n + e.source.piece];
  }
  std::vector<Decoration> deco;
  for (const auto& p : d.pieces()) {
    deco.push_back({p.genus, static_cast<int>(p.binding_count()), static_cast<int>(p.boundary_count())});
  }
  return brute_key(g, deco);
}

TEST(Enumeration, MatchesBruteForceGeneration) {
  const Bounds b{3, 3};
  std::set<Key> expected;
  // all labeled adjacency matrices, connected or not, then filter
  for (std::size_t n = 1; n <= b.max_pieces; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) pos.emplace_back(i, j);
    std::vector<int> counts(pos.size(), 0);
    while (true) {
      int total = std::accumulate(counts.begin(), counts.end(), 0);
      if (total <= b.max_edges) {
        Multigraph g{n, std::vector<int>(n * n, 0)};
        for (std::size_t k = 0; k < pos.size(); ++k) {
          g.a[pos[k].first * n + pos[k].second] = counts[k];
          g.a[pos[k].second * n + pos[k].first] = counts[k];
        }
        // connectivity by repeated relaxation
        std::vector<bool> seen(n, false);
        seen[0] = true;
        for (std::size_t round = 0; round < n; ++round)
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              if (seen[i] && g.at(i, j) > 0) seen[j] = true;
        if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
          std::vector<int> code(n, 0);
          while (true) {
            std::vector<Decoration> deco;
            bool ok = true;
            for (std::size_t v = 0; v < n; ++v) {
              deco.push_back({code[v] / 4, (code[v] / 2) % 2, code[v] % 2});
              ok = ok && g.degree(v) + deco.back().bindings + deco.back().boundary >= 1;
            }
            if (ok) expected.insert(brute_key(g, deco));
            std::size_t v = 0;
            while (v < n && code[v] == 7) code[v++] = 0;
            if (v == n) break;
            ++code[v];
          }
        }
      }
      std::size_t k = 0;
      while (k < counts.size() && counts[k] == b.max_edges) counts[k++] = 0;
      if (k == counts.size()) break;
      ++counts[k];
    }
  }

  std::set<Key> got;
  std::size_t visited = 0;
  for_each_domain(b, [&](const Domain& d) {
    EXPECT_TRUE(got.insert(key_of(d)).second) << "duplicate isomorphism class";
    ++visited;
  });
  EXPECT_EQ(visited, expected.size());
  EXPECT_EQ(got, expected);
}

TEST(Enumeration, EveryDomainValidates) {
  std::size_t count = 0;
  for_each_domain({3, 4}, [&](const Domain& d) {
    const auto report = validate(d);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.components.size(), 1u);
    ++count;
  });
  EXPECT_GT(count, 0u);
}

TEST(Enumeration, ThreadedVisitsTheSameDomains) {
  std::mutex mu;
  std::set<Key> serial, threaded;
  for_each_domain({3, 4}, [&](const Domain& d) { serial.insert(key_of(d)); });
  const auto n = for_each_domain(
      {3, 4},
      [&](const Domain& d) {
        auto k = key_of(d);
        std::lock_guard lock(mu);
        threaded.insert(std::move(k));
      },
      4);
  EXPECT_EQ(n, serial.size());
  EXPECT_EQ(serial, threaded);
}

TEST(Enumeration, ExceptionsFromWorkersPropagate) {
  EXPECT_THROW(for_each_domain({2, 2}, [](const Domain&) { throw std::runtime_error("boom"); }, 3),
               std::runtime_error);
}

}  // namespace
}  // namespace ptorsion::enumerate
