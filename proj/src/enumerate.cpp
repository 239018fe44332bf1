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

#include "ptorsion/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ptorsion/errors.hpp"

namespace ptorsion::enumerate {

int Multigraph::degree(std::size_t v) const {
  int d = 0;
  for (std::size_t j = 0; j < n; ++j) d += at(v, j) * (j == v ? 2 : 1);
  return d;
}

int Multigraph::edge_count() const {
  int e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) e += at(i, j);
  return e;
}

namespace {

bool connected(const Multigraph& g) {
  if (g.n == 0) return false;
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < g.n; ++w) {
      if (!seen[w] && g.at(v, w) > 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

std::vector<int> upper(const Multigraph& g, const std::vector<std::size_t>& p) {
  std::vector<int> out;
  out.reserve(g.n * (g.n + 1) / 2);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = i; j < g.n; ++j) out.push_back(g.at(p[i], p[j]));
  return out;
}

// Canonical means lexicographically maximal upper triangle over all relabelings.
bool is_canonical(const Multigraph& g) {
  std::vector<std::size_t> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  const auto base = upper(g, p);
  while (std::next_permutation(p.begin(), p.end())) {
    if (upper(g, p) > base) return false;
  }
  return true;
}

void distribute(Multigraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& positions, std::size_t k,
                int remaining, std::vector<Multigraph>& out) {
  if (k == positions.size()) {
    if (connected(g) && is_canonical(g)) out.push_back(g);
    return;
  }
  const auto [i, j] = positions[k];
  for (int c = 0; c <= remaining; ++c) {
    g.a[i * g.n + j] = c;
    g.a[j * g.n + i] = c;
    distribute(g, positions, k + 1, remaining - c, out);
  }
  g.a[i * g.n + j] = 0;
  g.a[j * g.n + i] = 0;
}

}  // namespace

std::vector<Multigraph> connected_multigraphs(std::size_t pieces, int max_edges) {
  std::vector<Multigraph> out;
  if (pieces == 0 || max_edges < 0) return out;
  Multigraph g{pieces, std::vector<int>(pieces * pieces, 0)};
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < pieces; ++i)
    for (std::size_t j = i; j < pieces; ++j) positions.emplace_back(i, j);
  distribute(g, positions, 0, max_edges, out);
  return out;
}

std::vector<std::vector<std::size_t>> automorphisms(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < g.n && ok; ++i)
      for (std::size_t j = 0; j < g.n && ok; ++j) ok = g.at(p[i], p[j]) == g.at(i, j);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Domain build_domain(const Multigraph& g, const std::vector<Decoration>& deco) {
  if (deco.size() != g.n) throw PreconditionError("decoration count does not match the piece count");
  std::vector<Piece> pieces(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    pieces[v].id = "P" + std::to_string(v);
    pieces[v].genus = deco[v].genus;
  }
  int edge = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i; j < g.n; ++j) {
      for (int c = 0; c < g.at(i, j); ++c) {
        const std::string id = "I" + std::to_string(edge++);
        pieces[i].slots.emplace_back(InterfaceSlot{id, EndMarker::Source});
        pieces[j].slots.emplace_back(InterfaceSlot{id, EndMarker::Target});
      }
    }
  }
  int binding = 0, boundary = 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    for (int b = 0; b < deco[v].bindings; ++b) pieces[v].slots.emplace_back(BindingSlot{"B" + std::to_string(binding++)});
    for (int t = 0; t < deco[v].boundary; ++t) pieces[v].slots.emplace_back(BoundarySlot{"T" + std::to_string(boundary++)});
  }
  return Domain(std::move(pieces));
}

namespace {

std::size_t visit_graph(const Multigraph& g, const Bounds& b, const std::function<void(const Domain&)>& visit) {
  std::vector<Decoration> alphabet;
  for (int genus = 0; genus <= b.max_genus; ++genus)
    for (int bind = 0; bind <= b.max_bindings; ++bind)
      for (int bd = 0; bd <= b.max_boundary; ++bd) alphabet.push_back({genus, bind, bd});

  auto autos = automorphisms(g);
  autos.erase(autos.begin());  // identity comes first

  std::vector<std::size_t> code(g.n, 0);
  std::vector<std::size_t> permuted(g.n);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t v = 0; v < g.n && ok; ++v) {
      const auto& d = alphabet[code[v]];
      ok = g.degree(v) + d.bindings + d.boundary >= 1;
    }
    for (const auto& p : autos) {
      if (!ok) break;
      for (std::size_t v = 0; v < g.n; ++v) permuted[v] = code[p[v]];
      ok = !(permuted < code);
    }
    if (ok) {
      std::vector<Decoration> deco(g.n);
      for (std::size_t v = 0; v < g.n; ++v) deco[v] = alphabet[code[v]];
      visit(build_domain(g, deco));
      ++count;
    }
    std::size_t v = g.n;
    while (v > 0 && code[v - 1] + 1 == alphabet.size()) code[--v] = 0;
    if (v == 0) break;
    ++code[v - 1];
  }
  return count;
}

}  // namespace

std::size_t for_each_domain(const Bounds& bounds, const std::function<void(const Domain&)>& visit, unsigned threads) {
  if (bounds.max_genus < 0 || bounds.max_bindings < 0 || bounds.max_boundary < 0) {
    throw PreconditionError("enumeration bounds must be non-negative");
  }
  std::vector<Multigraph> graphs;
  for (std::size_t n = 1; n <= bounds.max_pieces; ++n) {
    auto gs = connected_multigraphs(n, bounds.max_edges);
    graphs.insert(graphs.end(), std::make_move_iterator(gs.begin()), std::make_move_iterator(gs.end()));
  }
  if (threads <= 1) {
    std::size_t total = 0;
    for (const auto& g : graphs) total += visit_graph(g, bounds, visit);
    return total;
  }
  std::atomic<std::size_t> next{0}, total{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < graphs.size(); i = next++) total += visit_graph(graphs[i], bounds, visit);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = graphs.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::vector<Domain> all_domains(const Bounds& bounds) {
  std::vector<Domain> out;
  for_each_domain(bounds, [&](const Domain& d) { out.push_back(d); });
  return out;
}

}  // namespace ptorsion::enumerate
