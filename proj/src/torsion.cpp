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

#include "ptorsion/torsion.hpp"

#include <algorithm>

#include "ptorsion/errors.hpp"

namespace ptorsion {

namespace {

bool is_planar(const Piece& p) { return p.genus == 0 && p.boundary_count() == 0; }


bool fully_separating_at(const Domain& d, const PieceGraph& g, const CycleSpace& cs, std::size_t v) {
  (void)d;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ge = g.edges[e];
    if (ge.source != v && ge.target != v) continue;
    if (ge.is_self_edge()) return false;
    if (!cs.edge_class(e).is_zero()) return false;
  }
  return true;
}

std::size_t planar_piece_index(const Domain& d, std::string_view piece) {
  const std::size_t v = d.piece_index(piece);
  if (!is_planar(d.pieces()[v])) {
    throw PreconditionError("piece '" + std::string(piece) + "' is not a planar piece");
  }
  return v;
}

}  // namespace

bool is_symmetric(const Domain& d) {
  require_valid(d);
  return detail::is_symmetric_unchecked(d);
}

bool detail::is_symmetric_unchecked(const Domain& d) {
  const auto& ps = d.pieces();
  if (ps.size() != 2) return false;
  for (const auto& p : ps) {
    if (p.binding_count() || p.boundary_count()) return false;
  }
  for (const auto& e : d.edges()) {
    if (e.is_self_edge()) return false;
  }
  return ps[0].genus == ps[1].genus && ps[0].slots.size() == ps[1].slots.size();
}

std::vector<std::string> planar_pieces(const Domain& d) {
  require_valid(d);
  std::vector<std::string> out;
  for (const auto& p : d.pieces())
    if (is_planar(p)) out.push_back(p.id);
  return out;
}

namespace {

// The planar piece meets the rest of M along at least one torus.
bool touches_padding(const PieceGraph& g, std::size_t v) {
  return std::any_of(g.edges.begin(), g.edges.end(), [v](const PieceGraph::GraphEdge& e) {
    return e.source != e.target && (e.source == v || e.target == v);
  });
}

}  // namespace

TorsionReport planar_torsion_order(const Domain& d) {
  require_valid(d);
  TorsionReport report;
  const auto g = piece_graph_unchecked(d);
  const CycleSpace cs(g);
  const auto& ps = d.pieces();

  report.symmetric = detail::is_symmetric_unchecked(d);
  for (std::size_t v = 0; v < ps.size(); ++v) {
    if (!is_planar(ps[v])) continue;
    report.partially_planar = true;
    if (report.symmetric || ps.size() < 2 || !touches_padding(g, v)) continue;
    report.candidates.push_back(TorsionCandidate{ps[v].id, static_cast<int>(ps[v].slots.size()) - 1,
                                                 fully_separating_at(d, g, cs, v)});
  }

  const TorsionCandidate* best = nullptr;
  for (const auto& c : report.candidates) {
    if (!best || c.order < best->order || (c.order == best->order && c.fully_separating && !best->fully_separating)) {
      best = &c;
    }
  }
  if (best) {
    report.order = best->order;
    report.witness = best->piece;
    report.fully_separating = best->fully_separating;
  }
  return report;
}

CycleClass torus_h2_class(const Domain& d, std::string_view edge) {
  const auto g = piece_graph(d);
  const std::size_t e = g.edge_index(edge);
  return CycleSpace(g).edge_class(e);
}

bool torus_separates(const Domain& d, std::string_view edge) { return torus_h2_class(d, edge).is_zero(); }

bool is_fully_separating(const Domain& d, std::string_view piece) {
  require_valid(d);
  const std::size_t v = planar_piece_index(d, piece);
  const auto g = piece_graph(d);
  return fully_separating_at(d, g, CycleSpace(g), v);
}

bool is_omega_separating(const Domain& d, std::string_view piece, const CycleFunctional& omega) {
  require_valid(d);
  const std::size_t v = planar_piece_index(d, piece);
  const auto g = piece_graph(d);
  const CycleSpace cs(g);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].source != v && g.edges[e].target != v) continue;
    if (omega(cs.edge_class(e)) != 0) return false;
  }
  return true;
}

std::string_view to_string(ClosedClass c) {
  switch (c) {
    case ClosedClass::TorsionDomain: return "torsion domain";
    case ClosedClass::PlanarOpenBook: return "planar open book";
    case ClosedClass::SymmetricDiskPages: return "symmetric-with-disk-pages";
    case ClosedClass::NotApplicable: return "not applicable";
  }
  return "not applicable";
}

ClosedClass classify_closed(const Domain& d) {
  const auto report = validate(d);
  if (!report.ok() || report.components.size() != 1) return ClosedClass::NotApplicable;
  const auto& ps = d.pieces();
  for (const auto& p : ps)
    if (p.boundary_count()) return ClosedClass::NotApplicable;

  const auto g = piece_graph(d);
  const CycleSpace cs(g);
  bool has_fully_separating = false;
  for (std::size_t v = 0; v < ps.size(); ++v) {
    if (is_planar(ps[v]) && fully_separating_at(d, g, cs, v)) has_fully_separating = true;
  }
  if (!has_fully_separating) return ClosedClass::NotApplicable;

  if (ps.size() == 1) {
    // no self-edges (fully separating) and no boundary: an ordinary open book
    return ClosedClass::PlanarOpenBook;
  }
  if (!is_symmetric(d)) return ClosedClass::TorsionDomain;
  // symmetric and fully separating: a single bridge between two genus-0 pieces
  if (g.edges.size() == 1 && ps[0].genus == 0 && ps[1].genus == 0) return ClosedClass::SymmetricDiskPages;
  throw InvariantViolation("closed-case trichotomy failed; this indicates an inconsistent domain");
}

std::string_view to_string(GirouxVerdict v) {
  return v == GirouxVerdict::NoGirouxTorsion ? "NoGirouxTorsion" : "Inconclusive";
}

GirouxVerdict giroux_torsion_obstruction(const Domain& d) {
  require_valid(d);
  if (!d.s1_signs()) throw PreconditionError("Giroux torsion check requires an S^1-invariant certificate");
  for (const auto& p : d.pieces()) {
    if (p.boundary_count()) throw PreconditionError("Giroux torsion check requires a domain without boundary");
    if (p.binding_count()) throw PreconditionError("an S^1-invariant domain has empty binding");
  }
  for (const auto& p : d.pieces()) {
    if (p.genus != 0) continue;
    if (p.slots.size() == 1) return GirouxVerdict::Inconclusive;
    if (p.slots.size() == 2) {
      const auto& a = std::get<InterfaceSlot>(p.slots[0]);
      const auto& b = std::get<InterfaceSlot>(p.slots[1]);
      if (a.edge != b.edge) return GirouxVerdict::Inconclusive;
    }
  }
  return GirouxVerdict::NoGirouxTorsion;
}

std::optional<int> pt_upper_bound(const Domain& d) { return planar_torsion_order(d).order; }

}  // namespace ptorsion
