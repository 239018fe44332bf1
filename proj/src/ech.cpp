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

#include "ptorsion/ech.hpp"

#include <algorithm>
#include <sstream>

#include "ptorsion/checked.hpp"
#include "ptorsion/errors.hpp"
#include "ptorsion/torsion.hpp"

namespace ptorsion::ech {

// --- orbit sets ----------------------------------------------------------

void OrbitSet::add(const SimpleOrbit& orbit, std::int64_t multiplicity) {
  if (multiplicity < 1) throw PreconditionError("orbit multiplicity must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), orbit.key(),
                             [](const OrbitEntry& e, const auto& key) { return e.orbit.key() < key; });
  if (it != entries_.end() && it->orbit.key() == orbit.key()) {
    it->multiplicity = checked::add(it->multiplicity, multiplicity);
  } else {
    entries_.insert(it, OrbitEntry{orbit, multiplicity});
  }
}

void OrbitSet::remove(const SimpleOrbit& orbit, std::int64_t multiplicity) {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const OrbitEntry& e) { return e.orbit.key() == orbit.key(); });
  if (it == entries_.end() || it->multiplicity < multiplicity) {
    throw PreconditionError("cannot remove " + std::to_string(multiplicity) + " copies of " + orbit.name);
  }
  it->multiplicity -= multiplicity;
  if (it->multiplicity == 0) entries_.erase(it);
}

std::int64_t OrbitSet::multiplicity_of(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.orbit.name == name) return e.multiplicity;
  return 0;
}

std::string OrbitSet::to_string() const {
  if (entries_.empty()) return "∅";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    os << (i ? "," : "") << '(' << entries_[i].orbit.name << ',' << entries_[i].multiplicity << ')';
  }
  os << '}';
  return os.str();
}

bool OrbitSet::operator==(const OrbitSet& other) const { return (*this <=> other) == std::strong_ordering::equal; }

std::strong_ordering OrbitSet::operator<=>(const OrbitSet& other) const {
  const std::size_t n = std::min(entries_.size(), other.entries_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = entries_[i].orbit.key() <=> other.entries_[i].orbit.key(); c != 0) return c;
    if (auto c = entries_[i].multiplicity <=> other.entries_[i].multiplicity; c != 0) return c;
  }
  return entries_.size() <=> other.entries_.size();
}

bool is_admissible(const OrbitSet& s) {
  return std::all_of(s.entries().begin(), s.entries().end(), [](const OrbitEntry& e) {
    return e.orbit.kind != OrbitKind::Hyperbolic || e.multiplicity == 1;
  });
}

// --- group ring ------------------------------------------------------------

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent out{offset, cls + other.cls};
  for (const auto& [sym, k] : other.offset) {
    auto& slot = out.offset[sym];
    slot = checked::add(slot, k);
    if (slot == 0) out.offset.erase(sym);
  }
  return out;
}

bool Exponent::is_zero() const { return offset.empty() && cls.is_zero(); }

std::string Exponent::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, k] : offset) {
    if (!first) os << (k < 0 ? "-" : "+");
    else if (k < 0) os << '-';
    const auto mag = k < 0 ? -k : k;
    if (mag != 1) os << mag;
    os << sym;
    first = false;
  }
  if (!cls.is_zero()) os << (first ? "" : "+") << "[" << cls.to_string() << "]";
  if (first && cls.is_zero()) os << '0';
  return os.str();
}

GroupRingElement GroupRingElement::monomial(Exponent e, std::int64_t coeff) {
  GroupRingElement g;
  g.accumulate(e, coeff);
  return g;
}

void GroupRingElement::accumulate(const Exponent& e, std::int64_t coeff) {
  if (coeff == 0) return;
  auto& slot = terms_[e];
  slot = checked::add(slot, coeff);
  if (slot == 0) terms_.erase(e);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  GroupRingElement out = *this;
  for (const auto& [e, c] : other.terms_) out.accumulate(e, c);
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
  GroupRingElement out = *this;
  for (const auto& [e, c] : other.terms_) out.accumulate(e, -c);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  GroupRingElement out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) out.accumulate(a + b, checked::mul(ca, cb));
  return out;
}

// --- chains ------------------------------------------------------------------

ChainElement::ChainElement(Coefficients mode, std::size_t class_rank) : mode_(mode), rank_(class_rank) {}

ChainElement ChainElement::empty_set(Coefficients mode, std::size_t class_rank) {
  ChainElement c(mode, class_rank);
  c.add_term(Exponent{{}, CycleClass::zero(class_rank)}, OrbitSet{}, 1);
  return c;
}

Exponent ChainElement::reduce(Exponent e) const {
  if (e.cls.rank() != rank_) throw PreconditionError("exponent class has the wrong rank");
  if (mode_ == Coefficients::Untwisted) e.cls = CycleClass::zero(rank_);
  return e;
}

void ChainElement::add_term(const Exponent& e, const OrbitSet& orbits, std::int64_t coeff) {
  if (!is_admissible(orbits)) throw InvariantViolation("chain generator " + orbits.to_string() + " is not admissible");
  if (coeff == 0) return;
  const auto key = std::make_pair(reduce(e), orbits);
  auto& slot = terms_[key];
  slot = checked::add(slot, coeff);
  if (slot == 0) terms_.erase(key);
}

void ChainElement::add(const GroupRingElement& coeff, const OrbitSet& orbits) {
  for (const auto& [e, c] : coeff.terms()) add_term(e, orbits, c);
}

ChainElement ChainElement::times(const GroupRingElement& g) const {
  ChainElement out(mode_, rank_);
  for (const auto& [key, c] : terms_) {
    for (const auto& [e, cg] : g.terms()) out.add_term(key.first + e, key.second, checked::mul(c, cg));
  }
  return out;
}

std::vector<ChainElement::Term> ChainElement::terms() const {
  std::vector<Term> out;
  for (const auto& [key, c] : terms_) out.push_back(Term{key.first, key.second, c});
  return out;
}

std::string ChainElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "·";
    os << "e^{" << key.first.to_string() << "}" << key.second.to_string();
    first = false;
  }
  return os.str();
}

bool ChainElement::operator==(const ChainElement& other) const {
  return mode_ == other.mode_ && rank_ == other.rank_ && terms_ == other.terms_;
}

// --- perturbed model -------------------------------------------------------

namespace {

SimpleOrbit make_orbit(std::string name, OrbitKind kind, OrbitSource source, std::size_t index,
                       std::int64_t k0) {
  SimpleOrbit o{std::move(name), kind, source, index, {}};
  if (kind == OrbitKind::Elliptic) {
    o.cover_cz.assign(static_cast<std::size_t>(k0), 1);
  } else {
    o.cover_cz.assign(1, 0);
  }
  return o;
}

PerturbedModel build_model(const Domain& d, std::string_view piece_id, std::int64_t k0) {
  if (k0 < 1) throw PreconditionError("cover bound k0 must be at least 1");
  const std::size_t v = d.piece_index(piece_id);
  const Piece& piece = d.pieces()[v];
  if (piece.genus != 0) throw PreconditionError("piece '" + piece.id + "' is not planar: genus is positive");
  if (piece.boundary_count()) {
    throw PreconditionError("piece '" + piece.id + "' is not planar: it touches the boundary of M");
  }

  const auto g = piece_graph_unchecked(d);
  const CycleSpace cs(g);
  PerturbedModel model;
  model.piece = piece.id;
  model.k0 = k0;
  model.class_rank = cs.rank();

  std::vector<std::size_t> boundary_edges, interior_edges;
  for (const auto& s : piece.slots) {
    if (const auto* b = std::get_if<BindingSlot>(&s)) {
      model.bindings.push_back(b->name);
      continue;
    }
    const auto& f = std::get<InterfaceSlot>(s);
    const std::size_t e = g.edge_index(f.edge);
    if (g.edges[e].is_self_edge()) {
      // one entry per self-edge, taken at its source end
      if (f.end == EndMarker::Source) interior_edges.push_back(e);
    } else {
      boundary_edges.push_back(e);
    }
  }
  model.n = boundary_edges.size();
  model.r = interior_edges.size();
  model.m = model.bindings.size();

  std::size_t j = 1;
  for (auto list : {&boundary_edges, &interior_edges}) {
    for (auto e : *list) {
      model.torus_edges.push_back(g.edges[e].id);
      // orient [T_j] as part of the boundary of the piece: +1 at source ends
      const bool source_here = g.edges[e].source == v;
      model.torus_classes.push_back(source_here ? cs.edge_class(e) : -cs.edge_class(e));
      const auto src = list == &boundary_edges ? OrbitSource::BoundaryTorus : OrbitSource::InteriorTorus;
      model.elliptic.push_back(
          make_orbit("gamma_" + std::to_string(j) + "^e", OrbitKind::Elliptic, src, j, k0));
      model.hyperbolic.push_back(
          make_orbit("gamma_" + std::to_string(j) + "^h", OrbitKind::Hyperbolic, src, j, k0));
      ++j;
    }
  }
  for (std::size_t i = 1; i <= model.m; ++i) {
    model.binding_orbits.push_back(
        make_orbit("beta_" + std::to_string(i), OrbitKind::Elliptic, OrbitSource::BindingCircle, i, k0));
  }
  return model;
}

Exponent offset(std::size_t rank, std::initializer_list<std::pair<std::string, std::int64_t>> syms) {
  Exponent e{{}, CycleClass::zero(rank)};
  for (const auto& [s, k] : syms)
    if (k != 0) e.offset[s] = k;
  return e;
}

// c · e^{base} (e^{[T]} - 1)
GroupRingElement twisted_difference(const Exponent& base, const CycleClass& torus, std::int64_t c) {
  return GroupRingElement::monomial(base + Exponent{{}, torus}, c) - GroupRingElement::monomial(base, c);
}

std::string v_minus(std::size_t j) { return "[v_" + std::to_string(j) + "^-]"; }

}  // namespace

PerturbedModel perturb(const Domain& d, std::string_view piece, std::int64_t k0) {
  require_valid(d);
  const Piece& p = d.piece(piece);
  if (p.genus != 0 || p.boundary_count()) {
    throw PreconditionError("no torsion witness: piece '" + p.id + "' is not a planar piece");
  }
  if (d.pieces().size() < 2) throw PreconditionError("no torsion witness: the padding is empty");
  if (detail::is_symmetric_unchecked(d)) throw PreconditionError("no torsion witness: the summed open book is symmetric");
  auto model = build_model(d, piece, k0);
  if (model.n == 0) {
    throw PreconditionError("no torsion witness: piece '" + p.id + "' does not meet the padding");
  }
  return model;
}

PerturbedModel perturb_planar(const Domain& d, std::string_view piece, std::int64_t k0) {
  require_valid(d);
  return build_model(d, piece, k0);
}

OrbitSet gamma0(const PerturbedModel& model, std::size_t hyperbolic_torus) {
  if (model.n == 0) throw PreconditionError("gamma_0 needs at least one boundary torus (n >= 1)");
  if (hyperbolic_torus >= model.n) throw PreconditionError("hyperbolic torus index out of range");
  OrbitSet s;
  for (std::size_t j = 0; j < model.n; ++j) {
    s.add(j == hyperbolic_torus ? model.hyperbolic[j] : model.elliptic[j], 1);
  }
  for (std::size_t j = model.n; j < model.n + model.r; ++j) s.add(model.elliptic[j], 2);
  for (const auto& b : model.binding_orbits) s.add(b, 1);
  return s;
}

ChainElement differential_gamma0(const PerturbedModel& model, Coefficients mode, std::size_t hyperbolic_torus) {
  const OrbitSet g0 = gamma0(model, hyperbolic_torus);
  ChainElement out = ChainElement::empty_set(mode, model.class_rank);
  for (std::size_t j = 0; j < model.n + model.r; ++j) {
    if (j == hyperbolic_torus) continue;
    const bool interior = j >= model.n;
    OrbitSet gj = g0;
    gj.remove(model.elliptic[j], 1);
    gj.add(model.hyperbolic[j], 1);
    const Exponent base = offset(model.class_rank, {{"A_0", 1}, {v_minus(j + 1), 1}});
    out.add(twisted_difference(base, model.torus_classes[j], interior ? 2 : 1), gj);
  }
  return out;
}

InvariantReport contact_invariant_vanishes(const PerturbedModel& model, bool twisted, std::size_t hyperbolic_torus) {
  const auto mode = twisted ? Coefficients::Twisted : Coefficients::Untwisted;
  InvariantReport report{mode, false, differential_gamma0(model, mode, hyperbolic_torus), {}};
  report.vanishes = report.differential == ChainElement::empty_set(mode, model.class_rank);
  if (twisted) {
    for (std::size_t j = 0; j < model.n + model.r; ++j) {
      if (j != hyperbolic_torus && !model.torus_classes[j].is_zero()) report.offending_tori.push_back(model.torus_edges[j]);
    }
  }
  return report;
}

OrbitSet gamma_k(const PerturbedModel& model, std::int64_t k) {
  if (k < 1) throw PreconditionError("gamma^(k) needs k >= 1");
  const std::int64_t top = model.r > 0 ? checked::mul(2, k) : k;
  if (top > model.k0) {
    throw PreconditionError("gamma^(" + std::to_string(k) + ") needs cover indices up to multiplicity " +
                            std::to_string(top) + " but k0 = " + std::to_string(model.k0));
  }
  OrbitSet s;
  for (std::size_t j = 0; j < model.n; ++j) s.add(model.elliptic[j], k);
  for (std::size_t j = model.n; j < model.n + model.r; ++j) s.add(model.elliptic[j], 2 * k);
  for (const auto& b : model.binding_orbits) s.add(b, k);
  return s;
}

ChainElement differential_gamma_k(const PerturbedModel& model, std::int64_t k, Coefficients mode) {
  const OrbitSet gk = gamma_k(model, k);
  ChainElement out(mode, model.class_rank);
  for (std::size_t j = 0; j < model.n + model.r; ++j) {
    const std::int64_t mult = gk.multiplicity_of(model.elliptic[j].name);
    OrbitSet gj = gk;
    gj.remove(model.elliptic[j], 1);
    gj.add(model.hyperbolic[j], 1);
    const Exponent base = offset(model.class_rank, {{"A_p", k}, {v_minus(j + 1), 1}});
    out.add(twisted_difference(base, model.torus_classes[j], mult), gj);
  }
  return out;
}

ChainElement u_map_step(const PerturbedModel& model, std::int64_t k, Coefficients mode) {
  (void)gamma_k(model, k);  // precondition on k
  if (k == 1) return ChainElement::empty_set(mode, model.class_rank);
  ChainElement out(mode, model.class_rank);
  out.add_term(offset(model.class_rank, {{"A_p", k - 1}}), gamma_k(model, k - 1), 1);
  return out;
}

TowerReport u_map_tower(const PerturbedModel& model, std::int64_t d, Coefficients mode) {
  if (d < 1) throw PreconditionError("U-map tower needs d >= 1");
  (void)gamma_k(model, d);  // k0 bound

  TowerReport report;
  report.d = d;
  ChainElement current(mode, model.class_rank);
  current.add_term(offset(model.class_rank, {{"A_p", d}}), gamma_k(model, d), 1);
  report.levels.push_back(current);
  report.all_cycles = true;
  for (std::int64_t k = d; k >= 1; --k) {
    const bool cycle = differential_gamma_k(model, k, mode).is_zero();
    report.level_is_cycle.push_back(cycle);
    report.all_cycles = report.all_cycles && cycle;
    current = u_map_step(model, k, mode);
    report.levels.push_back(current);
    ++report.steps;
  }
  report.reaches_empty = current == ChainElement::empty_set(mode, model.class_rank);
  return report;
}

// --- flow-line index data ----------------------------------------------------

std::vector<FlowLine> flow_lines(const PerturbedModel& model) {
  using index::ChernKind;
  using index::OrbitAsymptotics;
  const auto elliptic = OrbitAsymptotics::nondegenerate(0, 1);
  const auto hyperbolic = OrbitAsymptotics::nondegenerate(0, 0);
  const std::vector<std::int64_t> elliptic_covers(static_cast<std::size_t>(model.k0), 1);
  const std::vector<std::int64_t> hyperbolic_covers{0};

  std::vector<FlowLine> out;
  const std::size_t tori = model.n + model.r;
  // page curves: choice == tori means every torus end is elliptic
  for (std::size_t choice = 0; choice <= tori; ++choice) {
    FlowLine f;
    f.label = choice == tori ? "page curve (all elliptic)"
                             : "page curve (hyperbolic end at T_" + std::to_string(choice + 1) + ")";
    for (std::size_t j = 0; j < tori; ++j) {
      const bool interior = j >= model.n;
      const bool hyp = j == choice;
      f.curve.positive.push_back(hyp ? hyperbolic : elliptic);
      if (interior) f.curve.positive.push_back(elliptic);
      if (hyp) {
        f.ech.positive.push_back({hyperbolic_covers, 1});
        if (interior) f.ech.positive.push_back({elliptic_covers, 1});
      } else {
        f.ech.positive.push_back({elliptic_covers, interior ? 2 : 1});
      }
    }
    for (std::size_t i = 0; i < model.m; ++i) {
      f.curve.positive.push_back(elliptic);
      f.ech.positive.push_back({elliptic_covers, 1});
    }
    const std::int64_t punctures = f.curve.puncture_count();
    f.curve.genus = 0;
    f.curve.c1_kind = ChernKind::Tangent;
    f.curve.c1_rel = 2 - punctures;  // c_N = c_1 - chi = 0
    f.curve.sigma_bar = punctures;
    f.ech.c1_rel = 2 - punctures;
    f.ech.q_rel = 0;
    f.expected_index = choice == tori ? 2 : 1;
    out.push_back(std::move(f));
  }
  // gradient cylinders from gamma_j^e down to gamma_j^h
  for (std::size_t j = 0; j < tori; ++j) {
    for (const char* side : {"+", "-"}) {
      FlowLine f;
      f.label = std::string("cylinder v_") + std::to_string(j + 1) + "^" + side;
      f.curve.positive = {elliptic};
      f.curve.negative = {hyperbolic};
      f.curve.c1_kind = ChernKind::Tangent;
      f.curve.sigma_bar = 2;
      f.ech.positive.push_back({elliptic_covers, 1});
      f.ech.negative.push_back({hyperbolic_covers, 1});
      f.expected_index = 1;
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace ptorsion::ech
