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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ptorsion/cycle_space.hpp"
#include "ptorsion/domain.hpp"
#include "ptorsion/index_calculus.hpp"

namespace ptorsion::ech {

enum class OrbitKind { Elliptic, Hyperbolic };
enum class OrbitSource { BoundaryTorus, InteriorTorus, BindingCircle };

struct SimpleOrbit {
  std::string name;
  OrbitKind kind = OrbitKind::Elliptic;
  OrbitSource source = OrbitSource::BoundaryTorus;
  std::size_t index = 1;  // j for tori (1-based, model order), i for binding circles
  // cover_cz[k-1] = mu_CZ(k gamma)
  std::vector<std::int64_t> cover_cz;

  // ordering key: tori before binding circles, then index, elliptic first
  auto key() const { return std::tuple(source == OrbitSource::BindingCircle, index, kind); }
};

struct OrbitEntry {
  SimpleOrbit orbit;
  std::int64_t multiplicity = 1;
};

// A finite set of simple orbits with positive multiplicities.
class OrbitSet {
 public:
  OrbitSet() = default;

  // Adds `multiplicity` copies, merging with an existing entry.
  void add(const SimpleOrbit& orbit, std::int64_t multiplicity);
  // Removes copies; the entry disappears at multiplicity 0.
  void remove(const SimpleOrbit& orbit, std::int64_t multiplicity);

  const std::vector<OrbitEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t multiplicity_of(std::string_view name) const;
  std::string to_string() const;

  bool operator==(const OrbitSet& other) const;
  std::strong_ordering operator<=>(const OrbitSet& other) const;

 private:
  std::vector<OrbitEntry> entries_;
};

bool is_admissible(const OrbitSet& s);

// Relative class exponent: a formal integer combination of offset symbols
// (A_0, A_p, v_j^-) together with an absolute class in the cycle quotient.
struct Exponent {
  std::map<std::string, std::int64_t> offset;
  CycleClass cls;

  Exponent operator+(const Exponent& other) const;
  bool is_zero() const;
  std::string to_string() const;
  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;
};

enum class Coefficients { Untwisted, Twisted };

// Finitely supported Z-combination of exponents: an element of the group ring.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement monomial(Exponent e, std::int64_t coeff = 1);

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;
  GroupRingElement operator*(const GroupRingElement& other) const;

  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GroupRingElement&) const = default;

 private:
  void accumulate(const Exponent& e, std::int64_t coeff);
  std::map<Exponent, std::int64_t> terms_;
};

// Formal sum of terms e^A gamma over admissible orbit sets. In untwisted mode
// the class part of every exponent is reduced to zero; offset symbols stay.
class ChainElement {
 public:
  ChainElement(Coefficients mode, std::size_t class_rank);

  static ChainElement empty_set(Coefficients mode, std::size_t class_rank);  // e^0 ∅

  void add_term(const Exponent& e, const OrbitSet& orbits, std::int64_t coeff);
  void add(const GroupRingElement& coeff, const OrbitSet& orbits);
  ChainElement times(const GroupRingElement& g) const;

  Coefficients mode() const { return mode_; }
  std::size_t class_rank() const { return rank_; }

  struct Term {
    Exponent exponent;
    OrbitSet orbits;
    std::int64_t coeff;
  };
  std::vector<Term> terms() const;
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  bool operator==(const ChainElement& other) const;

 private:
  Exponent reduce(Exponent e) const;
  Coefficients mode_;
  std::size_t rank_;
  std::map<std::pair<Exponent, OrbitSet>, std::int64_t> terms_;
};

inline constexpr std::int64_t kDefaultCoverBound = 16;

// Nondegenerate perturbation of the Morse-Bott data of a planar piece: each
// torus T_j meeting the piece carries an elliptic orbit (CZ 1 for covers up to
// k0) and a hyperbolic orbit (CZ 0); binding circles stay elliptic with CZ 1.
struct PerturbedModel {
  std::string piece;
  std::size_t n = 0;  // boundary tori of the planar piece (non-self edges)
  std::size_t r = 0;  // interface tori inside it (self-edges)
  std::size_t m = 0;  // binding circles
  std::int64_t k0 = kDefaultCoverBound;

  std::vector<std::string> torus_edges;   // T_1..T_{n+r}
  std::vector<CycleClass> torus_classes;  // [T_j], oriented as boundary of the piece
  std::vector<std::string> bindings;      // beta_1..beta_m
  std::vector<SimpleOrbit> elliptic;      // gamma_j^e
  std::vector<SimpleOrbit> hyperbolic;    // gamma_j^h
  std::vector<SimpleOrbit> binding_orbits;
  std::size_t class_rank = 0;
};

// Requires `piece` to be a torsion witness: planar, non-empty padding, domain
// not symmetric. The error message names the failing condition.
PerturbedModel perturb(const Domain& d, std::string_view piece, std::int64_t k0 = kDefaultCoverBound);
// Only requires a planar piece; used for the U-map on partially planar domains.
PerturbedModel perturb_planar(const Domain& d, std::string_view piece, std::int64_t k0 = kDefaultCoverBound);

// gamma_0 with the hyperbolic orbit on boundary torus `hyperbolic_torus`
// (0-based, < n).
OrbitSet gamma0(const PerturbedModel& model, std::size_t hyperbolic_torus = 0);

// ∂(e^{A_0} gamma_0) = e^0 ∅ + sum_j c_j e^{A_0 + [v_j^-]} (e^{[T_j]} - 1) gamma_j
ChainElement differential_gamma0(const PerturbedModel& model, Coefficients mode, std::size_t hyperbolic_torus = 0);

struct InvariantReport {
  Coefficients mode;
  bool vanishes = false;
  ChainElement differential;
  std::vector<std::string> offending_tori;  // edge ids with [T_j] != 0
};

InvariantReport contact_invariant_vanishes(const PerturbedModel& model, bool twisted,
                                           std::size_t hyperbolic_torus = 0);

// gamma^(k). Throws PreconditionError if some multiplicity exceeds k0.
OrbitSet gamma_k(const PerturbedModel& model, std::int64_t k);
ChainElement differential_gamma_k(const PerturbedModel& model, std::int64_t k, Coefficients mode);
// U(e^{k A_p} gamma^(k)).
ChainElement u_map_step(const PerturbedModel& model, std::int64_t k, Coefficients mode);

struct TowerReport {
  std::int64_t d = 0;
  // levels[i] = e^{(d-i) A_p} gamma^(d-i); the last entry is e^0 ∅
  std::vector<ChainElement> levels;
  std::vector<bool> level_is_cycle;  // for levels d..1
  std::size_t steps = 0;
  bool reaches_empty = false;
  bool all_cycles = false;
};

TowerReport u_map_tower(const PerturbedModel& model, std::int64_t d, Coefficients mode);

// Rigid curves of the perturbed model with their index data: page curves
// (ind 2 with all elliptic ends, ind 1 with one hyperbolic end) and the
// gradient cylinders v_j^+-.
struct FlowLine {
  std::string label;
  index::CurveData curve;
  index::EchCurveData ech;
  std::int64_t expected_index = 0;
};

std::vector<FlowLine> flow_lines(const PerturbedModel& model);

}  // namespace ptorsion::ech
