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

#include <cstdint>
#include <string>
#include <vector>

namespace ptorsion::index {

// Winding data of the perturbed asymptotic operator A - eps at one orbit.
//
// For a simple orbit in a Morse-Bott torus the normal form is
// (alpha_minus, parity) = (0, 1) at (gamma - eps); at (gamma + eps) the
// kernel eigenvalue moves to the positive side, so alpha_minus is unchanged
// and the parity becomes 0. Nondegenerate orbits are unaffected by the shift.
struct OrbitAsymptotics {
  std::int64_t alpha_minus = 0;
  int parity = 1;
  bool morse_bott = false;

  static OrbitAsymptotics morse_bott_simple() { return {0, 1, true}; }
  static OrbitAsymptotics nondegenerate(std::int64_t alpha_minus, int parity) {
    return {alpha_minus, parity, false};
  }

  std::int64_t alpha_plus() const { return alpha_minus + parity; }
  // Winding data at (gamma + eps).
  OrbitAsymptotics shifted_up() const;

  bool operator==(const OrbitAsymptotics&) const = default;
};

// mu_CZ(gamma - eps) = 2 alpha_minus + p. Throws InvariantViolation if the
// parity is not 0 or 1.
std::int64_t cz_index(const OrbitAsymptotics& o);
// mu_CZ(gamma + eps).
std::int64_t cz_index_shifted_up(const OrbitAsymptotics& o);

enum class ChernKind { Tangent, Normal };

struct CurveData {
  int genus = 0;
  std::vector<OrbitAsymptotics> positive;
  std::vector<OrbitAsymptotics> negative;
  std::int64_t c1_rel = 0;
  ChernKind c1_kind = ChernKind::Tangent;
  std::int64_t self_intersection = 0;  // u * u
  std::int64_t delta = 0;
  std::int64_t delta_inf = 0;
  std::int64_t sigma_bar = 0;

  std::int64_t puncture_count() const { return static_cast<std::int64_t>(positive.size() + negative.size()); }
  std::int64_t euler_characteristic() const;  // of the punctured domain
};

// Empty iff the record satisfies genus >= 0, delta, delta_inf >= 0,
// sigma_bar >= #Gamma and every parity in {0, 1}.
std::vector<std::string> invariant_violations(const CurveData& u);

std::int64_t fredholm_index(const CurveData& u);
std::int64_t normal_riemann_roch(const CurveData& u);
// Like fredholm_index but with mu_CZ(gamma - eps) at the negative ends too,
// i.e. all Morse-Bott orbits at negative ends held fixed.
std::int64_t constrained_index(const CurveData& u);
std::int64_t constrained_normal_chern(const CurveData& u);
// u*u - 2(delta + delta_inf) - c_N - (sigma_bar - #Gamma); zero iff the data
// satisfy the punctured adjunction formula.
std::int64_t adjunction_residual(const CurveData& u);

// Constrained index of a nodal building: sum over components plus 2 per node.
std::int64_t building_constrained_index(const std::vector<CurveData>& components, std::int64_t nodes);

struct EchOrbit {
  // cover_cz[k-1] = mu_CZ(k gamma)
  std::vector<std::int64_t> cover_cz;
  std::int64_t multiplicity = 1;
};

struct EchCurveData {
  std::int64_t c1_rel = 0;
  std::int64_t q_rel = 0;
  std::vector<EchOrbit> positive;
  std::vector<EchOrbit> negative;
};

std::int64_t ech_index(const EchCurveData& u);

// ind(v) = k ind(v') + 2(k - 1)(1 - #Gamma_2) for a k-fold cover v of v'.
// The formula is derived for k in {1, 2}; larger k append a note to
// `warnings` when given.
std::int64_t cover_index(std::int64_t k, std::int64_t ind_base, std::int64_t n_gamma2,
                         std::vector<std::string>* warnings = nullptr);

struct GhostTree {
  std::int64_t vertices = 1;  // ghost bubbles
  std::int64_t internal = 0;  // ghost nodes between ghost bubbles
  std::int64_t external = 0;  // ghost nodes to nonconstant components
};

// -2V + 2(E_i + E_e). Throws InvariantViolation unless the tree is a tree
// (V - E_i = 1) and stable (2E_i + E_e >= 3V); the result is then >= 4.
std::int64_t ghost_tree_contribution(const GhostTree& t);

}  // namespace ptorsion::index
