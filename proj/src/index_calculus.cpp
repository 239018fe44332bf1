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

#include "ptorsion/index_calculus.hpp"

#include <stdexcept>

#include "ptorsion/checked.hpp"
#include "ptorsion/errors.hpp"

namespace ptorsion::index {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

void check_parity(const OrbitAsymptotics& o) {
  if (o.parity != 0 && o.parity != 1) {
    throw InvariantViolation("parity " + std::to_string(o.parity) + " is not 0 or 1 (degenerate operator)");
  }
}

void require_kind(const CurveData& u, ChernKind kind, const char* formula) {
  if (u.c1_kind != kind) {
    throw PreconditionError(std::string(formula) + " needs the " +
                            (kind == ChernKind::Tangent ? "tangent" : "normal") + " bundle relative Chern number");
  }
}

// sum_+ mu(gamma - eps) - sum_- mu(gamma -/+ eps)
std::int64_t cz_balance(const CurveData& u, bool constrained) {
  std::int64_t total = 0;
  for (const auto& o : u.positive) total = add(total, cz_index(o));
  for (const auto& o : u.negative) total = sub(total, constrained ? cz_index(o) : cz_index_shifted_up(o));
  return total;
}

std::int64_t cover_sum(const EchOrbit& o) {
  if (o.multiplicity < 1) throw InvariantViolation("orbit multiplicity must be at least 1");
  if (o.multiplicity > static_cast<std::int64_t>(o.cover_cz.size())) {
    throw PreconditionError("multiplicity " + std::to_string(o.multiplicity) + " exceeds the " +
                            std::to_string(o.cover_cz.size()) + " known cover indices");
  }
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < o.multiplicity; ++k) total = add(total, o.cover_cz[k]);
  return total;
}

}  // namespace

OrbitAsymptotics OrbitAsymptotics::shifted_up() const {
  if (!morse_bott) return *this;
  check_parity(*this);
  if (parity != 1) throw InvariantViolation("Morse-Bott orbit data at (gamma - eps) must have parity 1");
  return {alpha_minus, 0, true};
}

std::int64_t cz_index(const OrbitAsymptotics& o) {
  check_parity(o);
  return add(mul(2, o.alpha_minus), o.parity);
}

std::int64_t cz_index_shifted_up(const OrbitAsymptotics& o) { return cz_index(o.shifted_up()); }

std::int64_t CurveData::euler_characteristic() const {
  return sub(sub(2, mul(2, genus)), puncture_count());
}

std::vector<std::string> invariant_violations(const CurveData& u) {
  std::vector<std::string> out;
  if (u.genus < 0) out.push_back("genus is negative");
  if (u.delta < 0) out.push_back("delta is negative");
  if (u.delta_inf < 0) out.push_back("delta_inf is negative");
  if (u.sigma_bar < u.puncture_count()) out.push_back("sigma_bar is smaller than the number of punctures");
  for (const auto* ends : {&u.positive, &u.negative}) {
    for (const auto& o : *ends) {
      if (o.parity != 0 && o.parity != 1) {
        out.push_back("parity " + std::to_string(o.parity) + " is not 0 or 1");
      } else if (o.morse_bott && o.parity != 1) {
        out.push_back("Morse-Bott orbit data must have parity 1");
      }
    }
  }
  return out;
}

std::int64_t fredholm_index(const CurveData& u) {
  require_kind(u, ChernKind::Tangent, "fredholm_index");
  return add(add(-u.euler_characteristic(), mul(2, u.c1_rel)), cz_balance(u, false));
}

std::int64_t normal_riemann_roch(const CurveData& u) {
  require_kind(u, ChernKind::Normal, "normal_riemann_roch");
  return add(add(u.euler_characteristic(), mul(2, u.c1_rel)), cz_balance(u, false));
}

std::int64_t constrained_index(const CurveData& u) {
  require_kind(u, ChernKind::Tangent, "constrained_index");
  return add(add(-u.euler_characteristic(), mul(2, u.c1_rel)), cz_balance(u, true));
}

std::int64_t constrained_normal_chern(const CurveData& u) {
  require_kind(u, ChernKind::Tangent, "constrained_normal_chern");
  std::int64_t total = sub(u.c1_rel, u.euler_characteristic());
  for (const auto& o : u.positive) total = add(total, o.shifted_up().alpha_minus);
  for (const auto& o : u.negative) {
    check_parity(o);
    total = sub(total, o.alpha_plus());
  }
  return total;
}

std::int64_t adjunction_residual(const CurveData& u) {
  const std::int64_t cn = constrained_normal_chern(u);
  std::int64_t r = sub(u.self_intersection, mul(2, add(u.delta, u.delta_inf)));
  r = sub(r, cn);
  return sub(r, sub(u.sigma_bar, u.puncture_count()));
}

std::int64_t building_constrained_index(const std::vector<CurveData>& components, std::int64_t nodes) {
  if (nodes < 0) throw PreconditionError("node count must be nonnegative");
  std::int64_t total = mul(2, nodes);
  for (const auto& c : components) total = add(total, constrained_index(c));
  return total;
}

std::int64_t ech_index(const EchCurveData& u) {
  std::int64_t total = add(u.c1_rel, u.q_rel);
  for (const auto& o : u.positive) total = add(total, cover_sum(o));
  for (const auto& o : u.negative) total = sub(total, cover_sum(o));
  return total;
}

std::int64_t cover_index(std::int64_t k, std::int64_t ind_base, std::int64_t n_gamma2,
                         std::vector<std::string>* warnings) {
  if (k < 1) throw PreconditionError("cover degree must be at least 1");
  if (n_gamma2 < 0) throw PreconditionError("#Gamma_2 must be nonnegative");
  if (k > 2 && warnings) {
    warnings->push_back("cover degree " + std::to_string(k) + " > 2: formula is only derived for k in {1,2}");
  }
  return add(mul(k, ind_base), mul(mul(2, k - 1), sub(1, n_gamma2)));
}

std::int64_t ghost_tree_contribution(const GhostTree& t) {
  if (t.vertices < 1 || t.internal < 0 || t.external < 0) {
    throw InvariantViolation("ghost tree counts must be V >= 1, E_i >= 0, E_e >= 0");
  }
  if (t.vertices - t.internal != 1) throw InvariantViolation("ghost bubble graph is not a tree (V - E_i != 1)");
  if (add(mul(2, t.internal), t.external) < mul(3, t.vertices)) {
    throw InvariantViolation("unstable building: 2 E_i + E_e < 3 V");
  }
  const std::int64_t c = add(mul(-2, t.vertices), mul(2, add(t.internal, t.external)));
  if (c < 4) throw std::logic_error("ghost tree contribution below 4 for a stable tree");
  return c;
}

}  // namespace ptorsion::index
