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

#include <gtest/gtest.h>

#include "ptorsion/errors.hpp"
#include "ptorsion/index_calculus.hpp"

namespace ptorsion::index {
namespace {

const auto kMB = OrbitAsymptotics::morse_bott_simple();
const auto kElliptic = OrbitAsymptotics::nondegenerate(0, 1);
const auto kHyperbolic = OrbitAsymptotics::nondegenerate(0, 0);

CurveData curve(int genus, std::vector<OrbitAsymptotics> pos, std::vector<OrbitAsymptotics> neg, std::int64_t c1,
                ChernKind kind = ChernKind::Tangent) {
  CurveData u;
  u.genus = genus;
  u.positive = std::move(pos);
  u.negative = std::move(neg);
  u.c1_rel = c1;
  u.c1_kind = kind;
  u.sigma_bar = u.puncture_count();
  return u;
}

TEST(ConleyZehnder, WindingForm) {
  EXPECT_EQ(cz_index(kMB), 1);
  EXPECT_EQ(cz_index(kHyperbolic), 0);
  EXPECT_EQ(cz_index(OrbitAsymptotics::nondegenerate(-1, 1)), -1);
  EXPECT_THROW(cz_index(OrbitAsymptotics::nondegenerate(0, 2)), InvariantViolation);
  for (std::int64_t a = -5; a <= 5; ++a) {
    for (int p = 0; p <= 1; ++p) {
      const auto o = OrbitAsymptotics::nondegenerate(a, p);
      EXPECT_EQ(cz_index(o), 2 * o.alpha_plus() - p);
    }
  }
}

TEST(ConleyZehnder, MorseBottShift) {
  EXPECT_EQ(cz_index_shifted_up(kMB), 0);
  EXPECT_EQ(kMB.shifted_up().alpha_minus, 0);
  EXPECT_EQ(kMB.shifted_up().parity, 0);
  EXPECT_EQ(cz_index_shifted_up(kElliptic), 1);
}

TEST(Fredholm, Examples) {
  EXPECT_EQ(fredholm_index(curve(0, {kMB, kMB, kMB}, {}, -1)), 2);
  EXPECT_EQ(fredholm_index(curve(0, {kElliptic}, {kElliptic}, 0)), 0);
  // genus one with two ends: the tangent c1 equal to chi = -2 gives 2 - 2g
  EXPECT_EQ(fredholm_index(curve(1, {kMB, kMB}, {}, -2)), 0);
  EXPECT_THROW(fredholm_index(curve(0, {kMB}, {}, 0, ChernKind::Normal)), PreconditionError);
}

TEST(Fredholm, MorseBottTrivialCylinder) {
  const auto u = curve(0, {kMB}, {kMB}, 0);
  EXPECT_EQ(fredholm_index(u), 1);
  EXPECT_EQ(constrained_index(u), 0);
}

TEST(NormalRiemannRoch, PagesHaveIndexTwoMinusTwoG) {
  for (int g = 0; g <= 3; ++g) {
    for (int p = 1; p <= 6; ++p) {
      EXPECT_EQ(normal_riemann_roch(curve(g, std::vector<OrbitAsymptotics>(p, kMB), {}, 0, ChernKind::Normal)),
                2 - 2 * g);
    }
  }
  EXPECT_EQ(normal_riemann_roch(curve(0, {kMB, kMB, kMB}, {}, 0, ChernKind::Normal)), 2);
  EXPECT_EQ(normal_riemann_roch(curve(2, {kMB}, {}, 0, ChernKind::Normal)), -2);
  EXPECT_THROW(normal_riemann_roch(curve(0, {kMB}, {}, 0)), PreconditionError);
}

TEST(Constrained, Connectors) {
  EXPECT_EQ(constrained_index(curve(0, {kMB}, {kMB, kMB}, 0)), 0);
  EXPECT_EQ(constrained_index(curve(0, {kMB, kMB}, {kMB}, 0)), 2);
}

TEST(Constrained, AdditiveOverBuildings) {
  const auto a = curve(0, {kMB, kMB}, {kMB}, 0);
  const auto b = curve(1, {kMB}, {kMB, kMB}, -1);
  const auto trivial = curve(0, {kMB}, {kMB}, 0);
  for (std::int64_t nodes = 0; nodes <= 3; ++nodes) {
    EXPECT_EQ(building_constrained_index({a, b, trivial}, nodes),
              constrained_index(a) + constrained_index(b) + 2 * nodes);
  }
}

TEST(NormalChern, WorkedValues) {
  // index-zero curve with positive simple Morse-Bott ends
  for (int p = 1; p <= 5; ++p) {
    const auto u = curve(0, std::vector<OrbitAsymptotics>(p, kMB), {}, 1 - p);
    ASSERT_EQ(fredholm_index(u), 0);
    EXPECT_EQ(constrained_normal_chern(u), -1);
    EXPECT_EQ(adjunction_residual(u), 1);
  }
  // perturbed page curve
  for (int p = 1; p <= 5; ++p) {
    EXPECT_EQ(constrained_normal_chern(curve(0, std::vector<OrbitAsymptotics>(p, kElliptic), {}, 2 - p)), 0);
  }
  const auto closed = curve(2, {}, {}, 7);
  EXPECT_EQ(constrained_normal_chern(closed), 7 - (2 - 4));
}

TEST(Adjunction, Residuals) {
  EXPECT_EQ(adjunction_residual(curve(0, {kElliptic, kElliptic, kElliptic}, {}, -1)), 0);
  EXPECT_EQ(adjunction_residual(curve(0, {}, {}, 0)), 2);
  auto u = curve(0, {kMB, kMB}, {}, -1);
  u.self_intersection = 3;
  u.delta = 1;
  u.delta_inf = 0;
  u.sigma_bar = 4;
  EXPECT_EQ(adjunction_residual(u), 3 - 2 - constrained_normal_chern(u) - 2);
}

// With sigma_bar = #Gamma and even c_N the residual is even.
TEST(Adjunction, ParityBookkeeping) {
  for (int g = 0; g <= 2; ++g) {
    for (int p = 0; p <= 4; ++p) {
      for (std::int64_t c1 = -4; c1 <= 4; ++c1) {
        for (std::int64_t uu = -3; uu <= 3; ++uu) {
          auto u = curve(g, std::vector<OrbitAsymptotics>(p, kMB), {}, c1);
          u.self_intersection = uu;
          if (constrained_normal_chern(u) % 2 != 0 || uu % 2 != 0) continue;
          EXPECT_EQ(adjunction_residual(u) % 2, 0);
        }
      }
    }
  }
}

TEST(Invariants, Violations) {
  auto u = curve(0, {kMB}, {}, 0);
  EXPECT_TRUE(invariant_violations(u).empty());
  u.sigma_bar = 0;
  u.delta = -1;
  EXPECT_EQ(invariant_violations(u).size(), 2u);
  u = curve(-1, {OrbitAsymptotics::nondegenerate(0, 3)}, {}, 0);
  EXPECT_EQ(invariant_violations(u).size(), 2u);
}

TEST(EchIndex, Examples) {
  for (int p = 1; p <= 6; ++p) {
    EchCurveData u;
    u.c1_rel = 2 - p;
    u.positive.assign(p, EchOrbit{{1}, 1});
    EXPECT_EQ(ech_index(u), 2);
    EXPECT_EQ(ech_index(u), fredholm_index(curve(0, std::vector<OrbitAsymptotics>(p, kElliptic), {}, 2 - p)));
    auto h = u;
    h.positive[0] = EchOrbit{{0}, 1};
    EXPECT_EQ(ech_index(h), 1);
  }
  EXPECT_EQ(ech_index(EchCurveData{}), 0);
  EchCurveData bad;
  bad.positive = {EchOrbit{{1, 1}, 3}};
  EXPECT_THROW(ech_index(bad), PreconditionError);
  EchCurveData covers;
  covers.c1_rel = 1;
  covers.q_rel = 2;
  covers.positive = {EchOrbit{{1, 3, 5}, 3}};
  covers.negative = {EchOrbit{{1, 1}, 2}};
  EXPECT_EQ(ech_index(covers), 1 + 2 + 9 - 2);
}

// With Q = 0, simple ends and every CZ equal to 1, I and ind differ by
// c1 - chi; they agree on the genus-zero data with c1 = chi (c_N = 0).
TEST(EchIndex, AgreesWithFredholmOnSimpleData) {
  for (int np = 0; np <= 4; ++np) {
    for (int nn = 0; nn <= 3; ++nn) {
      for (std::int64_t c1 = -3; c1 <= 3; ++c1) {
        EchCurveData e;
        e.c1_rel = c1;
        e.positive.assign(np, EchOrbit{{1}, 1});
        e.negative.assign(nn, EchOrbit{{1}, 1});
        const auto u = curve(0, std::vector<OrbitAsymptotics>(np, kElliptic),
                             std::vector<OrbitAsymptotics>(nn, kElliptic), c1);
        EXPECT_EQ(fredholm_index(u) - ech_index(e), c1 - u.euler_characteristic());
        if (c1 == u.euler_characteristic()) {
          EXPECT_EQ(ech_index(e), fredholm_index(u));
        }
      }
    }
  }
}

TEST(CoverIndex, Formula) {
  EXPECT_EQ(cover_index(2, 0, 1), 0);
  EXPECT_EQ(cover_index(2, 0, 0), 2);
  for (std::int64_t x = -3; x <= 3; ++x) EXPECT_EQ(cover_index(1, x, 5), x);
  std::vector<std::string> warnings;
  EXPECT_EQ(cover_index(3, 1, 0, &warnings), 7);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_THROW(cover_index(0, 1, 0), PreconditionError);
}

TEST(Ghost, Contribution) {
  EXPECT_EQ(ghost_tree_contribution({1, 0, 3}), 4);
  EXPECT_EQ(ghost_tree_contribution({2, 1, 4}), 6);
  EXPECT_THROW(ghost_tree_contribution({1, 0, 2}), InvariantViolation);
  EXPECT_THROW(ghost_tree_contribution({2, 0, 6}), InvariantViolation);
}

TEST(Ghost, AtLeastFourWhenStable) {
  for (std::int64_t v = 1; v <= 10; ++v) {
    const std::int64_t ei = v - 1;
    for (std::int64_t ee = 0; ee <= 3 * v + 2; ++ee) {
      if (2 * ei + ee < 3 * v) {
        EXPECT_THROW(ghost_tree_contribution({v, ei, ee}), InvariantViolation);
        continue;
      }
      EXPECT_GE(ghost_tree_contribution({v, ei, ee}), 4);
    }
  }
}

TEST(Arithmetic, OverflowIsAnError) {
  auto u = curve(0, {kMB}, {}, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(fredholm_index(u), OverflowError);
}

}  // namespace
}  // namespace ptorsion::index
