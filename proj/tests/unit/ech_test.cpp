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

#include <random>

#include <gtest/gtest.h>

#include "ptorsion/catalog.hpp"
#include "ptorsion/ech.hpp"
#include "ptorsion/enumerate.hpp"
#include "ptorsion/errors.hpp"
#include "ptorsion/torsion.hpp"

namespace ptorsion::ech {
namespace {

PerturbedModel witness_model(const Domain& d) {
  const auto r = planar_torsion_order(d);
  if (!r.witness) throw std::logic_error("test domain has no witness");
  return perturb(d, *r.witness);
}

TEST(Perturb, Counts) {
  const auto l = witness_model(catalog::lutz());
  EXPECT_EQ(std::tuple(l.n, l.r, l.m), std::tuple(1u, 0u, 0u));
  const auto g = witness_model(catalog::giroux());
  EXPECT_EQ(std::tuple(g.n, g.r, g.m), std::tuple(2u, 0u, 0u));
  const auto s = witness_model(catalog::solid_torus_schematic());
  EXPECT_EQ(std::tuple(s.n, s.r, s.m), std::tuple(1u, 0u, 1u));
  const auto z = witness_model(catalog::self_sum_schematic());
  EXPECT_EQ(std::tuple(z.n, z.r, z.m), std::tuple(1u, 1u, 0u));
  EXPECT_EQ(z.elliptic[1].name, "gamma_2^e");
  EXPECT_EQ(z.elliptic[1].source, OrbitSource::InteriorTorus);
}

void expect_precondition(const Domain& d, const std::string& piece, const std::string& needle) {
  try {
    perturb(d, piece);
    FAIL() << "expected failure mentioning " << needle;
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(Perturb, NamesTheFailedCondition) {
  expect_precondition(catalog::vgk(3, 2), "R1", "not a planar piece");
  expect_precondition(catalog::t3_mod_z2(), "P", "padding is empty");
  expect_precondition(catalog::t3_xi(1), "R0", "symmetric");
  const auto u = disjoint_union(catalog::giroux(), new_open_book(0, 1));
  expect_precondition(u, u.pieces().back().id, "padding");
  EXPECT_THROW(perturb(catalog::lutz(), "missing"), InvalidReference);
}

TEST(OrbitSets, GammaZero) {
  EXPECT_EQ(gamma0(witness_model(catalog::lutz())).to_string(), "{(gamma_1^h,1)}");
  EXPECT_EQ(gamma0(witness_model(catalog::giroux())).to_string(), "{(gamma_1^h,1),(gamma_2^e,1)}");
  const auto z = witness_model(catalog::self_sum_schematic());
  EXPECT_EQ(gamma0(z).multiplicity_of("gamma_2^e"), 2);
  const auto s = witness_model(catalog::solid_torus_schematic());
  EXPECT_EQ(gamma0(s).to_string(), "{(gamma_1^h,1),(beta_1,1)}");
  EXPECT_THROW(gamma0(s, 1), PreconditionError);
}

TEST(OrbitSets, Admissibility) {
  const auto m = witness_model(catalog::giroux());
  EXPECT_TRUE(is_admissible(gamma0(m)));
  EXPECT_TRUE(is_admissible(OrbitSet{}));
  OrbitSet bad;
  bad.add(m.hyperbolic[0], 2);
  EXPECT_FALSE(is_admissible(bad));
  ChainElement c(Coefficients::Twisted, m.class_rank);
  EXPECT_THROW(c.add_term(Exponent{{}, CycleClass::zero(m.class_rank)}, bad, 1), InvariantViolation);
  OrbitSet s;
  s.add(m.elliptic[0], 2);
  s.remove(m.elliptic[0], 2);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.to_string(), "∅");
  EXPECT_THROW(s.remove(m.elliptic[0], 1), PreconditionError);
}

TEST(Differential, TwistedExamples) {
  const auto empty = [](const PerturbedModel& m, Coefficients c) { return ChainElement::empty_set(c, m.class_rank); };
  for (const auto& d : {catalog::lutz(), catalog::giroux()}) {
    const auto m = witness_model(d);
    EXPECT_EQ(differential_gamma0(m, Coefficients::Twisted), empty(m, Coefficients::Twisted));
    EXPECT_TRUE(contact_invariant_vanishes(m, true).vanishes);
    EXPECT_TRUE(contact_invariant_vanishes(m, false).vanishes);
  }
  const auto t2 = witness_model(catalog::t3_xi(2));
  const auto d = differential_gamma0(t2, Coefficients::Twisted);
  EXPECT_NE(d, empty(t2, Coefficients::Twisted));
  EXPECT_EQ(d.terms().size(), 3u);
  const auto report = contact_invariant_vanishes(t2, true);
  EXPECT_FALSE(report.vanishes);
  EXPECT_EQ(report.offending_tori.size(), 1u);
}

TEST(Differential, UntwistedIsEmptySetForEveryCatalogModel) {
  for (const auto& m : catalog::named_models()) {
    const auto r = planar_torsion_order(m.domain);
    if (!r.witness) continue;
    const auto model = perturb(m.domain, *r.witness);
    EXPECT_EQ(differential_gamma0(model, Coefficients::Untwisted),
              ChainElement::empty_set(Coefficients::Untwisted, model.class_rank))
        << m.name;
  }
}

TEST(Differential, InteriorToriCarryCoefficientTwo) {
  const auto z = witness_model(catalog::self_sum_schematic());
  const auto d = differential_gamma0(z, Coefficients::Twisted);
  bool saw = false;
  for (const auto& t : d.terms()) {
    if (t.orbits.multiplicity_of("gamma_2^h") == 1) {
      EXPECT_EQ(std::abs(t.coeff), 2);
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

// The verdict does not depend on which boundary torus carries the
// hyperbolic orbit.
TEST(Differential, HyperbolicChoiceIndependence) {
  std::size_t models = 0;
  enumerate::for_each_domain({3, 4}, [&](const Domain& d) {
    const auto r = planar_torsion_order(d);
    if (!r.witness) return;
    const auto m = perturb(d, *r.witness);
    const bool base = contact_invariant_vanishes(m, true, 0).vanishes;
    for (std::size_t h = 1; h < m.n; ++h) EXPECT_EQ(contact_invariant_vanishes(m, true, h).vanishes, base);
    for (std::size_t h = 0; h < m.n; ++h) EXPECT_TRUE(contact_invariant_vanishes(m, false, h).vanishes);
    ++models;
  });
  EXPECT_GT(models, 1000u);
}

Exponent random_exponent(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> c(-2, 2);
  Exponent e{{}, CycleClass::zero(rank)};
  std::vector<std::int64_t> coords(rank);
  for (auto& x : coords) x = c(rng);
  e.cls = CycleClass(coords);
  if (const int a = c(rng)) e.offset["A_0"] = a;
  if (const int b = c(rng)) e.offset["A_p"] = b;
  return e;
}

GroupRingElement random_element(std::mt19937_64& rng, std::size_t rank) {
  GroupRingElement g;
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 3; ++i) g = g + GroupRingElement::monomial(random_exponent(rng, rank), c(rng));
  return g;
}

TEST(GroupRing, CommutativeAndAssociative) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(rng, 2), b = random_element(rng, 2), c = random_element(rng, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(GroupRing, TwistedDifferenceVanishesIffClassZero) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto base = random_exponent(rng, 3);
    const auto torus = random_exponent(rng, 3).cls;
    const auto diff =
        GroupRingElement::monomial(base + Exponent{{}, torus}) - GroupRingElement::monomial(base);
    EXPECT_EQ(diff.is_zero(), torus.is_zero());
    ChainElement untwisted(Coefficients::Untwisted, 3);
    untwisted.add(diff, OrbitSet{});
    EXPECT_TRUE(untwisted.is_zero());
  }
}

TEST(UMap, Steps) {
  const auto m = witness_model(catalog::vgk(4, 3));
  EXPECT_EQ(u_map_step(m, 1, Coefficients::Twisted), ChainElement::empty_set(Coefficients::Twisted, m.class_rank));
  const auto two = u_map_step(m, 2, Coefficients::Twisted);
  ASSERT_EQ(two.terms().size(), 1u);
  EXPECT_EQ(two.terms()[0].exponent.offset.at("A_p"), 1);
  EXPECT_EQ(two.terms()[0].orbits, gamma_k(m, 1));
  for (std::int64_t k = 1; k <= 8; ++k) {
    const auto g = gamma_k(m, k);
    EXPECT_TRUE(is_admissible(g));
    for (const auto& e : g.entries()) EXPECT_EQ(e.multiplicity, k);
  }
  EXPECT_THROW(gamma_k(m, 17), PreconditionError);
  const auto z = witness_model(catalog::self_sum_schematic());
  EXPECT_EQ(gamma_k(z, 3).multiplicity_of("gamma_2^e"), 6);
  EXPECT_THROW(gamma_k(z, 9), PreconditionError);
}

TEST(UMap, Towers) {
  for (const auto& d : {catalog::lutz(), catalog::giroux(), catalog::vgk(3, 2), catalog::vgk(5, 5)}) {
    const auto m = witness_model(d);
    for (std::int64_t depth = 1; depth <= 3; ++depth) {
      const auto t = u_map_tower(m, depth, Coefficients::Untwisted);
      EXPECT_EQ(t.steps, static_cast<std::size_t>(depth));
      EXPECT_TRUE(t.reaches_empty);
      EXPECT_TRUE(t.all_cycles);
      EXPECT_EQ(t.levels.size(), static_cast<std::size_t>(depth) + 1);
    }
  }
  const auto t2 = witness_model(catalog::t3_xi(2));
  const auto twisted = u_map_tower(t2, 2, Coefficients::Twisted);
  EXPECT_TRUE(twisted.reaches_empty);
  EXPECT_FALSE(twisted.all_cycles);
  EXPECT_THROW(u_map_tower(t2, 0, Coefficients::Twisted), PreconditionError);
}

TEST(FlowLines, EchIndexEqualsFredholmIndex) {
  for (const auto& m : catalog::named_models()) {
    const auto r = planar_torsion_order(m.domain);
    if (!r.witness) continue;
    const auto model = perturb(m.domain, *r.witness);
    const auto lines = flow_lines(model);
    EXPECT_EQ(lines.size(), (model.n + model.r + 1) + 2 * (model.n + model.r));
    for (const auto& f : lines) {
      EXPECT_EQ(index::ech_index(f.ech), f.expected_index) << m.name << " " << f.label;
      EXPECT_EQ(index::fredholm_index(f.curve), f.expected_index) << m.name << " " << f.label;
      EXPECT_TRUE(index::invariant_violations(f.curve).empty());
    }
  }
}

}  // namespace
}  // namespace ptorsion::ech
