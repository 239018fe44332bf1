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

#include "ptorsion/catalog.hpp"

#include <fstream>
#include <mutex>

#include "ptorsion/ech.hpp"
#include "ptorsion/json_io.hpp"
#include "ptorsion/torsion.hpp"

namespace ptorsion::catalog {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::Published: return "published";
    case Basis::Oracle: return "oracle";
    case Basis::Immediate: return "immediate";
  }
  return "published";
}

namespace {

// new_open_book with the piece called `id` and bindings id.b1, ...
Domain book(const std::string& id, int genus, int bindings, std::string monodromy = std::string(kTrivialMonodromy)) {
  Piece p = new_open_book(genus, bindings, std::move(monodromy)).pieces().front();
  p.id = id;
  for (int i = 0; i < bindings; ++i) p.slots[i] = BindingSlot{id + ".b" + std::to_string(i + 1)};
  return Domain({p});
}

Domain unite(std::initializer_list<Domain> parts) {
  Domain out;
  for (const auto& d : parts) out = disjoint_union(out, d);
  return out;
}

DualGraph cycle_of_annuli(int regions) {
  DualGraph dual;
  for (int i = 0; i < regions; ++i) dual.regions.push_back({0, i % 2 == 0 ? Sign::Plus : Sign::Minus, 2});
  for (int i = 0; i < regions; ++i) {
    const auto next = static_cast<std::size_t>((i + 1) % regions);
    dual.curves.push_back({{static_cast<std::size_t>(i), 1}, DualGraph::RegionSlot{next, 0}});
  }
  return dual;
}

}  // namespace

Domain lutz() {
  auto d = unite({book("P", 0, 1), book("Q", 0, 2, "negative-twist")});
  d = binding_sum(d, "P.b1", "Q.b1");
  return blow_up(d, "Q.b2");
}

Domain giroux() {
  auto d = unite({book("Q1", 0, 2), book("P", 0, 2), book("Q2", 0, 2)});
  d = binding_sum(d, "Q1.b2", "P.b1");
  d = binding_sum(d, "P.b2", "Q2.b1");
  d = blow_up(d, "Q1.b1");
  return blow_up(d, "Q2.b2");
}

Domain t3_xi(int n) {
  if (n < 1) throw PreconditionError("t3_xi needs n >= 1");
  if (n == 1) {
    // two annuli glued along both boundary circles
    DualGraph dual;
    dual.regions = {{0, Sign::Plus, 2}, {0, Sign::Minus, 2}};
    dual.curves = {{{0, 0}, DualGraph::RegionSlot{1, 0}}, {{0, 1}, DualGraph::RegionSlot{1, 1}}};
    return s1_invariant(dual);
  }
  return s1_invariant(cycle_of_annuli(2 * n));
}

Domain t3_mod_z2() { return binding_sum(book("P", 0, 2), "P.b1", "P.b2"); }

Domain vgk(int g, int k) {
  if (k < 1 || k > g) throw PreconditionError("vgk needs 1 <= k <= g");
  DualGraph dual;
  dual.regions = {{0, Sign::Plus, k}, {g - k + 1, Sign::Minus, k}};
  for (int i = 0; i < k; ++i) {
    const auto s = static_cast<std::size_t>(i);
    dual.curves.push_back({{0, s}, DualGraph::RegionSlot{1, s}});
  }
  return s1_invariant(dual);
}

Domain symmetric_disk_pair() {
  return binding_sum(unite({book("P", 0, 1), book("Q", 0, 1)}), "P.b1", "Q.b1");
}

Domain torsion_ambiguity() {
  auto d = unite({book("C", 1, 1), book("A", 0, 2), book("B", 0, 4)});
  d = binding_sum(d, "C.b1", "A.b1");
  return binding_sum(d, "A.b2", "B.b1");
}

Domain solid_torus_schematic() {
  auto d = binding_sum(unite({book("P", 0, 2), book("Q", 0, 2)}), "P.b2", "Q.b1");
  return blow_up(d, "Q.b2");
}

Domain self_sum_schematic() {
  auto d = unite({book("P", 0, 3), book("Q", 0, 2)});
  d = binding_sum(d, "P.b1", "P.b2");
  d = binding_sum(d, "P.b3", "Q.b1");
  return blow_up(d, "Q.b2");
}

std::vector<Model> named_models() {
  using B = Basis;
  std::vector<Model> out;
  out.push_back({"lutz",
                 "overtwisted disk: a disk page summed into a blown-up annulus",
                 lutz(),
                 {{"/order", 0, B::Published},
                  {"/fully_separating", true, B::Published},
                  {"/ech/n", 1, B::Published},
                  {"/ech/r", 0, B::Published},
                  {"/ech/m", 0, B::Published},
                  {"/ech/vanishes_untwisted", true, B::Published},
                  {"/ech/vanishes_twisted", true, B::Published}}});
  out.push_back({"giroux",
                 "Giroux torsion layer: an annulus piece between two blown-up annuli",
                 giroux(),
                 {{"/order", 1, B::Published},
                  {"/fully_separating", true, B::Published},
                  {"/ech/n", 2, B::Published},
                  {"/ech/r", 0, B::Published},
                  {"/ech/m", 0, B::Published},
                  {"/ech/vanishes_untwisted", true, B::Published},
                  {"/ech/vanishes_twisted", true, B::Published}}});
  for (int n = 1; n <= 4; ++n) {
    Model m{"t3_xi" + std::to_string(n),
            "T^3 with the S^1-invariant structure of " + std::to_string(2 * n) + " dividing circles",
            t3_xi(n),
            {}};
    if (n == 1) {
      m.expected = {{"/symmetric", true, B::Published},
                    {"/order", nullptr, B::Published},
                    {"/giroux", "Inconclusive", B::Immediate}};
    } else {
      m.expected = {{"/symmetric", false, B::Published},
                    {"/order", 1, B::Published},
                    {"/fully_separating", false, B::Published},
                    {"/ech/vanishes_untwisted", true, B::Published},
                    {"/ech/vanishes_twisted", false, B::Oracle}};
    }
    out.push_back(std::move(m));
  }
  out.push_back({"t3z2",
                 "an annulus open book summed with itself",
                 t3_mod_z2(),
                 {{"/symmetric", false, B::Published}, {"/order", nullptr, B::Published}}});
  for (int g = 1; g <= 6; ++g) {
    for (int k = 1; k <= g; ++k) {
      Model m{"vgk_" + std::to_string(g) + "_" + std::to_string(k),
              "S^1 x Sigma_" + std::to_string(g) + " with " + std::to_string(k) + " dividing circles",
              vgk(g, k),
              {{"/order", k - 1, B::Published},
               {"/pt_upper_bound", k - 1, B::Published},
               {"/symmetric", false, B::Published},
               {"/fully_separating", k == 1, B::Oracle},
               {"/ech/vanishes_untwisted", true, B::Published},
               {"/ech/vanishes_twisted", k == 1, B::Oracle}}};
      if (k >= 3) {
        m.expected.push_back({"/giroux", "NoGirouxTorsion", B::Published});
      } else {
        m.expected.push_back({"/giroux", "Inconclusive", B::Oracle});
      }
      out.push_back(std::move(m));
    }
  }
  out.push_back({"symmetric_disk_pair",
                 "two disk open books summed along their bindings: tight S^1 x S^2",
                 symmetric_disk_pair(),
                 {{"/symmetric", true, B::Published},
                  {"/order", nullptr, B::Immediate},
                  {"/closed_class", "symmetric-with-disk-pages", B::Published}}});
  out.push_back({"torsion_ambiguity",
                 "two planar pieces whose candidate orders differ",
                 torsion_ambiguity(),
                 {{"/candidate_orders", json::array({1, 3}), B::Oracle}, {"/order", 1, B::Published}}});
  out.push_back({"solid_torus_schematic",
                 "planar piece with one binding circle next to a blown-up annulus",
                 solid_torus_schematic(),
                 {{"/ech/n", 1, B::Published}, {"/ech/r", 0, B::Published}, {"/ech/m", 1, B::Published}}});
  out.push_back({"self_sum_schematic",
                 "planar piece carrying one interior interface torus",
                 self_sum_schematic(),
                 {{"/order", 2, B::Oracle},
                  {"/fully_separating", false, B::Oracle},
                  {"/ech/n", 1, B::Oracle},
                  {"/ech/r", 1, B::Published},
                  {"/ech/vanishes_twisted", false, B::Oracle}}});
  return out;
}

json analyze(const Domain& d) {
  const auto report = planar_torsion_order(d);
  json out;
  out["order"] = report.order ? json(*report.order) : json(nullptr);
  out["witness"] = report.witness ? json(*report.witness) : json(nullptr);
  std::vector<int> orders;
  for (const auto& c : report.candidates) orders.push_back(c.order);
  std::sort(orders.begin(), orders.end());
  out["candidate_orders"] = orders;
  out["symmetric"] = report.symmetric;
  out["partially_planar"] = report.partially_planar;
  out["fully_separating"] = report.fully_separating;
  const auto bound = pt_upper_bound(d);
  out["pt_upper_bound"] = bound ? json(*bound) : json(nullptr);
  out["components"] = validate(d).components.size();
  try {
    out["giroux"] = std::string(to_string(giroux_torsion_obstruction(d)));
  } catch (const PreconditionError&) {
    out["giroux"] = nullptr;
  }
  out["closed_class"] = std::string(to_string(classify_closed(d)));
  if (report.witness) {
    const auto model = ech::perturb(d, *report.witness);
    out["ech"] = {{"piece", model.piece},
                  {"n", model.n},
                  {"r", model.r},
                  {"m", model.m},
                  {"vanishes_untwisted", ech::contact_invariant_vanishes(model, false).vanishes},
                  {"vanishes_twisted", ech::contact_invariant_vanishes(model, true).vanishes}};
  } else {
    out["ech"] = nullptr;
  }
  return out;
}

std::vector<Mismatch> check(const Model& m, const json& analysis) {
  std::vector<Mismatch> out;
  for (const auto& e : m.expected) {
    const json::json_pointer ptr(e.field);
    const json actual = analysis.contains(ptr) ? analysis.at(ptr) : json("<missing>");
    if (actual != e.value) out.push_back({m.name, e.field, e.value, actual, e.basis});
  }
  return out;
}

std::vector<Mismatch> check(const Model& m) { return check(m, analyze(m.domain)); }

namespace {

std::string describe(const std::vector<Mismatch>& ms) {
  std::string s = "catalog expectations failed:";
  for (const auto& m : ms) {
    s += "\n  " + m.model + " " + m.field + ": expected " + m.expected.dump() + ", got " + m.actual.dump() + " (" +
         std::string(to_string(m.basis)) + ")";
  }
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out.flush()) throw Error("failed writing " + path.string());
}

}  // namespace

CatalogMismatch::CatalogMismatch(std::vector<Mismatch> mismatches)
    : Error(describe(mismatches)), mismatches_(std::move(mismatches)) {}

WriteSummary write_catalog(const std::filesystem::path& dir, const std::optional<enumerate::Bounds>& bounds,
                           unsigned threads) {
  WriteSummary summary;
  const auto models = named_models();
  std::vector<json> analyses;
  std::vector<Mismatch> hard;
  for (const auto& m : models) {
    analyses.push_back(analyze(m.domain));
    for (auto& mm : check(m, analyses.back())) {
      (mm.basis == Basis::Published ? hard : summary.soft_mismatches).push_back(std::move(mm));
    }
  }
  if (!hard.empty()) throw CatalogMismatch(std::move(hard));

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());

  json index;
  index["models"] = json::array();
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    const auto file = dir / (m.name + ".json");
    write_file(file, io::emit_domain(m.domain));
    summary.files.push_back(file);
    json entry{{"name", m.name}, {"summary", m.summary}, {"file", file.filename().string()}};
    entry["expected"] = json::array();
    for (const auto& e : m.expected) {
      entry["expected"].push_back({{"field", e.field}, {"value", e.value}, {"basis", std::string(to_string(e.basis))}});
    }
    entry["computed"] = analyses[i];
    index["models"].push_back(std::move(entry));
  }
  index["soft_mismatches"] = json::array();
  for (const auto& mm : summary.soft_mismatches) {
    index["soft_mismatches"].push_back({{"model", mm.model}, {"field", mm.field}, {"expected", mm.expected},
                                        {"actual", mm.actual}, {"basis", std::string(to_string(mm.basis))}});
  }
  const auto catalog_file = dir / "catalog.json";
  write_file(catalog_file, index.dump(2) + "\n");
  summary.files.push_back(catalog_file);
  summary.models = models.size();

  if (bounds) {
    std::mutex mu;
    std::vector<std::pair<std::string, json>> rows;
    enumerate::for_each_domain(
        *bounds,
        [&](const Domain& d) {
          // analyse the canonical form so witness names match the stored domain
          const Domain c = canonicalize(d);
          json canon = io::domain_to_json(c);
          std::string key = canon.dump();
          json row{{"domain", std::move(canon)}, {"analysis", analyze(c)}};
          std::lock_guard lock(mu);
          rows.emplace_back(std::move(key), std::move(row));
        },
        threads);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json en{{"max_pieces", bounds->max_pieces},
            {"max_edges", bounds->max_edges},
            {"max_genus", bounds->max_genus},
            {"max_bindings", bounds->max_bindings},
            {"max_boundary", bounds->max_boundary},
            {"count", rows.size()}};
    en["domains"] = json::array();
    for (auto& [key, row] : rows) en["domains"].push_back(std::move(row));
    const auto file = dir / "enumeration.json";
    write_file(file, en.dump(1) + "\n");
    summary.files.push_back(file);
    summary.enumerated = rows.size();
  }
  return summary;
}

}  // namespace ptorsion::catalog
