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

#include "ptorsion/json_io.hpp"

#include <algorithm>

namespace ptorsion::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0, 0);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer()) schema_error(where, std::string("\"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t optional_int(const json& obj, const char* key, std::int64_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  return require_int(obj, key, where);
}

std::optional<Sign> parse_sign(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-" || s == "−") return Sign::Minus;
  return std::nullopt;
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  }
}

Domain domain_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("document", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "pieces" && key != "s1_signs" && key != "provenance") schema_error("document", "unknown key \"" + key + "\"");
  }
  const auto& arr = require(doc, "pieces", "document");
  if (!arr.is_array()) schema_error("document", "\"pieces\" must be an array");

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "pieces[" + std::to_string(i) + "]";
    const auto& jp = arr[i];
    Piece p;
    p.id = require_string(jp, "id", where);
    const auto genus = require_int(jp, "genus", where);
    if (genus < std::numeric_limits<int>::min() || genus > std::numeric_limits<int>::max()) {
      schema_error(where, "genus out of range");
    }
    p.genus = static_cast<int>(genus);
    p.monodromy = jp.contains("monodromy") ? require_string(jp, "monodromy", where) : std::string(kTrivialMonodromy);
    const auto& slots = require(jp, "slots", where);
    if (!slots.is_array()) schema_error(where, "\"slots\" must be an array");
    for (std::size_t j = 0; j < slots.size(); ++j) {
      const std::string sw = where + ".slots[" + std::to_string(j) + "]";
      const auto& js = slots[j];
      if (!js.is_object()) schema_error(sw, "expected an object");
      if (js.contains("binding")) {
        p.slots.emplace_back(BindingSlot{require_string(js, "binding", sw)});
      } else if (js.contains("boundary")) {
        p.slots.emplace_back(BoundarySlot{require_string(js, "boundary", sw)});
      } else if (js.contains("interface")) {
        const auto end = require_string(js, "end", sw);
        if (end != "source" && end != "target") schema_error(sw, "\"end\" must be \"source\" or \"target\"");
        p.slots.emplace_back(InterfaceSlot{require_string(js, "interface", sw),
                                           end == "source" ? EndMarker::Source : EndMarker::Target});
      } else {
        schema_error(sw, "slot needs one of \"binding\", \"boundary\", \"interface\"");
      }
    }
    pieces.push_back(std::move(p));
  }

  std::optional<Domain::SignMap> signs;
  if (doc.contains("s1_signs")) {
    const auto& js = doc["s1_signs"];
    if (!js.is_object()) schema_error("s1_signs", "expected an object");
    signs.emplace();
    for (const auto& [id, v] : js.items()) {
      const auto s = v.is_string() ? parse_sign(v.get<std::string>()) : std::nullopt;
      if (!s) schema_error("s1_signs." + id, "sign must be \"+\" or \"-\"");
      (*signs)[id] = *s;
    }
  }

  std::map<std::string, TorusOrigin> provenance;
  if (doc.contains("provenance")) {
    const auto& jp = doc["provenance"];
    if (!jp.is_object()) schema_error("provenance", "expected an object");
    for (const auto& [name, v] : jp.items()) {
      const auto o = v.is_string() ? torus_origin_from_string(v.get<std::string>()) : std::nullopt;
      if (!o) schema_error("provenance." + name, "unknown torus origin");
      provenance[name] = *o;
    }
  }
  return Domain(std::move(pieces), std::move(provenance), std::move(signs));
}

Domain parse_domain(std::string_view text) { return domain_from_json(parse_json(text)); }

json domain_to_json(const Domain& d) {
  json doc;
  doc["pieces"] = json::array();
  for (const auto& p : d.pieces()) {
    json jp;
    jp["id"] = p.id;
    jp["genus"] = p.genus;
    jp["monodromy"] = p.monodromy;
    jp["slots"] = json::array();
    for (const auto& s : p.slots) {
      if (const auto* b = std::get_if<BindingSlot>(&s)) {
        jp["slots"].push_back({{"binding", b->name}});
      } else if (const auto* t = std::get_if<BoundarySlot>(&s)) {
        jp["slots"].push_back({{"boundary", t->name}});
      } else {
        const auto& f = std::get<InterfaceSlot>(s);
        jp["slots"].push_back({{"interface", f.edge}, {"end", f.end == EndMarker::Source ? "source" : "target"}});
      }
    }
    doc["pieces"].push_back(std::move(jp));
  }
  if (d.s1_signs()) {
    json js = json::object();
    for (const auto& [id, s] : *d.s1_signs()) js[id] = s == Sign::Plus ? "+" : "-";
    doc["s1_signs"] = std::move(js);
  }
  if (!d.provenance().empty()) {
    json jp = json::object();
    for (const auto& [name, o] : d.provenance()) jp[name] = std::string(to_string(o));
    doc["provenance"] = std::move(jp);
  }
  return doc;
}

std::string emit_domain(const Domain& d) { return domain_to_json(canonicalize(d)).dump(2) + "\n"; }

json to_json(const TorsionReport& r) {
  json out;
  out["order"] = r.order ? json(*r.order) : json(nullptr);
  out["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  out["candidates"] = json::array();
  for (const auto& c : r.candidates) {
    out["candidates"].push_back({{"piece", c.piece}, {"order", c.order}, {"fully_separating", c.fully_separating}});
  }
  out["fully_separating"] = r.fully_separating;
  out["symmetric"] = r.symmetric;
  out["partially_planar"] = r.partially_planar;
  return out;
}

json to_json(const CycleClass& c) { return json(c.coords()); }

json to_json(const ech::OrbitSet& s) {
  json out = json::array();
  for (const auto& e : s.entries()) out.push_back({{"orbit", e.orbit.name}, {"multiplicity", e.multiplicity}});
  return out;
}

json to_json(const ech::ChainElement& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    json off = json::object();
    for (const auto& [sym, k] : t.exponent.offset) off[sym] = k;
    out.push_back({{"coeff", t.coeff},
                   {"offset", off},
                   {"class", to_json(t.exponent.cls)},
                   {"orbits", to_json(t.orbits)},
                   {"text", "e^{" + t.exponent.to_string() + "}" + t.orbits.to_string()}});
  }
  return out;
}

json to_json(const ech::TowerReport& t) {
  json levels = json::array();
  for (const auto& l : t.levels) levels.push_back(l.to_string());
  return {{"d", t.d},
          {"steps", t.steps},
          {"levels", levels},
          {"level_is_cycle", t.level_is_cycle},
          {"reaches_empty", t.reaches_empty},
          {"all_cycles", t.all_cycles}};
}

json ech_report(const ech::PerturbedModel& model, std::int64_t tower_depth, ech::Coefficients tower_mode) {
  const auto untwisted = ech::contact_invariant_vanishes(model, false);
  const auto twisted = ech::contact_invariant_vanishes(model, true);
  json out;
  out["piece"] = model.piece;
  out["n"] = model.n;
  out["r"] = model.r;
  out["m"] = model.m;
  out["gamma0"] = to_json(ech::gamma0(model));
  out["differential"] = to_json(twisted.differential);
  out["differential_untwisted"] = to_json(untwisted.differential);
  out["vanishes_untwisted"] = untwisted.vanishes;
  out["vanishes_twisted"] = twisted.vanishes;
  out["offending_tori"] = twisted.offending_tori;
  if (tower_depth > 0) {
    auto tower = to_json(ech::u_map_tower(model, tower_depth, tower_mode));
    tower["mode"] = tower_mode == ech::Coefficients::Twisted ? "twisted" : "untwisted";
    out["u_tower"] = std::move(tower);
  } else {
    out["u_tower"] = nullptr;
  }
  return out;
}

// --- index records -----------------------------------------------------------

namespace {

index::OrbitAsymptotics orbit_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "orbit must be an object");
  index::OrbitAsymptotics o;
  o.alpha_minus = require_int(j, "alpha_minus", where);
  o.parity = static_cast<int>(require_int(j, "parity", where));
  if (j.contains("morse_bott")) {
    if (!j["morse_bott"].is_boolean()) schema_error(where, "\"morse_bott\" must be a boolean");
    o.morse_bott = j["morse_bott"].get<bool>();
  }
  return o;
}

std::vector<index::EchOrbit> ech_orbits(const json& rec, const char* key, const std::string& where) {
  std::vector<index::EchOrbit> out;
  if (!rec.contains(key)) return out;
  const auto& arr = rec[key];
  if (!arr.is_array()) schema_error(where, std::string("\"") + key + "\" must be an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string w = where + "." + key + "[" + std::to_string(i) + "]";
    index::EchOrbit o;
    const auto& covers = require(arr[i], "cover_cz", w);
    if (!covers.is_array()) schema_error(w, "\"cover_cz\" must be an array");
    for (const auto& c : covers) {
      if (!c.is_number_integer()) schema_error(w, "cover indices must be integers");
      o.cover_cz.push_back(c.get<std::int64_t>());
    }
    o.multiplicity = optional_int(arr[i], "multiplicity", 1, w);
    out.push_back(std::move(o));
  }
  return out;
}

std::string label_of(const json& rec) {
  if (rec.is_object() && rec.contains("label") && rec["label"].is_string()) return rec["label"].get<std::string>();
  return "record";
}

}  // namespace

index::CurveData curve_from_json(const json& rec) {
  const std::string where = label_of(rec);
  index::CurveData u;
  u.genus = static_cast<int>(optional_int(rec, "genus", 0, where));
  for (const char* key : {"positive", "negative"}) {
    if (!rec.contains(key)) continue;
    const auto& arr = rec[key];
    if (!arr.is_array()) schema_error(where, std::string("\"") + key + "\" must be an array");
    auto& ends = std::string_view(key) == "positive" ? u.positive : u.negative;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      ends.push_back(orbit_from_json(arr[i], where + "." + key + "[" + std::to_string(i) + "]"));
    }
  }
  u.c1_rel = require_int(rec, "c1", where);
  const auto kind = rec.contains("c1_kind") ? require_string(rec, "c1_kind", where) : std::string("tangent");
  if (kind != "tangent" && kind != "normal") schema_error(where, "\"c1_kind\" must be \"tangent\" or \"normal\"");
  u.c1_kind = kind == "tangent" ? index::ChernKind::Tangent : index::ChernKind::Normal;
  u.self_intersection = optional_int(rec, "self_intersection", 0, where);
  u.delta = optional_int(rec, "delta", 0, where);
  u.delta_inf = optional_int(rec, "delta_inf", 0, where);
  u.sigma_bar = optional_int(rec, "sigma_bar", u.puncture_count(), where);
  return u;
}

index::EchCurveData ech_curve_from_json(const json& rec) {
  const std::string where = label_of(rec);
  index::EchCurveData u;
  u.c1_rel = require_int(rec, "c1", where);
  u.q_rel = optional_int(rec, "q", 0, where);
  u.positive = ech_orbits(rec, "positive", where);
  u.negative = ech_orbits(rec, "negative", where);
  return u;
}

json evaluate_index_record(const json& rec) {
  json out = rec;
  json errors = json::object();
  auto attempt = [&](const char* field, auto&& fn) {
    try {
      out[field] = fn();
    } catch (const Error& e) {
      errors[field] = e.what();
    }
  };

  const std::string kind = rec.is_object() && rec.contains("kind") && rec["kind"].is_string()
                               ? rec["kind"].get<std::string>()
                               : std::string();
  if (kind == "curve") {
    const auto u = curve_from_json(rec);
    out["violations"] = index::invariant_violations(u);
    // formulas taking the other kind of c1 are reported as null
    const bool tangent = u.c1_kind == index::ChernKind::Tangent;
    for (const char* f : {"fredholm_index", "normal_riemann_roch", "constrained_index", "constrained_normal_chern",
                          "adjunction_residual"}) {
      out[f] = nullptr;
    }
    if (tangent) {
      attempt("fredholm_index", [&] { return index::fredholm_index(u); });
      attempt("constrained_index", [&] { return index::constrained_index(u); });
      attempt("constrained_normal_chern", [&] { return index::constrained_normal_chern(u); });
      attempt("adjunction_residual", [&] { return index::adjunction_residual(u); });
    } else {
      attempt("normal_riemann_roch", [&] { return index::normal_riemann_roch(u); });
    }
  } else if (kind == "ech") {
    const auto u = ech_curve_from_json(rec);
    attempt("ech_index", [&] { return index::ech_index(u); });
  } else if (kind == "cover") {
    const std::string where = label_of(rec);
    std::vector<std::string> warnings;
    attempt("cover_index", [&] {
      return index::cover_index(require_int(rec, "k", where), require_int(rec, "ind_base", where),
                                require_int(rec, "n_gamma2", where), &warnings);
    });
    out["warnings"] = warnings;
  } else if (kind == "ghost") {
    const std::string where = label_of(rec);
    attempt("ghost_contribution", [&] {
      return index::ghost_tree_contribution(
          {require_int(rec, "V", where), require_int(rec, "E_i", where), require_int(rec, "E_e", where)});
    });
  } else {
    schema_error(label_of(rec), "\"kind\" must be one of \"curve\", \"ech\", \"cover\", \"ghost\"");
  }
  out["errors"] = std::move(errors);
  return out;
}

}  // namespace ptorsion::io
