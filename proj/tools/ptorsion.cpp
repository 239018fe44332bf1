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

// ptorsion: command-line front end for domain files.
//
// Exit codes: 0 success, 1 analysis-negative, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ptorsion/catalog.hpp"
#include "ptorsion/ech.hpp"
#include "ptorsion/json_io.hpp"
#include "ptorsion/torsion.hpp"

namespace {

using ptorsion::io::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

constexpr const char* kOutDirEnv = "PTORSION_OUT_DIR";

struct Globals {
  bool json = false;
  bool quiet = false;
};

// Thrown for unreadable or malformed input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ptorsion::Domain load_domain(const std::string& path) {
  try {
    return ptorsion::io::parse_domain(read_file(path));
  } catch (const ptorsion::io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void load_valid(const std::string& path, ptorsion::Domain& d) {
  d = load_domain(path);
  const auto report = ptorsion::validate(d);
  if (!report.ok()) {
    std::string msg = path + ": invalid domain";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw InputError(msg);
  }
}

void print_json(const Globals& g, const json& j) {
  if (!g.quiet) std::cout << j.dump(2) << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- validate ---------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path) {
  const auto d = load_domain(path);
  const auto report = ptorsion::validate(d);
  if (g.json) {
    print_json(g, {{"ok", report.ok()}, {"violations", report.violations}, {"components", report.components}});
  } else if (!g.quiet) {
    if (report.ok()) {
      std::cout << "ok: " << d.pieces().size() << " pieces, " << report.components.size() << " component"
                << (report.components.size() == 1 ? "" : "s") << "\n";
    }
    for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  }
  return report.ok() ? kOk : kNegative;
}

// --- analyze ----------------------------------------------------------------

int cmd_analyze(const Globals& g, const std::string& path, bool require_torsion) {
  ptorsion::Domain d;
  load_valid(path, d);
  const auto report = ptorsion::planar_torsion_order(d);
  const auto bound = ptorsion::pt_upper_bound(d);
  std::optional<std::string> giroux;
  if (d.s1_signs()) {
    try {
      giroux = std::string(ptorsion::to_string(ptorsion::giroux_torsion_obstruction(d)));
    } catch (const ptorsion::PreconditionError&) {
    }
  }

  if (g.json) {
    auto j = ptorsion::io::to_json(report);
    j["pt_upper_bound"] = bound ? json(*bound) : json(nullptr);
    j["giroux"] = giroux ? json(*giroux) : json(nullptr);
    print_json(g, j);
  } else if (!g.quiet) {
    std::cout << "order: " << (report.order ? std::to_string(*report.order) : "none") << "\n";
    std::cout << "witness: " << report.witness.value_or("none") << "\n";
    std::cout << "candidates:";
    if (report.candidates.empty()) std::cout << " none";
    for (const auto& c : report.candidates) std::cout << " " << c.piece << ":" << c.order;
    std::cout << "\n";
    std::cout << "symmetric: " << yes_no(report.symmetric) << "\n";
    std::cout << "partially planar: " << yes_no(report.partially_planar) << "\n";
    std::cout << "fully separating: " << yes_no(report.fully_separating) << "\n";
    std::cout << "PT upper bound: " << (bound ? std::to_string(*bound) : "none") << "\n";
    if (giroux) std::cout << "Giroux torsion: " << *giroux << "\n";
  }
  return require_torsion && !report.order ? kNegative : kOk;
}

// --- ech --------------------------------------------------------------------

struct EchOptions {
  bool twisted = false;
  std::int64_t umap = 0;
  std::string piece;
  std::int64_t k0 = ptorsion::ech::kDefaultCoverBound;
};

int cmd_ech(const Globals& g, const std::string& path, const EchOptions& opt) {
  namespace ech = ptorsion::ech;
  ptorsion::Domain d;
  load_valid(path, d);
  std::string piece = opt.piece;
  if (piece.empty()) {
    const auto report = ptorsion::planar_torsion_order(d);
    if (!report.witness) {
      std::string why = report.symmetric             ? "the summed open book is symmetric"
                        : !report.partially_planar ? "no planar piece"
                                                   : "no planar piece meets a non-empty padding";
      std::cerr << "ptorsion: no torsion witness: " << why << "\n";
      return kNegative;
    }
    piece = *report.witness;
  }

  ech::PerturbedModel model;
  try {
    model = ech::perturb(d, piece, opt.k0);
  } catch (const ptorsion::PreconditionError& e) {
    std::cerr << "ptorsion: " << e.what() << "\n";
    return kNegative;
  }
  const auto mode = opt.twisted ? ech::Coefficients::Twisted : ech::Coefficients::Untwisted;

  if (g.json) {
    print_json(g, ptorsion::io::ech_report(model, opt.umap, mode));
    return kOk;
  }
  if (g.quiet) return kOk;

  const auto inv = ech::contact_invariant_vanishes(model, opt.twisted);
  std::cout << "planar piece " << model.piece << ": n=" << model.n << " r=" << model.r << " m=" << model.m << "\n";
  std::cout << "gamma_0 = " << ech::gamma0(model).to_string() << "\n";
  std::cout << "differential (" << (opt.twisted ? "twisted" : "untwisted") << "):\n";
  for (const auto& t : inv.differential.terms()) {
    std::cout << "  " << (t.coeff < 0 ? "-" : "+") << " " << (std::abs(t.coeff) == 1 ? "" : std::to_string(std::abs(t.coeff)) + "·")
              << "e^{" << t.exponent.to_string() << "}" << t.orbits.to_string() << "\n";
  }
  std::cout << (opt.twisted ? "twisted" : "untwisted") << " contact invariant: "
            << (inv.vanishes ? "vanishes" : "does not vanish") << "\n";
  if (!inv.offending_tori.empty()) {
    std::cout << "non-separating tori:";
    for (const auto& t : inv.offending_tori) std::cout << " " << t;
    std::cout << "\n";
  }
  if (opt.umap > 0) {
    const auto tower = ech::u_map_tower(model, opt.umap, mode);
    std::cout << "U-map tower:";
    for (std::size_t i = 0; i < tower.levels.size(); ++i) {
      std::cout << (i ? " -> " : " ") << tower.levels[i].to_string();
    }
    std::cout << "\n";
    std::cout << "steps: " << tower.steps << ", reaches e^0∅: " << yes_no(tower.reaches_empty)
              << ", every level a cycle: " << yes_no(tower.all_cycles) << "\n";
  }
  return kOk;
}

// --- index ------------------------------------------------------------------

int cmd_index(const Globals& g, const std::string& path) {
  json doc;
  try {
    doc = ptorsion::io::parse_json(read_file(path));
  } catch (const ptorsion::io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  const json* records = &doc;
  if (doc.is_object() && doc.contains("records")) records = &doc["records"];
  if (!records->is_array()) throw InputError(path + ": expected an array of records or {\"records\": [...]}");

  json out = json::array();
  bool negative = false;
  for (const auto& rec : *records) {
    json r;
    try {
      r = ptorsion::io::evaluate_index_record(rec);
    } catch (const ptorsion::io::ParseError& e) {
      throw InputError(path + ": " + e.what());
    }
    negative = negative || !r["errors"].empty() || (r.contains("violations") && !r["violations"].empty());
    out.push_back(std::move(r));
  }

  if (g.json) {
    print_json(g, out);
  } else if (!g.quiet) {
    static const char* fields[] = {"fredholm_index",    "normal_riemann_roch", "constrained_index",
                                   "constrained_normal_chern", "adjunction_residual", "ech_index",
                                   "cover_index",       "ghost_contribution"};
    for (const auto& r : out) {
      std::cout << (r.contains("label") ? r["label"].get<std::string>() : std::string("record")) << ":";
      for (const char* f : fields) {
        if (r.contains(f) && r[f].is_number_integer()) std::cout << " " << f << "=" << r[f].get<std::int64_t>();
      }
      std::cout << "\n";
      if (r.contains("violations")) {
        for (const auto& v : r["violations"]) std::cout << "  violation: " << v.get<std::string>() << "\n";
      }
      for (const auto& [f, msg] : r["errors"].items()) std::cout << "  " << f << ": " << msg.get<std::string>() << "\n";
      if (r.contains("warnings")) {
        for (const auto& w : r["warnings"]) std::cout << "  warning: " << w.get<std::string>() << "\n";
      }
    }
  }
  return negative ? kNegative : kOk;
}

// --- catalog ----------------------------------------------------------------

int cmd_catalog(const Globals& g, std::string out_dir, const std::vector<int>& bounds, unsigned threads) {
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    out_dir = env && *env ? env : "catalog";
  }
  std::optional<ptorsion::enumerate::Bounds> b;
  if (!bounds.empty()) {
    if (bounds[0] < 1 || bounds[1] < 0) throw InputError("--enumerate needs max_pieces >= 1 and max_edges >= 0");
    b = ptorsion::enumerate::Bounds{static_cast<std::size_t>(bounds[0]), bounds[1]};
  }
  ptorsion::catalog::WriteSummary summary;
  try {
    summary = ptorsion::catalog::write_catalog(out_dir, b, threads);
  } catch (const ptorsion::catalog::CatalogMismatch& e) {
    std::cerr << "ptorsion: " << e.what() << "\n";
    return kNegative;
  }
  if (g.json) {
    json files = json::array();
    for (const auto& f : summary.files) files.push_back(f.string());
    print_json(g, {{"out_dir", out_dir},
                   {"models", summary.models},
                   {"enumerated", summary.enumerated},
                   {"files", files},
                   {"soft_mismatches", summary.soft_mismatches.size()}});
  } else if (!g.quiet) {
    std::cout << "wrote " << summary.models << " models";
    if (b) std::cout << " and " << summary.enumerated << " enumerated domains";
    std::cout << " to " << out_dir << "\n";
  }
  for (const auto& m : summary.soft_mismatches) {
    std::cerr << "warning: " << m.model << " " << m.field << ": expected " << m.expected.dump() << ", got "
              << m.actual.dump() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar torsion and ECH contact invariant toolkit for blown up summed open books", "ptorsion"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "Emit machine-readable JSON");
  app.add_flag("-q,--quiet", globals.quiet, "Suppress normal output");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a domain file against every structural invariant");
  validate->add_option("file", path, "Domain JSON file")->required();

  bool require_torsion = false;
  auto* analyze = app.add_subcommand("analyze", "Planar torsion order, separation and Giroux verdict");
  analyze->add_option("file", path, "Domain JSON file")->required();
  analyze->add_flag("--require-torsion", require_torsion, "Exit 1 when the domain has no planar torsion");

  EchOptions ech_opt;
  auto* ech = app.add_subcommand("ech", "Differential of gamma_0, contact invariant and U-map tower");
  ech->add_option("file", path, "Domain JSON file")->required();
  ech->add_flag("--twisted", ech_opt.twisted, "Use twisted coefficients in Z[H_2(M)]");
  ech->add_option("--umap", ech_opt.umap, "Trace the U-map tower from level d")->check(CLI::NonNegativeNumber);
  ech->add_option("--piece", ech_opt.piece, "Planar piece to use instead of the torsion witness");
  ech->add_option("--k0", ech_opt.k0, "Cover bound for Conley-Zehnder data")->check(CLI::PositiveNumber);

  auto* index = app.add_subcommand("index", "Evaluate a batch of index records");
  index->add_option("file", path, "JSON array of records")->required();

  std::string out_dir;
  std::vector<int> bounds;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* catalog = app.add_subcommand("catalog", "Write the named example models and optionally an enumeration");
  catalog->add_option("--out", out_dir, std::string("Output directory (default: $") + kOutDirEnv + " or ./catalog)");
  catalog->add_option("--enumerate", bounds, "Enumerate all domains up to MAX_PIECES pieces and MAX_EDGES edges")
      ->expected(2);
  catalog->add_option("--threads", threads, "Worker threads for the enumeration")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(globals, path);
    if (*analyze) return cmd_analyze(globals, path, require_torsion);
    if (*ech) return cmd_ech(globals, path, ech_opt);
    if (*index) return cmd_index(globals, path);
    if (*catalog) return cmd_catalog(globals, out_dir, bounds, threads);
  } catch (const InputError& e) {
    std::cerr << "ptorsion: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "ptorsion: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
