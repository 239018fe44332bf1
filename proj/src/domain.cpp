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

#include "ptorsion/domain.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "ptorsion/errors.hpp"

namespace ptorsion {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Every name occurring in the domain: piece ids, binding and boundary names,
// interface edge ids.
std::set<std::string> all_names(const Domain& d) {
  std::set<std::string> names;
  for (const auto& p : d.pieces()) {
    names.insert(p.id);
    for (const auto& s : p.slots) {
      std::visit(overloaded{[&](const BindingSlot& b) { names.insert(b.name); },
                            [&](const BoundarySlot& b) { names.insert(b.name); },
                            [&](const InterfaceSlot& i) { names.insert(i.edge); }},
                 s);
    }
  }
  return names;
}

std::string fresh_edge_id(const std::set<std::string>& used) {
  for (std::size_t k = 0;; ++k) {
    std::string candidate = "I" + std::to_string(k);
    if (!used.contains(candidate)) return candidate;
  }
}

// Locates the unique binding slot with the given name.
SlotRef find_binding(const Domain& d, std::string_view name) {
  std::optional<SlotRef> found;
  for (std::size_t i = 0; i < d.pieces().size(); ++i) {
    const auto& slots = d.pieces()[i].slots;
    for (std::size_t j = 0; j < slots.size(); ++j) {
      if (const auto* b = std::get_if<BindingSlot>(&slots[j]); b && b->name == name) {
        found = SlotRef{i, j};
      }
    }
  }
  if (!found) throw InvalidReference("no binding circle named '" + std::string(name) + "'");
  return *found;
}

}  // namespace

int Piece::page_euler_characteristic() const {
  return 2 - 2 * genus - static_cast<int>(slots.size());
}

std::size_t Piece::binding_count() const {
  return std::count_if(slots.begin(), slots.end(),
                       [](const Slot& s) { return std::holds_alternative<BindingSlot>(s); });
}

std::size_t Piece::boundary_count() const {
  return std::count_if(slots.begin(), slots.end(),
                       [](const Slot& s) { return std::holds_alternative<BoundarySlot>(s); });
}

std::size_t Piece::interface_count() const {
  return std::count_if(slots.begin(), slots.end(),
                       [](const Slot& s) { return std::holds_alternative<InterfaceSlot>(s); });
}

std::string_view to_string(TorusOrigin origin) {
  switch (origin) {
    case TorusOrigin::Input: return "input";
    case TorusOrigin::BlownUpBinding: return "blown-up binding";
    case TorusOrigin::BindingSum: return "binding sum";
    case TorusOrigin::DividingCurve: return "dividing curve";
    case TorusOrigin::BoundaryCurve: return "boundary curve";
  }
  return "input";
}

std::optional<TorusOrigin> torus_origin_from_string(std::string_view text) {
  for (auto o : {TorusOrigin::Input, TorusOrigin::BlownUpBinding, TorusOrigin::BindingSum,
                 TorusOrigin::DividingCurve, TorusOrigin::BoundaryCurve}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

Domain::Domain(std::vector<Piece> pieces, std::map<std::string, TorusOrigin> provenance,
               std::optional<SignMap> s1_signs)
    : pieces_(std::move(pieces)), provenance_(std::move(provenance)), s1_signs_(std::move(s1_signs)) {}

std::size_t Domain::piece_index(std::string_view id) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].id == id) return i;
  }
  throw InvalidReference("no piece with id '" + std::string(id) + "'");
}

const Piece& Domain::piece(std::string_view id) const { return pieces_[piece_index(id)]; }

std::vector<std::string> Domain::binding_names() const {
  std::vector<std::string> out;
  for (const auto& p : pieces_)
    for (const auto& s : p.slots)
      if (const auto* b = std::get_if<BindingSlot>(&s)) out.push_back(b->name);
  return out;
}

std::vector<std::string> Domain::boundary_names() const {
  std::vector<std::string> out;
  for (const auto& p : pieces_)
    for (const auto& s : p.slots)
      if (const auto* b = std::get_if<BoundarySlot>(&s)) out.push_back(b->name);
  return out;
}

std::vector<std::string> Domain::edge_ids() const {
  std::vector<std::string> out;
  for (const auto& p : pieces_)
    for (const auto& s : p.slots)
      if (const auto* i = std::get_if<InterfaceSlot>(&s))
        if (std::find(out.begin(), out.end(), i->edge) == out.end()) out.push_back(i->edge);
  return out;
}

std::vector<Edge> Domain::edges() const {
  std::vector<Edge> out;
  std::map<std::string, std::size_t> index;
  std::vector<int> sources, targets;
  for (std::size_t pi = 0; pi < pieces_.size(); ++pi) {
    const auto& slots = pieces_[pi].slots;
    for (std::size_t si = 0; si < slots.size(); ++si) {
      const auto* iface = std::get_if<InterfaceSlot>(&slots[si]);
      if (!iface) continue;
      auto [it, inserted] = index.try_emplace(iface->edge, out.size());
      if (inserted) {
        out.push_back(Edge{iface->edge, {}, {}});
        sources.push_back(0);
        targets.push_back(0);
      }
      const std::size_t e = it->second;
      if (iface->end == EndMarker::Source) {
        out[e].source = SlotRef{pi, si};
        ++sources[e];
      } else {
        out[e].target = SlotRef{pi, si};
        ++targets[e];
      }
    }
  }
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (sources[e] != 1 || targets[e] != 1) {
      throw InvariantViolation("interface edge '" + out[e].id + "' has " + std::to_string(sources[e]) +
                               " source and " + std::to_string(targets[e]) + " target ends");
    }
  }
  return out;
}

// --- constructors ----------------------------------------------------------

Domain new_open_book(int genus, int binding_count, std::string monodromy) {
  if (genus < 0) throw PreconditionError("page genus must be nonnegative");
  if (binding_count < 1) throw PreconditionError("an open book needs at least one binding circle");
  Piece p;
  p.id = "P";
  p.genus = genus;
  p.monodromy = std::move(monodromy);
  for (int i = 1; i <= binding_count; ++i) p.slots.emplace_back(BindingSlot{"P.b" + std::to_string(i)});
  return Domain({std::move(p)});
}

Domain disjoint_union(const Domain& d1, const Domain& d2) {
  std::set<std::string> used = all_names(d1);
  std::map<std::string, std::string> rename;
  auto remap = [&](const std::string& name) -> const std::string& {
    auto it = rename.find(name);
    if (it != rename.end()) return it->second;
    std::string fresh = name;
    while (used.contains(fresh)) fresh += "'";
    used.insert(fresh);
    return rename.emplace(name, std::move(fresh)).first->second;
  };

  std::vector<Piece> pieces = d1.pieces();
  for (Piece p : d2.pieces()) {
    p.id = remap(p.id);
    for (auto& s : p.slots) {
      std::visit(overloaded{[&](BindingSlot& b) { b.name = remap(b.name); },
                            [&](BoundarySlot& b) { b.name = remap(b.name); },
                            [&](InterfaceSlot& i) { i.edge = remap(i.edge); }},
                 s);
    }
    pieces.push_back(std::move(p));
  }

  auto provenance = d1.provenance();
  for (const auto& [name, origin] : d2.provenance()) {
    auto it = rename.find(name);
    provenance.emplace(it == rename.end() ? name : it->second, origin);
  }

  std::optional<Domain::SignMap> signs;
  if ((d1.s1_signs() || d1.empty()) && (d2.s1_signs() || d2.empty()) && (d1.s1_signs() || d2.s1_signs())) {
    signs.emplace();
    if (d1.s1_signs()) *signs = *d1.s1_signs();
    if (d2.s1_signs())
      for (const auto& [id, sign] : *d2.s1_signs()) (*signs)[rename.count(id) ? rename.at(id) : id] = sign;
  }
  return Domain(std::move(pieces), std::move(provenance), std::move(signs));
}

Domain blow_up(const Domain& d, std::string_view binding) {
  const SlotRef ref = find_binding(d, binding);
  std::vector<Piece> pieces = d.pieces();
  pieces[ref.piece].slots[ref.slot] = BoundarySlot{std::string(binding)};
  auto provenance = d.provenance();
  provenance[std::string(binding)] = TorusOrigin::BlownUpBinding;
  return Domain(std::move(pieces), std::move(provenance), d.s1_signs());
}

Domain binding_sum(const Domain& d, std::string_view b1, std::string_view b2) {
  if (b1 == b2) throw PreconditionError("binding sum needs two distinct binding circles");
  const SlotRef r1 = find_binding(d, b1);
  const SlotRef r2 = find_binding(d, b2);
  const std::string edge = fresh_edge_id(all_names(d));

  std::vector<Piece> pieces = d.pieces();
  pieces[r1.piece].slots[r1.slot] = InterfaceSlot{edge, EndMarker::Source};
  pieces[r2.piece].slots[r2.slot] = InterfaceSlot{edge, EndMarker::Target};
  auto provenance = d.provenance();
  provenance[edge] = TorusOrigin::BindingSum;

  auto signs = d.s1_signs();
  if (signs) {
    const auto s1 = signs->find(pieces[r1.piece].id);
    const auto s2 = signs->find(pieces[r2.piece].id);
    if (s1 == signs->end() || s2 == signs->end() || s1->second == s2->second) signs.reset();
  }
  return Domain(std::move(pieces), std::move(provenance), std::move(signs));
}

Domain s1_invariant(const DualGraph& dual) {
  const auto& regions = dual.regions;
  std::vector<std::vector<bool>> used(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (regions[r].genus < 0) throw InvariantViolation("region " + std::to_string(r) + " has negative genus");
    if (regions[r].slot_count < 1)
      throw InvariantViolation("region " + std::to_string(r) + " has no boundary slots");
    used[r].assign(static_cast<std::size_t>(regions[r].slot_count), false);
  }

  std::vector<Piece> pieces(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r) {
    pieces[r].id = "R" + std::to_string(r);
    pieces[r].genus = regions[r].genus;
    pieces[r].slots.resize(used[r].size());
  }

  auto claim = [&](const DualGraph::RegionSlot& rs, std::size_t curve) {
    if (rs.region >= regions.size() || rs.slot >= used[rs.region].size()) {
      throw InvariantViolation("curve " + std::to_string(curve) + " references a nonexistent region slot");
    }
    if (used[rs.region][rs.slot]) {
      throw InvariantViolation("slot " + std::to_string(rs.slot) + " of region " + std::to_string(rs.region) +
                               " is used by more than one curve");
    }
    used[rs.region][rs.slot] = true;
  };

  std::map<std::string, TorusOrigin> provenance;
  for (std::size_t c = 0; c < dual.curves.size(); ++c) {
    const auto& curve = dual.curves[c];
    const std::string name = "C" + std::to_string(c);
    claim(curve.first, c);
    if (!curve.second) {
      pieces[curve.first.region].slots[curve.first.slot] = BoundarySlot{name};
      provenance[name] = TorusOrigin::BoundaryCurve;
      continue;
    }
    claim(*curve.second, c);
    const auto& a = curve.first;
    const auto& b = *curve.second;
    if (regions[a.region].sign == regions[b.region].sign) {
      throw InvariantViolation("curve " + std::to_string(c) + " pairs two regions of the same sign");
    }
    // the + side is the source end
    const bool a_plus = regions[a.region].sign == Sign::Plus;
    pieces[a.region].slots[a.slot] = InterfaceSlot{name, a_plus ? EndMarker::Source : EndMarker::Target};
    pieces[b.region].slots[b.slot] = InterfaceSlot{name, a_plus ? EndMarker::Target : EndMarker::Source};
    provenance[name] = TorusOrigin::DividingCurve;
  }

  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (std::size_t s = 0; s < used[r].size(); ++s) {
      if (!used[r][s]) {
        throw InvariantViolation("slot " + std::to_string(s) + " of region " + std::to_string(r) +
                                 " is not used by any curve");
      }
    }
  }

  Domain::SignMap signs;
  for (std::size_t r = 0; r < regions.size(); ++r) signs[pieces[r].id] = regions[r].sign;
  return Domain(std::move(pieces), std::move(provenance), std::move(signs));
}

// --- validation ------------------------------------------------------------

ValidationReport validate(const Domain& d) {
  ValidationReport report;
  auto& v = report.violations;
  const auto& pieces = d.pieces();

  std::set<std::string> piece_ids;
  std::map<std::string, int> circle_names;  // binding + boundary names
  struct Ends {
    int sources = 0;
    int targets = 0;
    std::vector<std::size_t> pieces;
  };
  std::map<std::string, Ends> ends;

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.id.empty()) v.push_back("piece #" + std::to_string(i) + " has an empty id");
    if (!piece_ids.insert(p.id).second) v.push_back("duplicate piece id '" + p.id + "'");
    if (p.genus < 0) v.push_back("piece '" + p.id + "' has negative genus");
    if (p.slots.empty()) v.push_back("piece '" + p.id + "' has no boundary slots (closed pages)");
    for (const auto& s : p.slots) {
      std::visit(overloaded{[&](const BindingSlot& b) { ++circle_names[b.name]; },
                            [&](const BoundarySlot& b) { ++circle_names[b.name]; },
                            [&](const InterfaceSlot& f) {
                              auto& e = ends[f.edge];
                              (f.end == EndMarker::Source ? e.sources : e.targets)++;
                              e.pieces.push_back(i);
                            }},
                 s);
    }
  }

  for (const auto& [name, count] : circle_names) {
    if (name.empty()) v.push_back("binding or boundary slot with an empty name");
    if (count > 1) v.push_back("name '" + name + "' is used by " + std::to_string(count) + " slots");
    if (ends.contains(name)) v.push_back("name '" + name + "' is used both as a circle and as an edge id");
  }
  for (const auto& [id, e] : ends) {
    if (e.sources != 1 || e.targets != 1) {
      v.push_back("interface edge '" + id + "' has " + std::to_string(e.sources) + " source and " +
                  std::to_string(e.targets) + " target ends (expected 1 and 1)");
    }
  }

  for (const auto& [name, origin] : d.provenance()) {
    bool is_torus = ends.contains(name);
    if (!is_torus) {
      for (const auto& p : pieces)
        for (const auto& s : p.slots)
          if (const auto* b = std::get_if<BoundarySlot>(&s); b && b->name == name) is_torus = true;
    }
    if (!is_torus) v.push_back("provenance entry '" + name + "' does not name a torus");
  }

  if (const auto& signs = d.s1_signs()) {
    for (const auto& [id, sign] : *signs) {
      if (!piece_ids.contains(id)) v.push_back("s1 sign given for unknown piece '" + id + "'");
    }
    for (const auto& p : pieces) {
      if (!signs->contains(p.id)) v.push_back("s1 certificate has no sign for piece '" + p.id + "'");
    }
    for (const auto& [id, e] : ends) {
      if (e.pieces.size() != 2) continue;
      auto a = signs->find(pieces[e.pieces[0]].id);
      auto b = signs->find(pieces[e.pieces[1]].id);
      if (a != signs->end() && b != signs->end() && a->second == b->second) {
        v.push_back("interface edge '" + id + "' joins two pieces of the same s1 sign");
      }
    }
  }

  // components, via union-find over every edge id that touches >= 2 pieces
  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [id, e] : ends) {
    for (std::size_t k = 1; k < e.pieces.size(); ++k) parent[find(e.pieces[k])] = find(e.pieces[0]);
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t i = 0; i < pieces.size(); ++i) groups[find(i)].push_back(pieces[i].id);
  for (auto& [root, ids] : groups) report.components.push_back(std::move(ids));
  std::sort(report.components.begin(), report.components.end());
  return report;
}

void require_valid(const Domain& d) {
  const auto report = validate(d);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "domain is not well-formed:";
  for (const auto& s : report.violations) msg << "\n  " << s;
  throw PreconditionError(msg.str());
}

// --- canonical form ----------------------------------------------------------

namespace {

struct PieceKey {
  int genus;
  std::string monodromy;
  int sign;  // 0 uncertified, 1 plus, 2 minus
  std::size_t bindings;
  std::size_t boundaries;
  std::size_t self_edges;
  std::size_t degree;
  auto operator<=>(const PieceKey&) const = default;
};

std::vector<std::size_t> rank_of(const auto& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> rank(keys.size());
  std::size_t r = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && keys[order[k - 1]] < keys[order[k]]) ++r;
    rank[order[k]] = r;
  }
  return rank;
}

// Piece ordering minimizing the flattened directed adjacency matrix among
// orderings that respect the refined colour classes.
std::vector<std::size_t> canonical_order(const std::vector<std::size_t>& colour,
                                         const std::vector<std::vector<int>>& adj) {
  const std::size_t n = colour.size();
  std::vector<std::size_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](auto a, auto b) { return colour[a] < colour[b]; });

  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) into base
  double perms = 1;
  for (std::size_t k = 0; k < n;) {
    std::size_t e = k;
    while (e < n && colour[base[e]] == colour[base[k]]) ++e;
    if (e - k > 1) groups.emplace_back(k, e);
    for (std::size_t f = 2; f <= e - k; ++f) perms *= static_cast<double>(f);
    k = e;
  }
  if (groups.empty() || perms > static_cast<double>(kCanonicalPermutationLimit)) return base;

  auto encode = [&](const std::vector<std::size_t>& order) {
    std::vector<int> code;
    code.reserve(n * n);
    for (auto i : order)
      for (auto j : order) code.push_back(adj[i][j]);
    return code;
  };

  std::vector<std::size_t> current = base;
  for (auto [b, e] : groups) std::sort(current.begin() + b, current.begin() + e);
  std::vector<std::size_t> best = current;
  std::vector<int> best_code = encode(current);

  // odometer over per-group permutations
  while (true) {
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [b, e] = groups[g];
      if (std::next_permutation(current.begin() + b, current.begin() + e)) break;
      // wrapped around: group is sorted again, carry to the next group
    }
    if (g == groups.size()) break;
    auto code = encode(current);
    if (code < best_code) {
      best_code = std::move(code);
      best = current;
    }
  }
  return best;
}

}  // namespace

Domain canonicalize(const Domain& d) {
  require_valid(d);
  const auto& pieces = d.pieces();
  const std::size_t n = pieces.size();
  const auto edges = d.edges();

  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (const auto& e : edges) ++adj[e.source.piece][e.target.piece];

  std::vector<PieceKey> keys;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = pieces[i];
    int sign = 0;
    if (d.s1_signs()) sign = d.s1_signs()->at(p.id) == Sign::Plus ? 1 : 2;
    keys.push_back(PieceKey{p.genus, p.monodromy, sign, p.binding_count(), p.boundary_count(),
                            static_cast<std::size_t>(adj[i][i]), p.interface_count()});
  }

  // colour refinement by neighbourhood multisets
  auto colour = rank_of(keys);
  for (std::size_t round = 0; round < n; ++round) {
    using Sig = std::pair<std::size_t, std::vector<std::tuple<std::size_t, int, int>>>;
    std::vector<Sig> sigs(n);
    for (std::size_t i = 0; i < n; ++i) {
      sigs[i].first = colour[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (adj[i][j] || adj[j][i]) sigs[i].second.emplace_back(colour[j], adj[i][j], adj[j][i]);
      }
      std::sort(sigs[i].second.begin(), sigs[i].second.end());
    }
    auto next = rank_of(sigs);
    if (next == colour) break;
    colour = std::move(next);
  }

  const auto order = canonical_order(colour, adj);
  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  auto origin_of = [&](const std::string& name) {
    auto it = d.provenance().find(name);
    return it == d.provenance().end() ? std::string() : std::string(to_string(it->second));
  };

  // other endpoint of each interface slot, in new indices
  std::map<std::string, const Edge*> edge_by_id;
  for (const auto& e : edges) edge_by_id[e.id] = &e;
  auto slot_sort_key = [&](std::size_t piece, const Slot& s, std::size_t original) {
    return std::visit(
        overloaded{[&](const BindingSlot&) { return std::tuple(0, std::size_t{0}, 0, std::string(), original); },
                   [&](const BoundarySlot& b) {
                     return std::tuple(1, std::size_t{0}, 0, origin_of(b.name), original);
                   },
                   [&](const InterfaceSlot& f) {
                     const Edge* e = edge_by_id.at(f.edge);
                     const std::size_t other =
                         f.end == EndMarker::Source ? e->target.piece : e->source.piece;
                     (void)piece;
                     return std::tuple(2, new_index[other], f.end == EndMarker::Source ? 0 : 1,
                                       origin_of(f.edge), original);
                   }},
        s);
  };

  std::vector<Piece> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t old = order[k];
    const auto& src = pieces[old];
    std::vector<std::size_t> idx(src.slots.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
      return slot_sort_key(old, src.slots[a], a) < slot_sort_key(old, src.slots[b], b);
    });
    out[k] = src;
    out[k].slots.clear();
    for (auto i : idx) out[k].slots.push_back(src.slots[i]);
  }

  // rename in canonical order of appearance
  std::map<std::string, std::string> rename;
  std::size_t nb = 0, nt = 0, ni = 0;
  std::map<std::string, std::size_t> edge_rank;
  for (std::size_t k = 0; k < n; ++k) {
    for (auto& s : out[k].slots) {
      std::visit(overloaded{[&](BindingSlot& b) { b.name = rename[b.name] = "B" + std::to_string(nb++); },
                            [&](BoundarySlot& b) { b.name = rename[b.name] = "T" + std::to_string(nt++); },
                            [&](InterfaceSlot& f) {
                              auto [it, fresh] = rename.try_emplace(f.edge);
                              if (fresh) {
                                edge_rank[f.edge] = ni;
                                it->second = "I" + std::to_string(ni++);
                              }
                            }},
                 s);
    }
  }
  // final pass: parallel interface slots ordered by edge name
  for (std::size_t k = 0; k < n; ++k) {
    auto& slots = out[k].slots;
    std::stable_sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
      const auto* fa = std::get_if<InterfaceSlot>(&a);
      const auto* fb = std::get_if<InterfaceSlot>(&b);
      if (!fa || !fb) return false;
      const Edge* ea = edge_by_id.at(fa->edge);
      const Edge* eb = edge_by_id.at(fb->edge);
      auto other = [&](const InterfaceSlot* f, const Edge* e) {
        return new_index[f->end == EndMarker::Source ? e->target.piece : e->source.piece];
      };
      return std::tuple(other(fa, ea), fa->end == EndMarker::Source ? 0 : 1, edge_rank.at(fa->edge)) <
             std::tuple(other(fb, eb), fb->end == EndMarker::Source ? 0 : 1, edge_rank.at(fb->edge));
    });
    for (auto& s : slots)
      if (auto* f = std::get_if<InterfaceSlot>(&s)) f->edge = rename.at(f->edge);
  }

  std::optional<Domain::SignMap> signs;
  if (d.s1_signs()) signs.emplace();
  for (std::size_t k = 0; k < n; ++k) {
    const std::string old_id = out[k].id;
    out[k].id = "P" + std::to_string(k);
    if (signs) (*signs)[out[k].id] = d.s1_signs()->at(old_id);
  }

  std::map<std::string, TorusOrigin> provenance;
  for (const auto& [name, origin] : d.provenance()) provenance[rename.at(name)] = origin;
  return Domain(std::move(out), std::move(provenance), std::move(signs));
}

bool isomorphic(const Domain& a, const Domain& b) {
  const auto ca = canonicalize(a);
  const auto cb = canonicalize(b);
  return ca.pieces() == cb.pieces() && ca.s1_signs() == cb.s1_signs();
}

}  // namespace ptorsion
