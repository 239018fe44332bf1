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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ptorsion {

enum class EndMarker { Source, Target };
enum class Sign { Plus, Minus };

struct BindingSlot {
  std::string name;
  bool operator==(const BindingSlot&) const = default;
};

struct BoundarySlot {
  std::string name;
  bool operator==(const BoundarySlot&) const = default;
};

struct InterfaceSlot {
  std::string edge;
  EndMarker end = EndMarker::Source;
  bool operator==(const InterfaceSlot&) const = default;
};

// One boundary component of a page: a binding circle, a boundary torus of
// the manifold, or one side of an interface torus.
using Slot = std::variant<BindingSlot, BoundarySlot, InterfaceSlot>;

inline constexpr std::string_view kTrivialMonodromy = "trivial";

// An irreducible subdomain: an S^1-family of connected pages.
struct Piece {
  std::string id;
  int genus = 0;
  std::vector<Slot> slots;
  std::string monodromy{kTrivialMonodromy};

  // Euler characteristic of a page, 2 - 2g - #slots.
  int page_euler_characteristic() const;
  std::size_t binding_count() const;
  std::size_t boundary_count() const;
  std::size_t interface_count() const;

  bool operator==(const Piece&) const = default;
};

// Which constructor produced a torus. Metadata only; never consulted by the
// analyses.
enum class TorusOrigin { Input, BlownUpBinding, BindingSum, DividingCurve, BoundaryCurve };

std::string_view to_string(TorusOrigin origin);
std::optional<TorusOrigin> torus_origin_from_string(std::string_view text);

struct SlotRef {
  std::size_t piece = 0;
  std::size_t slot = 0;
  bool operator==(const SlotRef&) const = default;
};

struct Edge {
  std::string id;
  SlotRef source;
  SlotRef target;

  bool is_self_edge() const { return source.piece == target.piece; }
};

// A blown up summed open book presented as a decorated multigraph: pieces are
// vertices, interface tori are edges, binding circles and boundary tori are
// decorations on the vertices.
//
// A Domain may be ill-formed (hand-built or parsed input); validate() reports
// every problem. The constructors below only ever produce well-formed values.
class Domain {
 public:
  using SignMap = std::map<std::string, Sign>;

  Domain() = default;
  explicit Domain(std::vector<Piece> pieces, std::map<std::string, TorusOrigin> provenance = {},
                  std::optional<SignMap> s1_signs = std::nullopt);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::map<std::string, TorusOrigin>& provenance() const { return provenance_; }
  const std::optional<SignMap>& s1_signs() const { return s1_signs_; }

  bool empty() const { return pieces_.empty(); }
  std::size_t piece_index(std::string_view id) const;  // throws InvalidReference
  const Piece& piece(std::string_view id) const;

  std::vector<std::string> binding_names() const;
  std::vector<std::string> boundary_names() const;
  std::vector<std::string> edge_ids() const;

  // Interface edges with both endpoints resolved, in order of first
  // appearance. Throws InvariantViolation if some edge is not referenced by
  // exactly one source and one target slot.
  std::vector<Edge> edges() const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<Piece> pieces_;
  std::map<std::string, TorusOrigin> provenance_;
  std::optional<SignMap> s1_signs_;
};

// --- constructors ----------------------------------------------------------

// One connected open book with `binding_count` binding circles.
Domain new_open_book(int genus, int binding_count, std::string monodromy = std::string(kTrivialMonodromy));

// Names of d1 are kept; names of d2 that collide with anything already used
// receive trailing primes until unique.
Domain disjoint_union(const Domain& d1, const Domain& d2);

Domain blow_up(const Domain& d, std::string_view binding);

// b1 becomes the source end and b2 the target end of a fresh interface edge.
Domain binding_sum(const Domain& d, std::string_view b1, std::string_view b2);

struct DualGraph {
  struct Region {
    int genus = 0;
    Sign sign = Sign::Plus;
    int slot_count = 0;
  };
  struct RegionSlot {
    std::size_t region = 0;
    std::size_t slot = 0;
  };
  // A component of the dividing multicurve. `second` is empty for a component
  // of the surface boundary.
  struct Curve {
    RegionSlot first;
    std::optional<RegionSlot> second;
  };

  std::vector<Region> regions;
  std::vector<Curve> curves;
};

// The S^1-invariant contact structure on S^1 x Sigma determined by a dividing
// multicurve, presented by its dual graph.
Domain s1_invariant(const DualGraph& dual);

// --- validation and canonical form ------------------------------------------

struct ValidationReport {
  std::vector<std::string> violations;
  // Connected components of the piece multigraph, as lists of piece ids.
  std::vector<std::vector<std::string>> components;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Domain& d);

// Throws PreconditionError listing the violations unless validate(d) is clean.
void require_valid(const Domain& d);

// Reorders pieces and slots into an isomorphism-invariant order and renames
// everything (pieces P0.., interface edges I0.., bindings B0.., boundary tori
// T0..). Exact for domains whose tie groups admit at most
// kCanonicalPermutationLimit orderings; beyond that ties are broken by input
// order.
Domain canonicalize(const Domain& d);

inline constexpr std::size_t kCanonicalPermutationLimit = 200000;

bool isomorphic(const Domain& a, const Domain& b);

}  // namespace ptorsion
