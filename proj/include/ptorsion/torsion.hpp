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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptorsion/cycle_space.hpp"
#include "ptorsion/domain.hpp"

namespace ptorsion {

// Separation of M along an interface torus is modelled as bridge-ness of the
// corresponding edge in the piece multigraph: pieces are connected and M is
// glued from them along interface tori.

struct TorsionCandidate {
  std::string piece;
  int order = 0;
  bool fully_separating = false;
};

struct TorsionReport {
  std::optional<int> order;
  std::optional<std::string> witness;
  std::vector<TorsionCandidate> candidates;
  bool fully_separating = false;
  bool partially_planar = false;
  bool symmetric = false;
};

bool is_symmetric(const Domain& d);

namespace detail {
// is_symmetric without the validity check.
bool is_symmetric_unchecked(const Domain& d);
}  // namespace detail

// Genus-zero pieces that do not touch the boundary of M.
std::vector<std::string> planar_pieces(const Domain& d);

// Every planar piece with non-empty padding in a non-symmetric domain is a
// candidate of order (#slots - 1). The reported order is the minimum; among
// minimal candidates a fully separating one is preferred as witness, then the
// first in piece order.
TorsionReport planar_torsion_order(const Domain& d);

CycleClass torus_h2_class(const Domain& d, std::string_view edge);
bool torus_separates(const Domain& d, std::string_view edge);

// Throws PreconditionError when `piece` is not a planar piece of d.
bool is_fully_separating(const Domain& d, std::string_view piece);

// Omega-separating check for a user-supplied linear functional on the cycle
// quotient: true iff the functional vanishes on every interface torus meeting
// the planar piece. With all functionals this is the fully separating
// condition.
using CycleFunctional = std::function<std::int64_t(const CycleClass&)>;
bool is_omega_separating(const Domain& d, std::string_view piece, const CycleFunctional& omega);

enum class ClosedClass { TorsionDomain, PlanarOpenBook, SymmetricDiskPages, NotApplicable };
std::string_view to_string(ClosedClass c);

// For a closed connected domain containing a fully separating planar piece:
// either a planar torsion domain, an ordinary planar open book, or the
// symmetric sum of two disk open books (tight S^1 x S^2).
ClosedClass classify_closed(const Domain& d);

enum class GirouxVerdict { NoGirouxTorsion, Inconclusive };
std::string_view to_string(GirouxVerdict v);

// Only for S^1-invariant domains without boundary. No disk region means no
// contractible dividing curve; no annulus between two distinct curves means no
// pair of isotopic dividing curves.
GirouxVerdict giroux_torsion_obstruction(const Domain& d);

// An embedding of d certifies PT <= order.
std::optional<int> pt_upper_bound(const Domain& d);

}  // namespace ptorsion
