/* Copyright 2026 The rigrep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Generators for the standard finite algebras and the fixed catalogs the
// test suites quantify over.
//
// Short names accepted by `by_name`:
//   T      the trivial rig          2      the lattice {0 < 1}
//   Cn     the n-element chain      Ln     the n-element Łukasiewicz chain
//   Bk     the Boolean lattice 2^k  Nn     {0, 1, ..., n-1}, + and · truncated
//   RS     random integral rig from seed S; RS_n fixes its size n
//   AxB    product of two or more of the above (e.g. C3xL3)

#ifndef RIGREP_CATALOG_HPP_
#define RIGREP_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rigrep/residuated.hpp"
#include "rigrep/rig.hpp"

namespace rigrep {

/// The lattice whose order is `leq`; + is join and · is meet. Throws
/// NotLattice if some pair has no join or meet.
RigRef lattice_from_order(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq);

/// Labels "0", "a", "b", ..., "1". n ≥ 1 and n ≤ 32.
RigRef chain(std::size_t n);
/// {0, 1/(n-1), ..., 1} with x + y = max and x·y = max(0, x + y - 1);
/// labels are reduced fractions, with 1/2 written "h". 2 ≤ n ≤ 32.
RigRef lukasiewicz(std::size_t n);
/// Subsets of a k-element set, labelled by bit strings. 1 ≤ k ≤ 5.
RigRef boolean_lattice(std::size_t k);
/// {0, ..., n-1} with truncated sum and product; integral only for n ≤ 2.
RigRef truncated_naturals(std::size_t n);
/// The n-element Łukasiewicz chain as an MV-algebra.
MVRef lukasiewicz_mv(std::size_t n);

/// Seeded backtracking search for an integral rig of the given size
/// (1 ≤ size ≤ 5). Deterministic per (seed, size). Throws NoModelFound.
RigRef random_integral_rig(std::uint64_t seed, std::size_t size);
/// Size drawn from the seed in [2, 5].
RigRef random_integral_rig(std::uint64_t seed);

/// Resolves a short name (see above). Throws ParseError.
RigRef by_name(const std::string& name);

struct CatalogEntry {
  std::string name;
  RigRef rig;
};

/// 2, C3..C6, L2..L6, B1..B4, pairwise products of {2, C3, L3}, N3,
/// and 50 random integral rigs.
std::vector<CatalogEntry> rig_catalog();
/// The integral members of rig_catalog.
std::vector<CatalogEntry> integral_catalog();
/// Distributive lattices of size ≤ 5 up to isomorphism, then B3 and B4.
std::vector<CatalogEntry> lattice_catalog();
/// Ł2..Ł6 and the pairwise products of Ł2..Ł4, as MV-algebras.
std::vector<MVRef> mv_catalog();

/// Deliberately broken tables. Each fails validate_rig.
struct Corruption {
  std::string description;
  RigTables tables;
};

std::vector<Corruption> corrupted_tables();

}  // namespace rigrep

#endif  // RIGREP_CATALOG_HPP_
