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

// Finite distributive lattices as bases: join-irreducibles, the points
// A → 2, and the Birkhoff correspondence between the two.

#ifndef RIGREP_SPECTRUM_HPP_
#define RIGREP_SPECTRUM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "rigrep/rig.hpp"

namespace rigrep {

/// A finite poset. `elements[i]` records which element of the ambient
/// lattice node i stands for, when there is one.
class Poset {
 public:
  Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq,
        std::vector<Elem> elements = {});

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  const std::vector<Elem>& elements() const { return elements_; }

  /// Pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<Elem> elements_;
};

/// The canonical order of a rig with idempotent addition as a poset.
Poset order_poset(const FiniteRig& d);

/// A point p: A → 2 together with its filter p⁻¹(1). The constructor checks
/// that the filter is an upward-closed, prime, multiplicative set without 0.
class SpectrumPoint {
 public:
  explicit SpectrumPoint(RigMorphism morphism);

  const RigMorphism& morphism() const { return morphism_; }
  const std::vector<Elem>& filter() const { return filter_; }
  bool contains(Elem x) const;

 private:
  RigMorphism morphism_;
  std::vector<Elem> filter_;
};

/// Throws NotLattice.
Poset join_irreducibles(const FiniteRig& d);

std::vector<SpectrumPoint> spectrum(const RigRef& a);

struct Birkhoff {
  Poset irreducibles;
  std::vector<SpectrumPoint> points;
  /// point_of[i]: index of the point j ↦ (j ≤ d) for irreducible i.
  std::vector<std::size_t> point_of;
  /// irreducible_of[p]: the irreducible generating point p's filter.
  std::vector<std::size_t> irreducible_of;
};

/// Throws NotLattice, or NoSuchFactorization if the correspondence fails.
Birkhoff birkhoff(const RigRef& d);

/// Indices into `points` of the points sending x to 1.
std::vector<std::size_t> basic_open(const std::vector<SpectrumPoint>& points,
                                    Elem x);
std::vector<std::size_t> basic_open(const RigRef& a, Elem x);

/// All ordered pairs (a, b) with a + b = d.
std::vector<std::pair<Elem, Elem>> binary_covers(const FiniteRig& d, Elem top);

/// Precomposition with η is a bijection spectrum(L A) → spectrum(A), and
/// basic opens correspond: σ(x) = σ(η x).
bool spectrum_precomposition_bijective(const RigRef& a);

}  // namespace rigrep

#endif  // RIGREP_SPECTRUM_HPP_
