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

#ifndef RIGREP_RETICULATION_HPP_
#define RIGREP_RETICULATION_HPP_

#include <array>
#include <optional>
#include <utility>

#include "rigrep/congruence.hpp"
#include "rigrep/localization.hpp"
#include "rigrep/rig.hpp"

namespace rigrep {

/// The universal distributive-lattice quotient η: A → L A, where η identifies
/// x and y when each has a power below the other.
struct Reticulation {
  RigRef source;
  Congruence congruence;
  RigRef lattice;
  RigMorphism unit;

  /// Least-index preimage of a lattice element.
  Elem least_preimage(Elem l) const;
};

/// Smallest m ≥ 1 with x^m ≤ y, if any.
std::optional<std::size_t> power_below(const FiniteRig& a, Elem x, Elem y);

/// Exponents (m, k) with x^m ≤ y and y^k ≤ x, when x ∼ y.
std::optional<std::pair<std::size_t, std::size_t>> similarity_witness(
    const FiniteRig& a, Elem x, Elem y);

/// (x + y)^{mn} ≤ x^m + y^n for all x, y and all m, n below the power-cycle
/// bound. Returns the first counterexample (x, y, m, n) if there is one.
std::optional<std::array<std::size_t, 4>> power_inequality_counterexample(
    const FiniteRig& a);

/// Throws NotIntegral. Verifies the result is a distributive lattice and the
/// unit is surjective and local.
Reticulation reticulate(const RigRef& a);

/// L h: the unique lattice map with (L h) ∘ η_dom = η_cod ∘ h.
/// Throws NoSuchFactorization if that square cannot be completed.
RigMorphism reticulate_morphism(const RigMorphism& h, const Reticulation& dom,
                                const Reticulation& cod);
RigMorphism reticulate_morphism(const RigMorphism& h);

/// Every morphism A → D factors uniquely through η. D must be a lattice.
bool verify_reticulation_universal(const RigRef& a, const RigRef& lattice);

struct ReticLocalizationReport {
  Localization lattice_localization;  // (L A)[(η x)⁻¹]
  Reticulation localized_reticulation;  // L(A[x⁻¹])
  bool kernels_agree = false;
  /// L(A[x⁻¹]) → (L A)[(η x)⁻¹]
  std::optional<RigMorphism> iso;
  /// The canonical A[x⁻¹] → (L A)[(η x)⁻¹] exists and equals iso ∘ η.
  bool commutes = false;

  bool ok() const { return kernels_agree && iso && commutes; }
};

ReticLocalizationReport retic_localization_compat(const RigRef& a, Elem x);

}  // namespace rigrep

#endif  // RIGREP_RETICULATION_HPP_
