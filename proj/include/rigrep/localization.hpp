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

// Localization of integral rigs. In an integral rig the only invertible
// element is 1, so inverting a submonoid F means forcing it to 1; the result
// is the quotient by x ≡ y iff w·x ≤ y and v·y ≤ x for some w, v in F.

#ifndef RIGREP_LOCALIZATION_HPP_
#define RIGREP_LOCALIZATION_HPP_

#include <optional>
#include <vector>

#include "rigrep/congruence.hpp"
#include "rigrep/rig.hpp"

namespace rigrep {

struct Localization {
  RigRef source;
  /// The closed submonoid that was inverted, sorted.
  std::vector<Elem> monoid;
  Congruence congruence;
  RigRef rig;
  /// Sends every member of `monoid` to 1.
  RigMorphism unit;
};

/// Smallest multiplicatively closed set containing `seeds` and 1, sorted.
std::vector<Elem> submonoid_closure(const FiniteRig& a,
                                    const std::vector<Elem>& seeds);

/// Throws NotIntegral.
Congruence localization_congruence(const RigRef& a, const std::vector<Elem>& monoid);

/// `monoid` is closed first, so any seed set is accepted.
Localization localize(const RigRef& a, const std::vector<Elem>& monoid);
Localization localize_at(const RigRef& a, Elem x);

/// The ↓a realization of A[a⁻¹] for strongly idempotent a.
struct DownSetLocalization {
  RigRef rig;
  /// x ↦ a·x
  RigMorphism unit;
  /// The comparison iso from `rig` onto localize_at(A, a).rig, commuting with
  /// the two units.
  RigMorphism comparison;
};

/// Throws NotIntegral or NotStronglyIdempotent.
DownSetLocalization localize_strong_idem(const RigRef& a, Elem x);

/// The map from `from.rig` to `to.rig` under A, when `to` inverts everything
/// `from` does. nullopt otherwise.
std::optional<RigMorphism> canonical_map(const Localization& from,
                                         const Localization& to);

/// Every morphism A → B sending F to 1 factors uniquely through the unit.
bool verify_localization_universal(const RigRef& a, const std::vector<Elem>& monoid,
                                   const RigRef& b);

/// Localizing at x and then at the image of y agrees with localizing at
/// closure{x, y}: same kernel on A and the iso induced between the results.
bool stepwise_localization_agrees(const RigRef& a, Elem x, Elem y);

struct PushoutPullbackReport {
  Localization at_sum;      // A[(a+b)⁻¹]
  Localization at_first;    // A[a⁻¹]
  Localization at_second;   // A[b⁻¹]
  Localization at_product;  // A[(ab)⁻¹]
  bool commutes = false;
  bool pullback = false;
  bool pushout = false;
  std::size_t fiber_product_size = 0;

  bool ok() const { return commutes && pullback && pushout; }
};

/// Throws NotIntegral.
PushoutPullbackReport pushout_pullback_check(const RigRef& a, Elem x, Elem y);

}  // namespace rigrep

#endif  // RIGREP_LOCALIZATION_HPP_
