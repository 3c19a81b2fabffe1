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

// The representing sheaf of an integral rig A over its reticulation L A:
// the fiber at η x is A[x⁻¹], restrictions are the canonical maps between
// localizations, and the global sections recover A.

#ifndef RIGREP_SHEAF_HPP_
#define RIGREP_SHEAF_HPP_

#include <optional>
#include <vector>

#include "rigrep/localization.hpp"
#include "rigrep/reticulation.hpp"
#include "rigrep/rig.hpp"
#include "rigrep/spectrum.hpp"

namespace rigrep {

/// A functor from the opposite of a finite poset to rigs. When the base is
/// a distributive lattice, `lattice()` holds it and base node i is lattice
/// element i.
class PresheafOfRigs {
 public:
  /// `restrictions[c * n + d]` is the map fiber(d) → fiber(c) for c ≤ d and
  /// empty otherwise. Functoriality is checked exhaustively.
  PresheafOfRigs(Poset base, std::vector<RigRef> fibers,
                 std::vector<std::optional<RigMorphism>> restrictions,
                 RigRef lattice = nullptr);

  const Poset& base() const { return base_; }
  const RigRef& lattice() const { return lattice_; }
  std::size_t size() const { return fibers_.size(); }
  const RigRef& fiber(std::size_t d) const { return fibers_[d]; }
  /// fiber(d) → fiber(c); requires c ≤ d.
  const RigMorphism& restriction(std::size_t c, std::size_t d) const;

 private:
  Poset base_;
  std::vector<RigRef> fibers_;
  std::vector<std::optional<RigMorphism>> restrictions_;
  RigRef lattice_;
};

/// The same presheaf on a subposet of the base (nodes in the given order).
PresheafOfRigs restrict_to(const PresheafOfRigs& f, const std::vector<std::size_t>& nodes);

struct Representation {
  RigRef source;
  Reticulation retic;
  /// localizations[l] = A[x⁻¹] for the least-index x with η x = l.
  std::vector<Localization> localizations;
  PresheafOfRigs sheaf;
  Poset irreducibles;
  /// A → fiber(⊤).
  RigMorphism unit_iso;
};

/// Throws NotIntegral or TrivialSource. Checks the sheaf condition on all
/// binary covers, that fiber(⊥) is trivial and that fibers at
/// join-irreducibles are really local.
Representation build_representation(const RigRef& a);

/// Unique gluing over the cover a ∨ b. Requires a lattice base.
bool sheaf_condition(const PresheafOfRigs& f, Elem a, Elem b);
/// sheaf_condition for every pair of base elements.
bool sheaf_condition_all_covers(const PresheafOfRigs& f);

/// d ↦ ↓d, restriction by meet.
PresheafOfRigs lambda_presheaf(const RigRef& d);

/// Largest c ≤ l on which e restricts to 1. Throws NoLargestWitness.
Elem support_map(const Representation& r, Elem l, Elem e);

struct SupportMapReport {
  /// χ at each lattice element, fiber(l) → ↓l (as a rig of lambda_presheaf).
  std::vector<std::optional<RigMorphism>> components;
  bool morphisms = false;
  bool local = false;
  bool surjective = false;
  bool natural = false;
  /// Kernel of χ_l is the reticulation congruence of fiber(l).
  bool is_reticulation = false;

  bool ok() const {
    return morphisms && local && surjective && natural && is_reticulation;
  }
};

SupportMapReport verify_support_map(const Representation& r);

/// Rig of compatible families; over a lattice base this is isomorphic to
/// fiber(⊤), which is returned with each element's family.
struct SectionRig {
  RigRef rig;
  /// families[i]: the component in each base fiber of section i.
  std::vector<std::vector<Elem>> families;
};

SectionRig global_sections(const PresheafOfRigs& f);

struct UnitIsoReport {
  SectionRig sections;  // over the join-irreducibles
  std::optional<RigMorphism> comparison;  // A → sections.rig
  bool iso = false;
};

UnitIsoReport verify_unit_iso(const RigRef& a);
UnitIsoReport verify_unit_iso(const Representation& r);

/// A[(p⁻¹1)⁻¹] with its universal map.
Localization stalk(const RigRef& a, const SpectrumPoint& p);

struct SubdirectReport {
  std::vector<SpectrumPoint> points;
  std::vector<Localization> stalks;
  Product product;
  std::optional<RigMorphism> embedding;
  bool injective = false;
  bool components_surjective = false;
  bool factors_really_local = false;

  bool ok() const { return injective && components_surjective && factors_really_local; }
};

/// Throws NotIntegral or TrivialSource.
SubdirectReport subdirect_embedding(const RigRef& a);

/// Pulls F back along a lattice map f: D → E.
PresheafOfRigs precompose(const PresheafOfRigs& f, const RigMorphism& along);

struct MorphismRepresentation {
  RigMorphism lattice_map;  // L h
  PresheafOfRigs target;    // (L h)_* of the codomain's sheaf
  /// components[l]: fiber_A(l) → target.fiber(l)
  std::vector<RigMorphism> components;
  bool natural = false;
  bool chi_compatible = false;

  bool ok() const { return natural && chi_compatible; }
};

MorphismRepresentation represent_morphism(const RigMorphism& h);
MorphismRepresentation represent_morphism(const RigMorphism& h,
                                          const Representation& dom,
                                          const Representation& cod);

/// Really local as a rig in sheaves on a lattice: fiber(d) trivial only at
/// d = ⊥, and u + v = 1 in fiber(d) has a cover a ∨ b = d with u|a = 1 and
/// v|b = 1.
bool really_local_over_lattice(const PresheafOfRigs& f);

/// For all x, y with η x = η y the canonical maps between A[x⁻¹] and A[y⁻¹]
/// are mutually inverse.
bool fiber_choice_independent(const RigRef& a);

}  // namespace rigrep

#endif  // RIGREP_SHEAF_HPP_
