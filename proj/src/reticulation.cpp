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

#include "rigrep/reticulation.hpp"

#include <array>

namespace rigrep {

Elem Reticulation::least_preimage(Elem l) const {
  for (Elem x = 0; x < source->size(); ++x) {
    if (unit(x) == l) return x;
  }
  throw AlgebraError("reticulation unit is not surjective");
}

std::optional<std::size_t> power_below(const FiniteRig& a, Elem x, Elem y) {
  PowerSequence powers(a, x);
  for (std::size_t m = 1; m <= powers.bound(); ++m) {
    if (a.leq(powers.at(m), y)) return m;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> similarity_witness(
    const FiniteRig& a, Elem x, Elem y) {
  auto m = power_below(a, x, y);
  auto k = power_below(a, y, x);
  if (!m || !k) return std::nullopt;
  return std::make_pair(*m, *k);
}

std::optional<std::array<std::size_t, 4>> power_inequality_counterexample(
    const FiniteRig& a) {
  const std::size_t n = a.size();
  for (Elem x = 0; x < n; ++x) {
    PowerSequence px(a, x);
    for (Elem y = 0; y < n; ++y) {
      PowerSequence py(a, y);
      PowerSequence ps(a, a.add(x, y));
      for (std::size_t m = 0; m <= px.bound(); ++m) {
        for (std::size_t k = 0; k <= py.bound(); ++k) {
          if (!a.leq(ps.at(m * k), a.add(px.at(m), py.at(k)))) {
            return std::array<std::size_t, 4>{x, y, m, k};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Reticulation reticulate(const RigRef& a) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  const std::size_t n = a->size();
  std::vector<char> below(n * n, 0);  // x ≼ y
  for (Elem x = 0; x < n; ++x) {
    PowerSequence powers(*a, x);
    for (std::size_t m = 1; m <= powers.bound(); ++m) {
      const Elem p = powers.at(m);
      for (Elem y = 0; y < n; ++y) {
        if (a->leq(p, y)) below[x * n + y] = 1;
      }
    }
  }
  auto theta = Congruence::from_relation(a, [&](Elem x, Elem y) {
    return below[x * n + y] && below[y * n + x];
  });
  auto q = quotient(a, theta, "L(" + a->name() + ")");
  if (!is_distributive_lattice(*q.rig)) {
    throw NoSuchFactorization("reticulation of " + a->name() + " is not a lattice");
  }
  if (!q.projection.is_surjective() || !is_local(q.projection)) {
    throw NoSuchFactorization("reticulation unit of " + a->name() +
                              " is not surjective and local");
  }
  return Reticulation{a, std::move(theta), q.rig, std::move(q.projection)};
}

RigMorphism reticulate_morphism(const RigMorphism& h, const Reticulation& dom,
                                const Reticulation& cod) {
  auto g = factor_through(dom.unit, compose(cod.unit, h));
  if (!g) {
    throw NoSuchFactorization("L h does not exist for " + h.dom()->name() +
                              " -> " + h.cod()->name());
  }
  return std::move(*g);
}

RigMorphism reticulate_morphism(const RigMorphism& h) {
  return reticulate_morphism(h, reticulate(h.dom()), reticulate(h.cod()));
}

bool verify_reticulation_universal(const RigRef& a, const RigRef& lattice) {
  if (!is_distributive_lattice(*lattice)) throw NotLattice(lattice->name());
  const Reticulation r = reticulate(a);
  const auto through = enumerate_homs(r.lattice, lattice);
  for (const auto& f : enumerate_homs(a, lattice)) {
    std::size_t factorizations = 0;
    for (const auto& g : through) {
      if (compose(g, r.unit) == f) ++factorizations;
    }
    if (factorizations != 1) return false;
  }
  return true;
}

ReticLocalizationReport retic_localization_compat(const RigRef& a, Elem x) {
  Reticulation la = reticulate(a);
  Localization ax = localize_at(a, x);
  ReticLocalizationReport report{localize_at(la.lattice, la.unit(x)),
                                 reticulate(ax.rig), false, std::nullopt, false};
  const auto& left = report.lattice_localization;
  const auto& right = report.localized_reticulation;

  // Both sides are quotients of A; compare their kernels there.
  const RigMorphism via_lattice = compose(left.unit, la.unit);
  const RigMorphism via_localization = compose(right.unit, ax.unit);
  report.kernels_agree = kernel(via_lattice) == kernel(via_localization);
  report.iso = factor_through(via_localization, via_lattice);
  if (report.iso && !report.iso->is_bijective()) report.iso.reset();

  // The bottom map A[x⁻¹] → (L A)[(η x)⁻¹] of the first square.
  auto bottom = factor_through(ax.unit, via_lattice);
  report.commutes = report.iso && bottom &&
                    compose(*report.iso, right.unit) == *bottom;
  return report;
}

}  // namespace rigrep
