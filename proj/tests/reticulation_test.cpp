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

// Tests for the reticulation, its functoriality and universal property, the
// power inequality, and compatibility with localization.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "oracles.hpp"
#include "rigrep/catalog.hpp"
#include "rigrep/reticulation.hpp"

using namespace rigrep;
using oracle::at;

TEST_CASE("lattices reticulate to themselves") {
  for (const auto& e : lattice_catalog()) {
    if (e.rig->is_trivial()) continue;
    CAPTURE(e.name);
    const Reticulation r = reticulate(e.rig);
    CHECK(r.unit.is_bijective());
  }
}

TEST_CASE("reticulation of Ł3 is 2") {
  const RigRef l3 = lukasiewicz(3);
  const Reticulation r = reticulate(l3);
  CHECK(are_isomorphic(r.lattice, two()));
  CHECK(r.unit(at(*l3, "0")) == r.lattice->zero());
  CHECK(r.unit(at(*l3, "h")) == r.lattice->zero());
  CHECK(r.unit(at(*l3, "1")) == r.lattice->one());
  CHECK(r.least_preimage(r.lattice->zero()) == at(*l3, "0"));
}

TEST_CASE("reticulation of Ł3 × C3 is 2 × C3") {
  const RigRef a = by_name("L3xC3");
  const Reticulation r = reticulate(a);
  CHECK(are_isomorphic(r.lattice, by_name("2xC3")));
}

TEST_CASE("reticulation agrees with the power-below oracle") {
  for (const auto& e : integral_catalog()) {
    CAPTURE(e.name);
    const Reticulation r = reticulate(e.rig);
    CHECK(r.congruence.class_of() == oracle::reticulation_partition(*e.rig));
    CHECK(oracle::is_distributive_lattice(*r.lattice));
    CHECK(r.unit.is_surjective());
    CHECK(is_local(r.unit));
    for (Elem x = 0; x < e.rig->size(); ++x) {
      for (Elem y = 0; y < e.rig->size(); ++y) {
        const auto m = power_below(*e.rig, x, y);
        CHECK(m.has_value() == oracle::power_below(*e.rig, x, y));
        if (m) {
          CHECK(*m >= 1);
          CHECK(oracle::leq(*e.rig, oracle::power(*e.rig, x, *m), y));
        }
        const auto w = similarity_witness(*e.rig, x, y);
        CHECK(w.has_value() == r.congruence.related(x, y));
      }
    }
  }
  CHECK_THROWS_AS(reticulate(truncated_naturals(3)), NotIntegral);
}

TEST_CASE("power inequality") {
  for (const auto& e : integral_catalog()) {
    CAPTURE(e.name);
    CHECK_FALSE(power_inequality_counterexample(*e.rig).has_value());
    // Independent spot check with exponents up to n + 1.
    const FiniteRig& a = *e.rig;
    const std::size_t n = a.size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (std::size_t m = 1; m <= n + 1; ++m) {
          for (std::size_t k = 1; k <= n + 1; ++k) {
            const Elem lhs = oracle::power(a, a.add(x, y), m * k);
            const Elem rhs = a.add(oracle::power(a, x, m), oracle::power(a, y, k));
            CHECK(oracle::leq(a, lhs, rhs));
          }
        }
      }
    }
  }
}

TEST_CASE("functoriality of the reticulation") {
  const RigRef l3 = lukasiewicz(3);
  const Reticulation rl3 = reticulate(l3);
  CHECK(reticulate_morphism(identity(l3)) == identity(rl3.lattice));

  const auto to2 = enumerate_homs(l3, two());
  REQUIRE(to2.size() == 1);
  const RigMorphism l_h = reticulate_morphism(to2[0]);
  CHECK(l_h.is_bijective());
  CHECK(l_h.dom()->size() == 2);

  const auto from2 = enumerate_homs(two(), l3);
  REQUIRE(from2.size() == 1);
  CHECK(reticulate_morphism(from2[0]).is_bijective());

  for (const auto& a : integral_catalog()) {
    if (a.rig->size() > 5) continue;
    for (const auto& b : integral_catalog()) {
      if (b.rig->size() > 4) continue;
      for (const auto& h : enumerate_homs(a.rig, b.rig, {false, 3})) {
        const RigMorphism lh = reticulate_morphism(h);
        const Reticulation ra = reticulate(a.rig), rb = reticulate(b.rig);
        for (Elem x = 0; x < a.rig->size(); ++x) {
          CHECK(lh(ra.unit(x)) == rb.unit(h(x)));
        }
      }
    }
  }
}

TEST_CASE("universal property against the lattice catalog") {
  CHECK(verify_reticulation_universal(lukasiewicz(3), chain(3)));
  CHECK(verify_reticulation_universal(lukasiewicz(3), trivial_rig()));
  const auto lattices = lattice_catalog();
  for (const auto& e : integral_catalog()) {
    CHECK(verify_reticulation_universal(e.rig, two()));
    if (e.rig->size() > 6) continue;
    for (const auto& d : lattices) {
      if (d.rig->size() > 5) continue;
      CAPTURE(e.name);
      CAPTURE(d.name);
      CHECK(verify_reticulation_universal(e.rig, d.rig));
      // Hom counts agree: morphisms out of L A are those out of A.
      const Reticulation r = reticulate(e.rig);
      if (e.rig->size() <= 5) {
        CHECK(oracle::homs(*r.lattice, *d.rig).size() == oracle::homs(*e.rig, *d.rig).size());
      }
    }
  }
}

TEST_CASE("reticulation commutes with localization") {
  const RigRef l3 = lukasiewicz(3);
  const auto one = retic_localization_compat(l3, l3->one());
  CHECK(one.ok());
  CHECK(are_isomorphic(one.localized_reticulation.lattice, two()));

  const auto h = retic_localization_compat(l3, at(*l3, "h"));
  CHECK(h.ok());
  CHECK(h.lattice_localization.rig->is_trivial());
  CHECK(h.localized_reticulation.lattice->is_trivial());

  const RigRef p = by_name("2x2");
  const auto c = retic_localization_compat(p, at(*p, "(1,0)"));
  CHECK(c.ok());
  CHECK(are_isomorphic(c.lattice_localization.rig, two()));

  for (const auto& e : integral_catalog()) {
    for (Elem x = 0; x < e.rig->size(); ++x) {
      CHECK(retic_localization_compat(e.rig, x).ok());
    }
  }
}
