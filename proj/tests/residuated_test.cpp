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

// Tests for residuals, pre-linearity, the MV translation, ideals and the
// correspondence between prime ideals and points.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "oracles.hpp"
#include "rigrep/catalog.hpp"
#include "rigrep/report.hpp"
#include "rigrep/residuated.hpp"

using namespace rigrep;
using oracle::at;

namespace {

std::set<Ideal> as_set(const std::vector<Ideal>& v) { return {v.begin(), v.end()}; }

// Prime ideals by definition: proper ideals I with x ∧ y ∈ I ⟹ x ∈ I or
// y ∈ I, where ∧ is the greatest lower bound found by scanning.
std::set<Ideal> prime_ideals_by_definition(const MVAlgebra& m) {
  auto plus = [&](Elem x, Elem y) { return m.oplus(x, y); };
  auto neg = [&](Elem x) { return m.neg(x); };
  auto leq = [&](Elem x, Elem y) { return m.oplus(m.neg(x), y) == m.one(); };
  auto meet = [&](Elem x, Elem y) {
    for (Elem z = 0; z < m.size(); ++z) {
      if (!leq(z, x) || !leq(z, y)) continue;
      bool greatest = true;
      for (Elem w = 0; w < m.size(); ++w) {
        if (leq(w, x) && leq(w, y) && !leq(w, z)) greatest = false;
      }
      if (greatest) return z;
    }
    throw std::logic_error("no meet");
  };
  std::set<Ideal> out;
  for (const auto& i : oracle::mv_ideals_by_subsets(m.size(), m.zero(), plus, neg)) {
    if (i.size() == m.size()) continue;
    const std::set<Elem> in(i.begin(), i.end());
    bool prime = true;
    for (Elem x = 0; x < m.size(); ++x) {
      for (Elem y = 0; y < m.size(); ++y) {
        if (in.count(meet(x, y)) && !in.count(x) && !in.count(y)) prime = false;
      }
    }
    if (prime) out.insert(i);
  }
  return out;
}

std::vector<RigRef> residuated_rigs() {
  std::vector<RigRef> out;
  for (const auto& e : integral_catalog()) out.push_back(e.rig);
  return out;
}

}  // namespace

TEST_CASE("residual examples") {
  const RigRef l3 = lukasiewicz(3);
  const ResidualTable r = residuals(l3);
  CHECK(r(at(*l3, "h"), at(*l3, "0")) == at(*l3, "h"));
  const RigRef c3 = chain(3);
  const ResidualTable rc = residuals(c3);
  CHECK(rc(at(*c3, "a"), at(*c3, "0")) == at(*c3, "0"));
  CHECK_THROWS_AS(residuals(truncated_naturals(3)), NotIntegral);
}

TEST_CASE("residuals agree with the adjunction scan") {
  for (const auto& a : residuated_rigs()) {
    CAPTURE(a->name());
    const ResidualTable r = residuals(a);
    for (Elem x = 0; x < a->size(); ++x) {
      CHECK(r(a->one(), x) == x);
      CHECK(r(x, a->one()) == a->one());
      for (Elem y = 0; y < a->size(); ++y) {
        CHECK(r(x, y) == oracle::residual(*a, x, y));
      }
    }
  }
}

TEST_CASE("pre-linearity and the Wajsberg condition") {
  CHECK(is_prelinear(chain(3)));
  CHECK(is_prelinear(lukasiewicz(3)));
  CHECK(is_wajsberg(lukasiewicz(3)));
  CHECK_FALSE(is_wajsberg(chain(3)));
  // The failing pair in C3: (a ⊸ 0) ⊸ 0 = 1 but (0 ⊸ a) ⊸ a = a.
  const RigRef c3 = chain(3);
  const ResidualTable r = residuals(c3);
  const Elem a = at(*c3, "a"), z = c3->zero();
  CHECK(r(r(a, z), z) == c3->one());
  CHECK(r(r(z, a), a) == a);

  for (const auto& rig : residuated_rigs()) {
    const ResidualTable t = residuals(rig);
    bool pre = true, waj = true;
    for (Elem x = 0; x < rig->size(); ++x) {
      for (Elem y = 0; y < rig->size(); ++y) {
        if (rig->add(t(x, y), t(y, x)) != rig->one()) pre = false;
        if (t(t(x, y), y) != t(t(y, x), x)) waj = false;
      }
    }
    CHECK(is_prelinear(rig) == pre);
    CHECK(is_wajsberg(rig) == waj);
    if (oracle::totally_ordered(*rig)) CHECK(pre);
  }
}

TEST_CASE("MV-algebras from rigs") {
  const MVRef b = mv_from_rig(two());
  CHECK(b->size() == 2);
  CHECK(b->oplus(1, 1) == 1);
  CHECK(b->neg(0) == 1);

  const RigRef l3 = lukasiewicz(3);
  const MVRef m = mv_from_rig(l3);
  for (Elem x = 0; x < 3; ++x) {
    CHECK(m->neg(x) == 2 - x);
    for (Elem y = 0; y < 3; ++y) CHECK(m->oplus(x, y) == std::min<Elem>(x + y, 2));
  }
  CHECK(m->same_tables(*lukasiewicz_mv(3)));
  CHECK(rig_from_mv(m).rig->same_tables(*l3));
  CHECK_THROWS_AS(mv_from_rig(chain(3)), NotMVRig);
}

TEST_CASE("round trips on the MV catalog") {
  for (const auto& m : mv_catalog()) {
    CAPTURE(m->name());
    const MVRig r = rig_from_mv(m);
    CHECK(oracle::all_laws_hold(r.rig->tables()));
    CHECK(mv_from_rig(r.rig)->same_tables(*m));
    CHECK(natural_order_matches(m));
    for (Elem x = 0; x < m->size(); ++x) {
      for (Elem y = 0; y < m->size(); ++y) {
        CHECK(r.residual(x, y) == m->oplus(m->neg(x), y));
      }
    }
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const RigRef l = lukasiewicz(n);
    CHECK(rig_from_mv(mv_from_rig(l)).rig->same_tables(*l));
  }
}

TEST_CASE("MV constructor rejects broken tables") {
  const MVRef m = lukasiewicz_mv(3);
  Table bad = m->oplus_table();
  bad[1][1] = 1;  // h ⊕ h = h
  CHECK_THROWS_AS(MVAlgebra("bad", m->labels(), bad, m->neg_table(), m->zero()),
                  AxiomViolation);
  CHECK_THROWS_AS(MVAlgebra("bad", m->labels(), m->oplus_table(), {2, 2, 0}, m->zero()),
                  AxiomViolation);
}

TEST_CASE("ideals of small MV-algebras") {
  const MVRef l3 = lukasiewicz_mv(3);
  const auto il = ideals(l3);
  CHECK(as_set(il) == std::set<Ideal>{{0}, {0, 1, 2}});
  CHECK(prime_ideals(l3) == std::vector<Ideal>{{0}});
  CHECK_FALSE(is_ideal(l3, {0, 1}));

  CHECK(prime_ideals(mv_from_rig(two())) == std::vector<Ideal>{{0}});

  const RigRef pr = by_name("L3x2");
  const MVRef m = mv_from_rig(pr);
  const Ideal first{at(*pr, "(0,0)"), at(*pr, "(0,1)")};
  const Ideal second{at(*pr, "(0,0)"), at(*pr, "(h,0)"), at(*pr, "(1,0)")};
  CHECK(as_set(prime_ideals(m)) == std::set<Ideal>{first, second});
}

TEST_CASE("ideals agree with subset enumeration") {
  for (const auto& m : mv_catalog()) {
    if (m->size() > 12) continue;
    CAPTURE(m->name());
    auto plus = [&](Elem x, Elem y) { return m->oplus(x, y); };
    auto neg = [&](Elem x) { return m->neg(x); };
    const auto want = oracle::mv_ideals_by_subsets(m->size(), m->zero(), plus, neg);
    CHECK(as_set(ideals(m)) == std::set<Ideal>(want.begin(), want.end()));
    CHECK(as_set(prime_ideals(m)) == prime_ideals_by_definition(*m));
    for (const auto& i : want) CHECK(is_ideal(m, i));
  }
}

TEST_CASE("prime ideals correspond to points") {
  const MVRef l3 = lukasiewicz_mv(3);
  const RigRef rl = rig_from_mv(l3).rig;
  const auto pts = spectrum(rl);
  REQUIRE(pts.size() == 1);
  CHECK(ideal_of_point(l3, pts[0]) == Ideal{0});
  CHECK(point_of_ideal(l3, {0}).morphism() == pts[0].morphism());
  CHECK_THROWS_AS(point_of_ideal(l3, {0, 1, 2}), NotPrime);

  for (const auto& m : mv_catalog()) {
    CAPTURE(m->name());
    CHECK(prime_point_bijection(m));
    const RigRef r = rig_from_mv(m).rig;
    const auto points = spectrum(r);
    CHECK(points.size() == prime_ideals(m).size());
    for (const auto& p : points) {
      const Ideal i = ideal_of_point(m, p);
      Ideal want;
      for (Elem x = 0; x < m->size(); ++x) {
        if (p.morphism()(m->neg(x)) == 1) want.push_back(x);
      }
      CHECK(i == want);
      CHECK(point_of_ideal(m, i).morphism() == p.morphism());
    }
  }
}

TEST_CASE("Dubuc-Poveda fibers are stalks") {
  const MVRef l3 = lukasiewicz_mv(3);
  const auto f = dubuc_poveda_fiber(l3, {0});
  CHECK(f.kills_exactly_ideal);
  CHECK(are_isomorphic(f.stalk.rig, rig_from_mv(l3).rig));

  const RigRef pr = by_name("L3x2");
  const MVRef m = mv_from_rig(pr);
  const Ideal second{at(*pr, "(0,0)"), at(*pr, "(h,0)"), at(*pr, "(1,0)")};
  const auto g = dubuc_poveda_fiber(m, second);
  CHECK(g.kills_exactly_ideal);
  CHECK(are_isomorphic(g.stalk.rig, two()));

  CHECK(are_isomorphic(dubuc_poveda_fiber(mv_from_rig(two()), {0}).stalk.rig, two()));

  for (const auto& mv : mv_catalog()) {
    CHECK(dubuc_poveda_matches_stalks(mv));
  }
}

TEST_CASE("pre-linear rigs have totally ordered fibers") {
  const auto rl = prelinear_fibers_totally_ordered(lukasiewicz(3));
  CHECK(rl.ok());
  const RigRef pr = by_name("L3x2");
  CHECK_FALSE(oracle::totally_ordered(*pr));
  CHECK(prelinear_fibers_totally_ordered(pr).ok());
  const auto sp = subdirect_embedding(pr);
  REQUIRE(sp.stalks.size() == 2);
  std::set<std::size_t> sizes;
  for (const auto& s : sp.stalks) {
    CHECK(oracle::totally_ordered(*s.rig));
    sizes.insert(s.rig->size());
  }
  CHECK(sizes == std::set<std::size_t>{2, 3});
  CHECK(prelinear_fibers_totally_ordered(two()).ok());

  for (const auto& a : residuated_rigs()) {
    if (a->is_trivial()) continue;
    if (!is_prelinear(a)) {
      CHECK_THROWS_AS(prelinear_fibers_totally_ordered(a), NotPrelinear);
      continue;
    }
    CAPTURE(a->name());
    CHECK(prelinear_fibers_totally_ordered(a).ok());
  }
}
