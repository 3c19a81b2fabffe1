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

#include "rigrep/localization.hpp"

#include <algorithm>

namespace rigrep {

std::vector<Elem> submonoid_closure(const FiniteRig& a,
                                    const std::vector<Elem>& seeds) {
  std::vector<char> in(a.size(), 0);
  std::vector<Elem> members{a.one()};
  in[a.one()] = 1;
  for (Elem s : seeds) {
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem p = a.mul(members[i], members[j]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Congruence localization_congruence(const RigRef& a,
                                   const std::vector<Elem>& monoid) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  const std::size_t n = a->size();
  // x |_F y iff w·x ≤ y for some w in F.
  std::vector<char> divides_f(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem w : monoid) {
      const Elem wx = a->mul(w, x);
      for (Elem y = 0; y < n; ++y) {
        if (a->leq(wx, y)) divides_f[x * n + y] = 1;
      }
    }
  }
  return Congruence::from_relation(a, [&](Elem x, Elem y) {
    return divides_f[x * n + y] && divides_f[y * n + x];
  });
}

namespace {

// Named after the generators the caller gave, not the whole closure.
std::string monoid_name(const FiniteRig& a, std::vector<Elem> seeds) {
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::string inner;
  for (Elem x : seeds) {
    if (x == a.one()) continue;
    inner += (inner.empty() ? "" : ",") + a.label(x);
  }
  if (inner.empty()) inner = a.label(a.one());
  return a.name() + "[" + inner + "⁻¹]";
}

}  // namespace

Localization localize(const RigRef& a, const std::vector<Elem>& seeds) {
  auto monoid = submonoid_closure(*a, seeds);
  auto theta = localization_congruence(a, monoid);
  auto q = quotient(a, theta, monoid_name(*a, seeds));
  return Localization{a, std::move(monoid), std::move(theta), q.rig,
                      std::move(q.projection)};
}

Localization localize_at(const RigRef& a, Elem x) {
  return localize(a, {x});
}

DownSetLocalization localize_strong_idem(const RigRef& a, Elem x) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  if (!is_strongly_idempotent(*a, x)) throw NotStronglyIdempotent(a->label(x));

  RigRef down = down_set_rig(a, x);
  std::vector<Elem> rank(a->size(), 0);
  for (Elem v = 0, r = 0; v < a->size(); ++v) {
    if (a->leq(v, x)) rank[v] = r++;
  }
  std::vector<Elem> map(a->size());
  for (Elem v = 0; v < a->size(); ++v) map[v] = rank[a->mul(x, v)];
  RigMorphism unit(a, down, std::move(map));

  const Localization loc = localize_at(a, x);
  auto comparison = factor_through(unit, loc.unit);
  if (!comparison || !comparison->is_bijective()) {
    throw NoSuchFactorization("↓" + a->label(x) + " is not iso to " +
                              loc.rig->name());
  }
  return DownSetLocalization{down, std::move(unit), std::move(*comparison)};
}

std::optional<RigMorphism> canonical_map(const Localization& from,
                                         const Localization& to) {
  return factor_through(from.unit, to.unit);
}

bool verify_localization_universal(const RigRef& a,
                                   const std::vector<Elem>& monoid,
                                   const RigRef& b) {
  const Localization loc = localize(a, monoid);
  const auto through = enumerate_homs(loc.rig, b);
  for (const auto& g : through) {
    const auto f = compose(g, loc.unit);
    for (Elem w : loc.monoid) {
      if (f(w) != b->one()) return false;
    }
  }
  for (const auto& f : enumerate_homs(a, b)) {
    const bool inverts = std::all_of(loc.monoid.begin(), loc.monoid.end(),
                                     [&](Elem w) { return f(w) == b->one(); });
    std::size_t factorizations = 0;
    for (const auto& g : through) {
      if (compose(g, loc.unit) == f) ++factorizations;
    }
    if (factorizations != (inverts ? 1U : 0U)) return false;
  }
  return true;
}

bool stepwise_localization_agrees(const RigRef& a, Elem x, Elem y) {
  const Localization first = localize_at(a, x);
  const Localization second = localize_at(first.rig, first.unit(y));
  const Localization both = localize(a, {x, y});
  const RigMorphism stepwise = compose(second.unit, first.unit);
  if (!(kernel(stepwise) == both.congruence)) return false;
  auto iso = factor_through(both.unit, stepwise);
  return iso && iso->is_bijective();
}

PushoutPullbackReport pushout_pullback_check(const RigRef& a, Elem x, Elem y) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  PushoutPullbackReport r{localize_at(a, a->add(x, y)), localize_at(a, x),
                          localize_at(a, y), localize_at(a, a->mul(x, y))};

  auto need = [](std::optional<RigMorphism> m, const char* which) {
    if (!m) throw NoSuchFactorization(std::string("missing canonical map ") + which);
    return std::move(*m);
  };
  const RigMorphism left = need(canonical_map(r.at_sum, r.at_first), "A[(a+b)⁻¹] → A[a⁻¹]");
  const RigMorphism top = need(canonical_map(r.at_sum, r.at_second), "A[(a+b)⁻¹] → A[b⁻¹]");
  const RigMorphism bottom = need(canonical_map(r.at_first, r.at_product), "A[a⁻¹] → A[(ab)⁻¹]");
  const RigMorphism right = need(canonical_map(r.at_second, r.at_product), "A[b⁻¹] → A[(ab)⁻¹]");

  r.commutes = compose(bottom, left) == compose(right, top);

  // Fiber product over A[(ab)⁻¹], as compatible pairs.
  const std::size_t nb = r.at_second.rig->size();
  std::vector<char> compatible(r.at_first.rig->size() * nb, 0);
  for (Elem u = 0; u < r.at_first.rig->size(); ++u) {
    for (Elem v = 0; v < nb; ++v) {
      if (bottom(u) == right(v)) {
        compatible[u * nb + v] = 1;
        ++r.fiber_product_size;
      }
    }
  }
  std::vector<char> hit(compatible.size(), 0);
  bool injective = true;
  bool lands = true;
  for (Elem z = 0; z < r.at_sum.rig->size(); ++z) {
    const std::size_t cell = left(z) * nb + top(z);
    if (!compatible[cell]) lands = false;
    if (hit[cell]) injective = false;
    hit[cell] = 1;
  }
  r.pullback = injective && lands && r.at_sum.rig->size() == r.fiber_product_size;

  r.pushout = join(r.at_first.congruence, r.at_second.congruence) ==
              r.at_product.congruence;
  return r;
}

}  // namespace rigrep
