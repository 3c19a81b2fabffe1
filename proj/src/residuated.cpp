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

#include "rigrep/residuated.hpp"

#include <algorithm>
#include <set>

#include "rigrep/sheaf.hpp"

namespace rigrep {

ResidualTable residuals(const RigRef& a) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  if (!has_idempotent_addition(*a)) throw NotIdempotentAddition(a->name());
  const std::size_t n = a->size();
  ResidualTable out{a, Table(n, std::vector<Elem>(n, a->zero()))};
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem c = 0; c < n; ++c) {
        if (a->leq(a->mul(x, c), y)) out.imp[x][y] = a->add(out.imp[x][y], c);
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem c = 0; c < n; ++c) {
        if (a->leq(a->mul(x, c), y) != a->leq(c, out.imp[x][y])) {
          throw AxiomViolation("residuation adjunction", {x, y, c});
        }
      }
    }
  }
  return out;
}

bool is_prelinear(const RigRef& a) {
  const ResidualTable imp = residuals(a);
  for (Elem x = 0; x < a->size(); ++x) {
    for (Elem y = 0; y < a->size(); ++y) {
      if (a->add(imp(x, y), imp(y, x)) != a->one()) return false;
    }
  }
  return true;
}

bool is_wajsberg(const RigRef& a) {
  const ResidualTable imp = residuals(a);
  for (Elem x = 0; x < a->size(); ++x) {
    for (Elem y = 0; y < a->size(); ++y) {
      if (imp(imp(x, y), y) != imp(imp(y, x), x)) return false;
    }
  }
  return true;
}

MVAlgebra::MVAlgebra(std::string name, std::vector<std::string> labels, Table oplus,
                     std::vector<Elem> neg, Elem zero)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      oplus_(std::move(oplus)),
      neg_(std::move(neg)),
      zero_(zero) {
  const std::size_t n = labels_.size();
  if (n == 0) throw MalformedTable("MV-algebra '" + name_ + "' has an empty carrier");
  if (oplus_.size() != n || neg_.size() != n || zero_ >= n) {
    throw MalformedTable("MV tables do not match the carrier");
  }
  for (const auto& row : oplus_) {
    if (row.size() != n) throw MalformedTable("oplus table is ragged");
    for (Elem v : row) {
      if (v >= n) throw MalformedTable("oplus entry out of range");
    }
  }
  for (Elem v : neg_) {
    if (v >= n) throw MalformedTable("neg entry out of range");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw MalformedTable("element labels are not distinct");
  }

  auto plus = [this](Elem x, Elem y) { return oplus_[x][y]; };
  auto inv = [this](Elem x) { return neg_[x]; };
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (plus(x, y) != plus(y, x)) {
        throw AxiomViolation("oplus-commutativity", {x, y});
      }
      for (Elem z = 0; z < n; ++z) {
        if (plus(plus(x, y), z) != plus(x, plus(y, z))) {
          throw AxiomViolation("oplus-associativity", {x, y, z});
        }
      }
    }
    if (plus(zero_, x) != x) throw AxiomViolation("oplus-identity", {x});
  }
  const Elem top = inv(zero_);
  for (Elem x = 0; x < n; ++x) {
    if (inv(inv(x)) != x) throw AxiomViolation("mv-involution", {x});
    if (plus(x, top) != top) throw AxiomViolation("mv-absorption", {x});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (plus(inv(plus(inv(x), y)), y) != plus(inv(plus(inv(y), x)), x)) {
        throw AxiomViolation("mv-lukasiewicz", {x, y});
      }
    }
  }
}

MVRef mv_from_rig(const RigRef& r) {
  if (!is_integral(*r) || !has_idempotent_addition(*r) || !is_wajsberg(r)) {
    throw NotMVRig(r->name());
  }
  const ResidualTable imp = residuals(r);
  const std::size_t n = r->size();
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) neg[x] = imp(x, r->zero());
  Table oplus(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) oplus[x][y] = neg[r->mul(neg[x], neg[y])];
  }
  return std::make_shared<const MVAlgebra>(r->name(), r->labels(), std::move(oplus),
                                           std::move(neg), r->zero());
}

MVRig rig_from_mv(const MVRef& m) {
  const std::size_t n = m->size();
  RigTables t;
  t.name = m->name();
  t.labels = m->labels();
  t.add.assign(n, std::vector<Elem>(n));
  t.mul.assign(n, std::vector<Elem>(n));
  Table imp(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      t.add[x][y] = m->oplus(m->neg(m->oplus(m->neg(x), y)), y);
      t.mul[x][y] = m->neg(m->oplus(m->neg(x), m->neg(y)));
      imp[x][y] = m->oplus(m->neg(x), y);
    }
  }
  t.zero = m->zero();
  t.one = m->one();
  RigRef rig = validate_rig(std::move(t));
  ResidualTable computed = residuals(rig);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (computed(x, y) != imp[x][y]) throw AxiomViolation("mv residual", {x, y});
    }
  }
  return MVRig{rig, ResidualTable{rig, std::move(imp)}};
}

bool natural_order_matches(const MVRef& m) {
  const RigRef r = rig_from_mv(m).rig;
  for (Elem x = 0; x < m->size(); ++x) {
    for (Elem y = 0; y < m->size(); ++y) {
      if ((r->mul(x, m->neg(y)) == m->zero()) != r->leq(x, y)) return false;
    }
  }
  return true;
}

namespace {

bool member(const Ideal& ideal, Elem x) {
  return std::binary_search(ideal.begin(), ideal.end(), x);
}

}  // namespace

bool is_ideal(const MVRef& m, const Ideal& candidate) {
  if (!std::is_sorted(candidate.begin(), candidate.end())) return false;
  if (!member(candidate, m->zero())) return false;
  const RigRef r = rig_from_mv(m).rig;
  for (Elem x : candidate) {
    for (Elem y : candidate) {
      if (!member(candidate, m->oplus(x, y))) return false;
    }
    for (Elem y = 0; y < m->size(); ++y) {
      if (r->leq(y, x) && !member(candidate, y)) return false;
    }
  }
  return true;
}

bool is_prime_ideal(const MVRef& m, const Ideal& candidate) {
  if (!is_ideal(m, candidate) || member(candidate, m->one())) return false;
  const RigRef r = rig_from_mv(m).rig;
  for (Elem x = 0; x < m->size(); ++x) {
    for (Elem y = 0; y < m->size(); ++y) {
      const Elem meet = m->neg(r->add(m->neg(x), m->neg(y)));
      if (member(candidate, meet) && !member(candidate, x) && !member(candidate, y)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Ideal> ideals(const MVRef& m) {
  // In a finite MV-algebra every ideal is generated by one element (the ⊕ of
  // all its members), so generating from each element finds them all.
  const RigRef r = rig_from_mv(m).rig;
  std::set<Ideal> found;
  for (Elem e = 0; e < m->size(); ++e) {
    std::vector<Elem> multiples{m->zero()};
    for (Elem k = e; std::find(multiples.begin(), multiples.end(), k) == multiples.end();
         k = m->oplus(k, e)) {
      multiples.push_back(k);
    }
    Ideal ideal;
    for (Elem y = 0; y < m->size(); ++y) {
      for (Elem k : multiples) {
        if (r->leq(y, k)) {
          ideal.push_back(y);
          break;
        }
      }
    }
    if (!is_ideal(m, ideal)) throw AxiomViolation("generated ideal", {e});
    found.insert(std::move(ideal));
  }
  std::vector<Ideal> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Ideal& a, const Ideal& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Ideal> prime_ideals(const MVRef& m) {
  std::vector<Ideal> out;
  for (auto& ideal : ideals(m)) {
    if (is_prime_ideal(m, ideal)) out.push_back(std::move(ideal));
  }
  return out;
}

Ideal ideal_of_point(const MVRef& m, const SpectrumPoint& p) {
  if (p.morphism().dom()->size() != m->size()) {
    throw AlgebraError("point does not belong to the MV-rig of " + m->name());
  }
  Ideal ideal;
  for (Elem x : p.filter()) ideal.push_back(m->neg(x));
  std::sort(ideal.begin(), ideal.end());
  if (!is_prime_ideal(m, ideal)) throw NotPrime("¬(p⁻¹1) is not a prime ideal");
  return ideal;
}

SpectrumPoint point_of_ideal(const MVRef& m, const Ideal& ideal) {
  if (!is_prime_ideal(m, ideal)) throw NotPrime("ideal is not prime in " + m->name());
  const RigRef r = rig_from_mv(m).rig;
  std::vector<Elem> map(m->size());
  for (Elem x = 0; x < m->size(); ++x) {
    map[x] = member(ideal, m->neg(x)) ? two()->one() : two()->zero();
  }
  return SpectrumPoint(RigMorphism(r, two(), std::move(map)));
}

DubucPovedaFiber dubuc_poveda_fiber(const MVRef& m, const Ideal& ideal) {
  const SpectrumPoint p = point_of_ideal(m, ideal);
  DubucPovedaFiber out{localize(p.morphism().dom(), p.filter()), false};
  Ideal killed;
  for (Elem x = 0; x < m->size(); ++x) {
    if (out.stalk.unit(x) == out.stalk.rig->zero()) killed.push_back(x);
  }
  out.kills_exactly_ideal = killed == ideal;
  return out;
}

bool residuals_descend(const Localization& loc) {
  const ResidualTable source = residuals(loc.source);
  const ResidualTable target = residuals(loc.rig);
  for (Elem x = 0; x < loc.source->size(); ++x) {
    for (Elem y = 0; y < loc.source->size(); ++y) {
      if (loc.unit(source(x, y)) != target(loc.unit(x), loc.unit(y))) return false;
    }
  }
  return true;
}

PrelinearFiberReport prelinear_fibers_totally_ordered(const RigRef& a) {
  if (!is_prelinear(a)) throw NotPrelinear(a->name());
  PrelinearFiberReport report{true, true, true};
  for (const auto& p : spectrum(a)) {
    const Localization s = stalk(a, p);
    report.stalks_totally_ordered = report.stalks_totally_ordered && is_totally_ordered(*s.rig);
    report.residuals_descend = report.residuals_descend && residuals_descend(s);
  }
  if (a->is_trivial()) return report;
  const Representation r = build_representation(a);
  for (Elem j : r.irreducibles.elements()) {
    report.fibers_totally_ordered =
        report.fibers_totally_ordered && is_totally_ordered(*r.sheaf.fiber(j));
  }
  for (const auto& loc : r.localizations) {
    report.residuals_descend = report.residuals_descend && residuals_descend(loc);
  }
  return report;
}

}  // namespace rigrep
