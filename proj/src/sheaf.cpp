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

#include "rigrep/sheaf.hpp"

#include <map>

#include "rigrep/congruence.hpp"

namespace rigrep {

PresheafOfRigs::PresheafOfRigs(Poset base, std::vector<RigRef> fibers,
                               std::vector<std::optional<RigMorphism>> restrictions,
                               RigRef lattice)
    : base_(std::move(base)),
      fibers_(std::move(fibers)),
      restrictions_(std::move(restrictions)),
      lattice_(std::move(lattice)) {
  const std::size_t n = base_.size();
  if (fibers_.size() != n || restrictions_.size() != n * n) {
    throw MalformedTable("presheaf data does not match its base");
  }
  if (lattice_ && lattice_->size() != n) {
    throw MalformedTable("presheaf lattice does not match its base");
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      const auto& r = restrictions_[c * n + d];
      if (base_.leq(c, d) != r.has_value()) {
        throw MalformedTable("restriction present exactly for c ≤ d");
      }
      if (r && (!r->dom()->same_tables(*fibers_[d]) ||
                !r->cod()->same_tables(*fibers_[c]))) {
        throw MalformedTable("restriction has the wrong fibers");
      }
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (!(restriction(d, d) == identity(fibers_[d]))) {
      throw AxiomViolation("presheaf identity", {d});
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      if (!base_.leq(c, d)) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (!base_.leq(d, e)) continue;
        const auto& cd = restriction(c, d);
        const auto& de = restriction(d, e);
        const auto& ce = restriction(c, e);
        for (Elem x = 0; x < fibers_[e]->size(); ++x) {
          if (cd(de(x)) != ce(x)) {
            throw AxiomViolation("presheaf functoriality", {c, d, e});
          }
        }
      }
    }
  }
}

const RigMorphism& PresheafOfRigs::restriction(std::size_t c, std::size_t d) const {
  const auto& r = restrictions_[c * size() + d];
  if (!r) throw AlgebraError("no restriction between incomparable base elements");
  return *r;
}

PresheafOfRigs restrict_to(const PresheafOfRigs& f, const std::vector<std::size_t>& nodes) {
  const std::size_t m = nodes.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<Elem> elements;
  std::vector<RigRef> fibers;
  std::vector<std::optional<RigMorphism>> restrictions(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(f.base().label(nodes[i]));
    elements.push_back(f.base().elements().empty() ? nodes[i]
                                                   : f.base().elements()[nodes[i]]);
    fibers.push_back(f.fiber(nodes[i]));
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = f.base().leq(nodes[i], nodes[j]);
      if (leq[i][j]) restrictions[i * m + j] = f.restriction(nodes[i], nodes[j]);
    }
  }
  return PresheafOfRigs(Poset(std::move(labels), std::move(leq), std::move(elements)),
                        std::move(fibers), std::move(restrictions));
}

namespace {

std::vector<std::optional<RigMorphism>> localization_restrictions(
    const Poset& base, const std::vector<Localization>& locs) {
  const std::size_t n = locs.size();
  std::vector<std::optional<RigMorphism>> out(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      if (!base.leq(c, d)) continue;
      out[c * n + d] = canonical_map(locs[d], locs[c]);
      if (!out[c * n + d]) {
        throw NoSuchFactorization("no canonical map " + locs[d].rig->name() +
                                  " → " + locs[c].rig->name());
      }
    }
  }
  return out;
}

}  // namespace

Representation build_representation(const RigRef& a) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  if (a->is_trivial()) throw TrivialSource(a->name());

  Reticulation retic = reticulate(a);
  const RigRef lattice = retic.lattice;
  std::vector<Localization> locs;
  std::vector<RigRef> fibers;
  for (Elem l = 0; l < lattice->size(); ++l) {
    locs.push_back(localize_at(a, retic.least_preimage(l)));
    fibers.push_back(locs.back().rig);
  }
  Poset base = order_poset(*lattice);
  auto restrictions = localization_restrictions(base, locs);
  PresheafOfRigs sheaf(base, std::move(fibers), std::move(restrictions), lattice);

  const Elem top = lattice->one();
  auto unit_iso = factor_through(locs[top].unit, identity(a));
  if (!unit_iso || !unit_iso->is_bijective()) {
    throw NoSuchFactorization("fiber at ⊤ is not iso to " + a->name());
  }
  Representation r{a,
                   std::move(retic),
                   std::move(locs),
                   std::move(sheaf),
                   join_irreducibles(*lattice),
                   inverse(*unit_iso)};

  if (!sheaf_condition_all_covers(r.sheaf)) {
    throw NoSuchFactorization("representation of " + a->name() + " is not a sheaf");
  }
  if (!r.sheaf.fiber(lattice->zero())->is_trivial()) {
    throw NoSuchFactorization("fiber at ⊥ is not trivial");
  }
  for (Elem j : r.irreducibles.elements()) {
    if (!is_really_local(*r.sheaf.fiber(j))) {
      throw NoSuchFactorization("fiber at " + lattice->label(j) +
                                " is not really local");
    }
  }
  return r;
}

bool sheaf_condition(const PresheafOfRigs& f, Elem a, Elem b) {
  const RigRef& lattice = f.lattice();
  if (!lattice) throw AlgebraError("sheaf condition needs a lattice base");
  const Elem d = lattice->add(a, b);
  const Elem m = lattice->mul(a, b);
  const auto& ma = f.restriction(m, a);
  const auto& mb = f.restriction(m, b);
  const auto& ad = f.restriction(a, d);
  const auto& bd = f.restriction(b, d);

  const std::size_t nb = f.fiber(b)->size();
  std::vector<std::size_t> amalgamations(f.fiber(a)->size() * nb, 0);
  for (Elem z = 0; z < f.fiber(d)->size(); ++z) ++amalgamations[ad(z) * nb + bd(z)];
  for (Elem x = 0; x < f.fiber(a)->size(); ++x) {
    for (Elem y = 0; y < nb; ++y) {
      const bool compatible = ma(x) == mb(y);
      if (compatible && amalgamations[x * nb + y] != 1) return false;
    }
  }
  return true;
}

bool sheaf_condition_all_covers(const PresheafOfRigs& f) {
  for (Elem a = 0; a < f.size(); ++a) {
    for (Elem b = 0; b < f.size(); ++b) {
      if (!sheaf_condition(f, a, b)) return false;
    }
  }
  return true;
}

namespace {

// Position of x inside ↓top, which lists the elements below top in index order.
Elem rank_below(const FiniteRig& d, Elem top, Elem x) {
  Elem r = 0;
  for (Elem w = 0; w < x; ++w) r += d.leq(w, top) ? 1 : 0;
  return r;
}

}  // namespace

PresheafOfRigs lambda_presheaf(const RigRef& d) {
  if (!is_distributive_lattice(*d)) throw NotLattice(d->name());
  const std::size_t n = d->size();
  std::vector<RigRef> fibers;
  std::vector<std::vector<Elem>> members(n);
  for (Elem x = 0; x < n; ++x) {
    fibers.push_back(down_set_rig(d, x));
    for (Elem y = 0; y < n; ++y) {
      if (d->leq(y, x)) members[x].push_back(y);
    }
  }
  std::vector<std::optional<RigMorphism>> restrictions(n * n);
  for (Elem c = 0; c < n; ++c) {
    for (Elem top = 0; top < n; ++top) {
      if (!d->leq(c, top)) continue;
      std::vector<Elem> map;
      for (Elem x : members[top]) map.push_back(rank_below(*d, c, d->mul(x, c)));
      restrictions[c * n + top] = RigMorphism(fibers[top], fibers[c], std::move(map));
    }
  }
  PresheafOfRigs lambda(order_poset(*d), std::move(fibers), std::move(restrictions), d);
  if (!sheaf_condition_all_covers(lambda)) {
    throw NoSuchFactorization("Λ is not a sheaf over " + d->name());
  }
  return lambda;
}

Elem support_map(const Representation& r, Elem l, Elem e) {
  const FiniteRig& lattice = *r.retic.lattice;
  std::vector<Elem> witnesses;
  for (Elem c = 0; c < lattice.size(); ++c) {
    if (lattice.leq(c, l) &&
        r.sheaf.restriction(c, l)(e) == r.sheaf.fiber(c)->one()) {
      witnesses.push_back(c);
    }
  }
  for (Elem c : witnesses) {
    bool largest = true;
    for (Elem w : witnesses) largest = largest && lattice.leq(w, c);
    if (largest) return c;
  }
  throw NoLargestWitness("no largest c ≤ " + lattice.label(l) + " trivializing " +
                         r.sheaf.fiber(l)->label(e));
}

SupportMapReport verify_support_map(const Representation& r) {
  const RigRef& lattice = r.retic.lattice;
  const PresheafOfRigs lambda = lambda_presheaf(lattice);
  const std::size_t n = lattice->size();
  SupportMapReport report;
  report.morphisms = report.local = report.surjective = true;
  report.natural = report.is_reticulation = true;

  std::vector<std::vector<Elem>> chi(n);  // chi[l][e] as a lattice element
  for (Elem l = 0; l < n; ++l) {
    const RigRef& fiber = r.sheaf.fiber(l);
    std::vector<Elem> map;
    for (Elem e = 0; e < fiber->size(); ++e) {
      chi[l].push_back(support_map(r, l, e));
      map.push_back(rank_below(*lattice, l, chi[l].back()));
    }
    if (morphism_defect(*fiber, *lambda.fiber(l), map)) {
      report.morphisms = false;
      report.components.emplace_back();
      continue;
    }
    RigMorphism component(fiber, lambda.fiber(l), std::move(map));
    report.local = report.local && is_local(component);
    report.surjective = report.surjective && component.is_surjective();
    report.is_reticulation = report.is_reticulation &&
                             kernel(component) == reticulate(fiber).congruence;
    report.components.emplace_back(std::move(component));
  }
  for (Elem c = 0; c < n; ++c) {
    for (Elem l = 0; l < n; ++l) {
      if (!lattice->leq(c, l)) continue;
      const auto& res = r.sheaf.restriction(c, l);
      for (Elem e = 0; e < r.sheaf.fiber(l)->size(); ++e) {
        if (chi[c][res(e)] != lattice->mul(chi[l][e], c)) report.natural = false;
      }
    }
  }
  return report;
}

SectionRig global_sections(const PresheafOfRigs& f) {
  const std::size_t n = f.size();
  if (f.lattice()) {
    const Elem top = f.lattice()->one();
    SectionRig out{f.fiber(top), {}};
    for (Elem z = 0; z < f.fiber(top)->size(); ++z) {
      std::vector<Elem> family(n);
      for (std::size_t d = 0; d < n; ++d) family[d] = f.restriction(d, top)(z);
      out.families.push_back(std::move(family));
    }
    return out;
  }

  // Literal limit: backtrack over the nodes, keeping every chosen component
  // compatible with the ones already chosen.
  std::vector<std::vector<Elem>> families;
  std::vector<Elem> current(n);
  auto consistent = [&](std::size_t p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (f.base().leq(q, p) && f.restriction(q, p)(current[p]) != current[q]) return false;
      if (f.base().leq(p, q) && f.restriction(p, q)(current[q]) != current[p]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      families.push_back(current);
      return;
    }
    for (Elem s = 0; s < f.fiber(p)->size(); ++s) {
      current[p] = s;
      if (consistent(p)) self(self, p + 1);
    }
  };
  search(search, 0);

  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < families.size(); ++i) index[families[i]] = i;
  const std::size_t m = families.size();
  RigTables t;
  t.name = "Γ";
  t.add.assign(m, std::vector<Elem>(m));
  t.mul.assign(m, std::vector<Elem>(m));
  std::vector<Elem> scratch(n);
  for (Elem i = 0; i < m; ++i) {
    std::string label = "<";
    for (std::size_t p = 0; p < n; ++p) {
      label += (p ? "," : "") + f.fiber(p)->label(families[i][p]);
    }
    t.labels.push_back(label + ">");
    for (Elem j = 0; j < m; ++j) {
      for (std::size_t p = 0; p < n; ++p) {
        scratch[p] = f.fiber(p)->add(families[i][p], families[j][p]);
      }
      t.add[i][j] = index.at(scratch);
      for (std::size_t p = 0; p < n; ++p) {
        scratch[p] = f.fiber(p)->mul(families[i][p], families[j][p]);
      }
      t.mul[i][j] = index.at(scratch);
    }
  }
  for (std::size_t p = 0; p < n; ++p) scratch[p] = f.fiber(p)->zero();
  t.zero = index.at(scratch);
  for (std::size_t p = 0; p < n; ++p) scratch[p] = f.fiber(p)->one();
  t.one = index.at(scratch);
  return SectionRig{validate_rig(std::move(t)), std::move(families)};
}

UnitIsoReport verify_unit_iso(const RigRef& a) {
  return verify_unit_iso(build_representation(a));
}

UnitIsoReport verify_unit_iso(const Representation& r) {
  std::vector<std::size_t> nodes(r.irreducibles.elements().begin(),
                                 r.irreducibles.elements().end());
  UnitIsoReport report{global_sections(restrict_to(r.sheaf, nodes)), {}, false};
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < report.sections.families.size(); ++i) {
    index[report.sections.families[i]] = i;
  }
  const FiniteRig& a = *r.source;
  std::vector<Elem> map(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    std::vector<Elem> family;
    for (std::size_t p : nodes) family.push_back(r.localizations[p].unit(x));
    auto it = index.find(family);
    if (it == index.end()) return report;
    map[x] = it->second;
  }
  if (morphism_defect(a, *report.sections.rig, map)) return report;
  report.comparison = RigMorphism(r.source, report.sections.rig, std::move(map));
  report.iso = report.comparison->is_bijective();
  return report;
}

Localization stalk(const RigRef& a, const SpectrumPoint& p) {
  return localize(a, p.filter());
}

SubdirectReport subdirect_embedding(const RigRef& a) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  if (a->is_trivial()) throw TrivialSource(a->name());
  SubdirectReport report{spectrum(a), {}, {}, {}};
  std::vector<RigRef> factors;
  for (const auto& p : report.points) {
    report.stalks.push_back(stalk(a, p));
    factors.push_back(report.stalks.back().rig);
  }
  report.product = product(factors, "∏ stalks of " + a->name());

  std::vector<Elem> map(a->size());
  std::vector<Elem> tuple(factors.size());
  for (Elem x = 0; x < a->size(); ++x) {
    for (std::size_t i = 0; i < factors.size(); ++i) tuple[i] = report.stalks[i].unit(x);
    map[x] = report.product.index_of(tuple);
  }
  report.embedding = RigMorphism(a, report.product.rig, std::move(map));
  report.injective = report.embedding->is_injective();
  report.components_surjective = true;
  report.factors_really_local = true;
  for (const auto& s : report.stalks) {
    report.components_surjective = report.components_surjective && s.unit.is_surjective();
    report.factors_really_local = report.factors_really_local && is_really_local(*s.rig);
  }
  return report;
}

PresheafOfRigs precompose(const PresheafOfRigs& f, const RigMorphism& along) {
  const RigRef& d = along.dom();
  if (!f.lattice() || !along.cod()->same_tables(*f.lattice())) {
    throw AlgebraError("precompose: map does not land in the presheaf's base");
  }
  if (!is_distributive_lattice(*d)) throw NotLattice(d->name());
  const std::size_t n = d->size();
  std::vector<RigRef> fibers;
  std::vector<std::optional<RigMorphism>> restrictions(n * n);
  for (Elem x = 0; x < n; ++x) fibers.push_back(f.fiber(along(x)));
  for (Elem c = 0; c < n; ++c) {
    for (Elem x = 0; x < n; ++x) {
      if (d->leq(c, x)) restrictions[c * n + x] = f.restriction(along(c), along(x));
    }
  }
  return PresheafOfRigs(order_poset(*d), std::move(fibers), std::move(restrictions), d);
}

MorphismRepresentation represent_morphism(const RigMorphism& h) {
  return represent_morphism(h, build_representation(h.dom()),
                            build_representation(h.cod()));
}

MorphismRepresentation represent_morphism(const RigMorphism& h,
                                          const Representation& dom,
                                          const Representation& cod) {
  RigMorphism lh = reticulate_morphism(h, dom.retic, cod.retic);
  PresheafOfRigs target = precompose(cod.sheaf, lh);
  const std::size_t n = dom.retic.lattice->size();
  std::vector<RigMorphism> components;
  for (Elem l = 0; l < n; ++l) {
    const Localization& image = cod.localizations[lh(l)];
    auto psi = factor_through(dom.localizations[l].unit, compose(image.unit, h));
    if (!psi) {
      throw NoSuchFactorization("no fiber map " + dom.localizations[l].rig->name() +
                                " → " + image.rig->name());
    }
    components.push_back(std::move(*psi));
  }

  MorphismRepresentation out{lh, std::move(target), std::move(components), true, true};
  const FiniteRig& la = *dom.retic.lattice;
  for (Elem c = 0; c < n; ++c) {
    for (Elem d = 0; d < n; ++d) {
      if (!la.leq(c, d)) continue;
      const auto lhs = compose(out.target.restriction(c, d), out.components[d]);
      const auto rhs = compose(out.components[c], dom.sheaf.restriction(c, d));
      if (!(lhs == rhs)) out.natural = false;
    }
  }
  for (Elem l = 0; l < n; ++l) {
    for (Elem e = 0; e < dom.sheaf.fiber(l)->size(); ++e) {
      const Elem lhs = support_map(cod, lh(l), out.components[l](e));
      const Elem rhs = lh(support_map(dom, l, e));
      if (lhs != rhs) out.chi_compatible = false;
    }
  }
  return out;
}

bool really_local_over_lattice(const PresheafOfRigs& f) {
  const RigRef& lattice = f.lattice();
  if (!lattice) throw AlgebraError("really-local check needs a lattice base");
  for (Elem d = 0; d < f.size(); ++d) {
    const FiniteRig& fiber = *f.fiber(d);
    if (fiber.is_trivial() && d != lattice->zero()) return false;
    const auto covers = binary_covers(*lattice, d);
    for (Elem u = 0; u < fiber.size(); ++u) {
      for (Elem v = 0; v < fiber.size(); ++v) {
        if (fiber.add(u, v) != fiber.one()) continue;
        bool covered = false;
        for (auto [a, b] : covers) {
          if (f.restriction(a, d)(u) == f.fiber(a)->one() &&
              f.restriction(b, d)(v) == f.fiber(b)->one()) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
    }
  }
  return true;
}

bool fiber_choice_independent(const RigRef& a) {
  const Reticulation r = reticulate(a);
  std::vector<std::optional<Localization>> cache(a->size());
  auto loc = [&](Elem x) -> const Localization& {
    if (!cache[x]) cache[x] = localize_at(a, x);
    return *cache[x];
  };
  for (Elem x = 0; x < a->size(); ++x) {
    for (Elem y = x + 1; y < a->size(); ++y) {
      if (r.unit(x) != r.unit(y)) continue;
      auto there = canonical_map(loc(x), loc(y));
      auto back = canonical_map(loc(y), loc(x));
      if (!there || !back) return false;
      if (!(compose(*back, *there) == identity(loc(x).rig))) return false;
      if (!(compose(*there, *back) == identity(loc(y).rig))) return false;
    }
  }
  return true;
}

}  // namespace rigrep
