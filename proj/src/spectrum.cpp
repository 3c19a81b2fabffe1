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

#include "rigrep/spectrum.hpp"

#include <algorithm>

#include "rigrep/reticulation.hpp"

namespace rigrep {

Poset::Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq,
             std::vector<Elem> elements)
    : labels_(std::move(labels)), leq_(std::move(leq)), elements_(std::move(elements)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n) throw MalformedTable("poset order has wrong size");
  for (const auto& row : leq_) {
    if (row.size() != n) throw MalformedTable("poset order is ragged");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw AxiomViolation("poset reflexivity", {i});
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) {
        throw AxiomViolation("poset antisymmetry", {i, j});
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) {
          throw AxiomViolation("poset transitivity", {i, j, k});
        }
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq_[i][k] && leq_[k][j]) direct = false;
      }
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

Poset order_poset(const FiniteRig& d) {
  std::vector<std::vector<bool>> leq(d.size(), std::vector<bool>(d.size()));
  std::vector<Elem> elements(d.size());
  for (Elem x = 0; x < d.size(); ++x) {
    elements[x] = x;
    for (Elem y = 0; y < d.size(); ++y) leq[x][y] = d.leq(x, y);
  }
  return Poset(d.labels(), std::move(leq), std::move(elements));
}

SpectrumPoint::SpectrumPoint(RigMorphism morphism) : morphism_(std::move(morphism)) {
  const FiniteRig& a = *morphism_.dom();
  const FiniteRig& cod = *morphism_.cod();
  if (cod.size() != 2 || cod.is_trivial() || !is_distributive_lattice(cod)) {
    throw AlgebraError("spectrum points must land in the lattice 2");
  }
  std::vector<char> in(a.size(), 0);
  for (Elem x = 0; x < a.size(); ++x) {
    if (morphism_(x) == cod.one()) {
      in[x] = 1;
      filter_.push_back(x);
    }
  }
  if (in[a.zero()]) throw AxiomViolation("filter excludes 0", {a.zero()});
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (in[x] && a.leq(x, y) && !in[y]) {
        throw AxiomViolation("filter upward closed", {x, y});
      }
      if (in[x] && in[y] && !in[a.mul(x, y)]) {
        throw AxiomViolation("filter multiplicative", {x, y});
      }
      if (in[a.add(x, y)] && !in[x] && !in[y]) {
        throw AxiomViolation("filter prime", {x, y});
      }
    }
  }
}

bool SpectrumPoint::contains(Elem x) const {
  return std::binary_search(filter_.begin(), filter_.end(), x);
}

Poset join_irreducibles(const FiniteRig& d) {
  if (!is_distributive_lattice(d)) throw NotLattice(d.name());
  std::vector<Elem> irr;
  for (Elem j = 0; j < d.size(); ++j) {
    if (j == d.zero()) continue;
    bool irreducible = true;
    for (Elem a = 0; a < d.size() && irreducible; ++a) {
      for (Elem b = 0; b < d.size(); ++b) {
        if (d.add(a, b) == j && a != j && b != j) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) irr.push_back(j);
  }
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(irr.size(), std::vector<bool>(irr.size()));
  for (std::size_t i = 0; i < irr.size(); ++i) {
    labels.push_back(d.label(irr[i]));
    for (std::size_t k = 0; k < irr.size(); ++k) leq[i][k] = d.leq(irr[i], irr[k]);
  }
  return Poset(std::move(labels), std::move(leq), std::move(irr));
}

std::vector<SpectrumPoint> spectrum(const RigRef& a) {
  std::vector<SpectrumPoint> out;
  for (auto& p : enumerate_homs(a, two())) out.emplace_back(std::move(p));
  return out;
}

Birkhoff birkhoff(const RigRef& d) {
  Birkhoff b{join_irreducibles(*d), spectrum(d), {}, {}};
  const std::size_t n = b.irreducibles.size();
  if (b.points.size() != n) {
    throw NoSuchFactorization("spectrum and join-irreducibles differ in size");
  }
  b.point_of.assign(n, n);
  b.irreducible_of.assign(n, n);

  for (std::size_t i = 0; i < n; ++i) {
    const Elem j = b.irreducibles.elements()[i];
    std::vector<Elem> map(d->size());
    for (Elem x = 0; x < d->size(); ++x) map[x] = d->leq(j, x) ? 1 : 0;
    if (morphism_defect(*d, *two(), map)) {
      throw NoSuchFactorization("j ↦ (j ≤ _) is not a lattice map for " + d->label(j));
    }
    for (std::size_t p = 0; p < n; ++p) {
      if (b.points[p].morphism().map() == map) b.point_of[i] = p;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    // The filter of a point of a finite lattice is principal: ↑(meet of it).
    Elem meet = d->one();
    for (Elem x : b.points[p].filter()) meet = d->mul(meet, x);
    for (std::size_t i = 0; i < n; ++i) {
      if (b.irreducibles.elements()[i] == meet) b.irreducible_of[p] = i;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (b.point_of[i] == n || b.irreducible_of[b.point_of[i]] != i) {
      throw NoSuchFactorization("Birkhoff correspondence is not a bijection");
    }
  }
  return b;
}

std::vector<std::size_t> basic_open(const std::vector<SpectrumPoint>& points,
                                    Elem x) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].contains(x)) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> basic_open(const RigRef& a, Elem x) {
  return basic_open(spectrum(a), x);
}

std::vector<std::pair<Elem, Elem>> binary_covers(const FiniteRig& d, Elem top) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < d.size(); ++a) {
    for (Elem b = 0; b < d.size(); ++b) {
      if (d.add(a, b) == top) out.emplace_back(a, b);
    }
  }
  return out;
}

bool spectrum_precomposition_bijective(const RigRef& a) {
  const Reticulation r = reticulate(a);
  const auto lattice_points = spectrum(r.lattice);
  const auto points = spectrum(a);
  if (lattice_points.size() != points.size()) return false;
  std::vector<char> hit(points.size(), 0);
  std::vector<std::size_t> image(lattice_points.size());
  for (std::size_t i = 0; i < lattice_points.size(); ++i) {
    const auto pulled = compose(lattice_points[i].morphism(), r.unit);
    bool found = false;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (points[p].morphism() == pulled) {
        if (hit[p]) return false;
        hit[p] = 1;
        image[i] = p;
        found = true;
      }
    }
    if (!found) return false;
  }
  for (Elem x = 0; x < a->size(); ++x) {
    std::vector<std::size_t> mapped;
    for (std::size_t i : basic_open(lattice_points, r.unit(x))) mapped.push_back(image[i]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != basic_open(points, x)) return false;
  }
  return true;
}

}  // namespace rigrep
