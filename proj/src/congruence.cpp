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

#include "rigrep/congruence.hpp"

#include <numeric>

namespace rigrep {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Elem{0});
  }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins so roots are always least class members.
  bool unite(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<Elem> parent_;
};

}  // namespace

Congruence::Congruence(RigRef over, std::vector<Elem> class_of)
    : over_(std::move(over)), class_of_(std::move(class_of)) {
  const FiniteRig& a = *over_;
  const std::size_t n = a.size();
  if (class_of_.size() != n) throw MalformedTable("congruence has wrong length");
  for (Elem x = 0; x < n; ++x) {
    const Elem r = class_of_[x];
    if (r >= n || r > x || class_of_[r] != r) {
      throw AxiomViolation("congruence representative", {x});
    }
  }
  // With least representatives it suffices to check every element against
  // its representative: x ≡ r(x) implies x∘z ≡ r(x)∘z for all z.
  for (Elem x = 0; x < n; ++x) {
    const Elem r = class_of_[x];
    if (r == x) continue;
    for (Elem z = 0; z < n; ++z) {
      if (!related(a.add(x, z), a.add(r, z))) {
        throw AxiomViolation("congruence compatibility (+)", {x, r, z});
      }
      if (!related(a.mul(x, z), a.mul(r, z))) {
        throw AxiomViolation("congruence compatibility (·)", {x, r, z});
      }
    }
  }
}

Congruence Congruence::from_relation(
    RigRef over, const std::function<bool(Elem, Elem)>& related) {
  const std::size_t n = over->size();
  std::vector<Elem> class_of(n);
  for (Elem x = 0; x < n; ++x) {
    if (!related(x, x)) throw AxiomViolation("equivalence reflexivity", {x});
    Elem r = x;
    for (Elem y = 0; y < x; ++y) {
      if (related(x, y)) {
        r = y;
        break;
      }
    }
    class_of[x] = r == x ? x : class_of[r];
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (related(x, y) != (class_of[x] == class_of[y])) {
        throw AxiomViolation("equivalence transitivity/symmetry", {x, y});
      }
    }
  }
  return Congruence(std::move(over), std::move(class_of));
}

std::vector<Elem> Congruence::representatives() const {
  std::vector<Elem> reps;
  for (Elem x = 0; x < class_of_.size(); ++x) {
    if (class_of_[x] == x) reps.push_back(x);
  }
  return reps;
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> slot(class_of_.size());
  for (Elem x = 0; x < class_of_.size(); ++x) {
    if (class_of_[x] == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    out[slot[class_of_[x]]].push_back(x);
  }
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (Elem x = 0; x < class_of_.size(); ++x) {
    if (!other.related(x, class_of_[x])) return false;
  }
  return true;
}

Congruence identity_congruence(const RigRef& a) {
  std::vector<Elem> class_of(a->size());
  std::iota(class_of.begin(), class_of.end(), Elem{0});
  return Congruence(a, std::move(class_of));
}

Congruence total_congruence(const RigRef& a) {
  return Congruence(a, std::vector<Elem>(a->size(), 0));
}

Congruence congruence_from_pairs(const RigRef& a,
                                 const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = a->size();
  UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    // Translations of a merged pair generate everything compatibility needs.
    for (Elem z = 0; z < n; ++z) {
      work.emplace_back(a->add(x, z), a->add(y, z));
      work.emplace_back(a->mul(x, z), a->mul(y, z));
    }
  }
  std::vector<Elem> class_of(n);
  for (Elem x = 0; x < n; ++x) class_of[x] = uf.find(x);
  return Congruence(a, std::move(class_of));
}

Quotient quotient(const RigRef& a, const Congruence& theta, std::string name) {
  const auto reps = theta.representatives();
  std::vector<Elem> slot(a->size());
  for (Elem i = 0; i < reps.size(); ++i) slot[reps[i]] = i;

  const std::size_t m = reps.size();
  RigTables t;
  t.name = name.empty() ? a->name() + "/~" : std::move(name);
  t.add.assign(m, std::vector<Elem>(m));
  t.mul.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    t.labels.push_back(a->label(reps[i]));
    for (Elem j = 0; j < m; ++j) {
      t.add[i][j] = slot[theta.rep(a->add(reps[i], reps[j]))];
      t.mul[i][j] = slot[theta.rep(a->mul(reps[i], reps[j]))];
    }
  }
  t.zero = slot[theta.rep(a->zero())];
  t.one = slot[theta.rep(a->one())];

  RigRef q = validate_rig(std::move(t));
  std::vector<Elem> map(a->size());
  for (Elem x = 0; x < a->size(); ++x) map[x] = slot[theta.rep(x)];
  return Quotient{q, RigMorphism(a, q, std::move(map))};
}

Congruence join(const Congruence& first, const Congruence& second) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < first.class_of().size(); ++x) {
    if (first.rep(x) != x) pairs.emplace_back(x, first.rep(x));
    if (second.rep(x) != x) pairs.emplace_back(x, second.rep(x));
  }
  return congruence_from_pairs(first.over(), pairs);
}

Congruence kernel(const RigMorphism& f) {
  const std::size_t n = f.dom()->size();
  std::vector<Elem> first_with_image(f.cod()->size(), n);
  std::vector<Elem> class_of(n);
  for (Elem x = 0; x < n; ++x) {
    Elem& first = first_with_image[f(x)];
    if (first == n) first = x;
    class_of[x] = first;
  }
  return Congruence(f.dom(), std::move(class_of));
}

std::optional<RigMorphism> factor_through(const RigMorphism& q,
                                          const RigMorphism& f) {
  if (!q.dom()->same_tables(*f.dom())) return std::nullopt;
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> map(q.cod()->size(), kUnset);
  for (Elem x = 0; x < q.dom()->size(); ++x) {
    Elem& slot = map[q(x)];
    if (slot == kUnset) {
      slot = f(x);
    } else if (slot != f(x)) {
      return std::nullopt;
    }
  }
  for (Elem v : map) {
    if (v == kUnset) return std::nullopt;  // q not surjective
  }
  if (morphism_defect(*q.cod(), *f.cod(), map)) return std::nullopt;
  return RigMorphism(q.cod(), f.cod(), std::move(map));
}

}  // namespace rigrep
