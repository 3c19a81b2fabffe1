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

// Finite rigs (commutative semirings) stored as operation tables over the
// dense carrier 0..n-1. Everything downstream works on indices; labels are
// only for presentation.

#ifndef RIGREP_RIG_HPP_
#define RIGREP_RIG_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigrep/error.hpp"

namespace rigrep {

using Elem = std::size_t;
using Table = std::vector<std::vector<Elem>>;

/// Unvalidated input to `validate_rig`.
struct RigTables {
  std::string name;
  std::vector<std::string> labels;
  Table add;
  Table mul;
  Elem zero = 0;
  Elem one = 0;
};

/// A finite rig. Instances only exist once every rig law has been checked
/// cell by cell, so all other code may assume the laws.
class FiniteRig {
 public:
  /// Throws MalformedTable on shape problems and AxiomViolation naming the
  /// first failing law otherwise.
  explicit FiniteRig(RigTables tables);

  std::size_t size() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  std::optional<Elem> find(const std::string& label) const;

  Elem add(Elem x, Elem y) const { return add_[x * n_ + y]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * n_ + y]; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  /// Canonical pre-order: x <= y iff w + x = y for some w.
  bool leq(Elem x, Elem y) const { return leq_[x * n_ + y] != 0; }

  bool is_trivial() const { return zero_ == one_; }

  /// x^k, with x^0 = 1.
  Elem pow(Elem x, std::size_t k) const;

  Table add_table() const;
  Table mul_table() const;
  RigTables tables() const;

  /// Same tables, same labels.
  bool same_tables(const FiniteRig& other) const;

 private:
  std::string name_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<char> leq_;
  Elem zero_;
  Elem one_;
};

using RigRef = std::shared_ptr<const FiniteRig>;

RigRef validate_rig(RigTables tables);

/// A rig morphism between two validated rigs; construction checks that the
/// map preserves 0, 1, + and ·.
class RigMorphism {
 public:
  RigMorphism(RigRef dom, RigRef cod, std::vector<Elem> map);

  const RigRef& dom() const { return dom_; }
  const RigRef& cod() const { return cod_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Same map between rigs with the same tables.
  bool operator==(const RigMorphism& other) const;

 private:
  RigRef dom_;
  RigRef cod_;
  std::vector<Elem> map_;
};

/// Returns the name of the first law `map` breaks, if any.
std::optional<std::string> morphism_defect(const FiniteRig& dom,
                                           const FiniteRig& cod,
                                           std::span<const Elem> map);

RigMorphism identity(const RigRef& a);
/// g ∘ f. Requires f.cod() and g.dom() to have the same tables.
RigMorphism compose(const RigMorphism& g, const RigMorphism& f);
/// Two-sided inverse of a bijective morphism.
RigMorphism inverse(const RigMorphism& f);

struct OrderRelation {
  RigRef over;
  std::vector<std::vector<bool>> leq;

  bool operator()(Elem x, Elem y) const { return leq[x][y]; }
};

/// Successive powers 1, x, x², ... until the first repeat. The sequence is
/// eventually periodic with at most n + 1 distinct prefix entries.
class PowerSequence {
 public:
  PowerSequence(const FiniteRig& a, Elem x);

  Elem at(std::size_t k) const;
  /// Number of exponents worth enumerating: every power equals some x^k with
  /// k < bound().
  std::size_t bound() const { return seq_.size(); }

 private:
  std::vector<Elem> seq_;
  std::size_t cycle_start_ = 0;
};

bool is_integral(const FiniteRig& a);
bool has_idempotent_addition(const FiniteRig& a);
/// Integral with idempotent multiplication; + is join and · is meet.
bool is_distributive_lattice(const FiniteRig& a);
bool is_totally_ordered(const FiniteRig& a);

OrderRelation canonical_order(const RigRef& a);
std::vector<Elem> invertible_elements(const FiniteRig& a);
/// f⁻¹(Inv(cod)) = Inv(dom).
bool is_local(const RigMorphism& f);

/// b divides a: a = b·u for some u.
bool divides(const FiniteRig& a, Elem b, Elem target);
std::optional<Elem> boolean_complement(const FiniteRig& a, Elem x);
std::vector<std::pair<Elem, Elem>> boolean_pairs(const FiniteRig& a);
bool is_idempotent(const FiniteRig& a, Elem x);
bool is_strongly_idempotent(const FiniteRig& a, Elem x);
bool is_nilpotent(const FiniteRig& a, Elem x);

/// Non-trivial and x + y = 1 forces x = 1 or y = 1. Returns false for the
/// trivial rig.
bool is_really_local(const FiniteRig& a);
/// A pair (x, y) with x + y = 1, x ≠ 1, y ≠ 1, if one exists.
std::optional<std::pair<Elem, Elem>> really_local_witness(const FiniteRig& a);

struct HomSearchOptions {
  bool injective = false;
  /// Stop after this many results; 0 means no limit.
  std::size_t limit = 0;
};

/// All rig morphisms a → b, lexicographic in the map.
std::vector<RigMorphism> enumerate_homs(const RigRef& a, const RigRef& b,
                                        HomSearchOptions opts = {});
std::optional<RigMorphism> find_isomorphism(const RigRef& a, const RigRef& b);
bool are_isomorphic(const RigRef& a, const RigRef& b);

/// The one-element rig.
RigRef trivial_rig();
/// The initial integral rig {0 < 1}.
RigRef two();

struct Product {
  RigRef rig;
  std::vector<RigMorphism> projections;
  /// Index of the tuple in the product carrier (mixed radix, first factor
  /// most significant).
  Elem index_of(std::span<const Elem> tuple) const;
};

Product product(const RigRef& a, const RigRef& b);
Product product(std::span<const RigRef> factors, std::string name = {});

/// ↓a with the restricted operations and `a` as unit. Only a rig when a is
/// strongly idempotent (checked by the constructor of the result).
RigRef down_set_rig(const RigRef& a, Elem top);

struct BooleanDecomposition {
  Elem element;
  Elem complement;
  RigRef first;   // ↓a
  RigRef second;  // ↓a′
  Product factors;
  /// x ↦ (a·x, a′·x), verified bijective.
  RigMorphism iso;
};

/// Throws NotIntegral or NotBoolean.
BooleanDecomposition decompose_by_boolean(const RigRef& a, Elem x);

std::string describe(const FiniteRig& a);

}  // namespace rigrep

#endif  // RIGREP_RIG_HPP_
