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

#include "rigrep/rig.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rigrep {

AxiomViolation::AxiomViolation(std::string law, std::vector<std::size_t> witness,
                               const std::string& detail)
    : AlgebraError([&] {
        std::ostringstream os;
        os << "axiom violated: " << law << " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
          os << (i ? ", " : "") << witness[i];
        }
        os << ")";
        if (!detail.empty()) os << ": " << detail;
        return os.str();
      }()),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

namespace {

void check_shape(const RigTables& t) {
  const std::size_t n = t.labels.size();
  if (n == 0) throw MalformedTable("rig '" + t.name + "' has an empty carrier");
  auto check = [&](const Table& table, const char* which) {
    if (table.size() != n) {
      throw MalformedTable(std::string(which) + " table has " +
                           std::to_string(table.size()) + " rows, expected " +
                           std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw MalformedTable(std::string(which) + " table row " +
                             std::to_string(i) + " is ragged");
      }
      for (Elem v : table[i]) {
        if (v >= n) {
          throw MalformedTable(std::string(which) + " table entry " +
                               std::to_string(v) + " out of range");
        }
      }
    }
  };
  check(t.add, "add");
  check(t.mul, "mul");
  if (t.zero >= n || t.one >= n) throw MalformedTable("zero/one out of range");
  std::set<std::string> seen(t.labels.begin(), t.labels.end());
  if (seen.size() != n) throw MalformedTable("element labels are not distinct");
}

// Checks the laws of a commutative monoid on one table.
void check_monoid(const std::vector<Elem>& op, std::size_t n, Elem unit,
                  const std::string& prefix) {
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (op[op[x * n + y] * n + z] != op[x * n + op[y * n + z]]) {
          throw AxiomViolation(prefix + "-associativity", {x, y, z});
        }
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (op[x * n + y] != op[y * n + x]) {
        throw AxiomViolation(prefix + "-commutativity", {x, y});
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (op[unit * n + x] != x) throw AxiomViolation(prefix + "-identity", {x});
  }
}

std::vector<Elem> flatten(const Table& t) {
  std::vector<Elem> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Table unflatten(const std::vector<Elem>& flat, std::size_t n) {
  Table t(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(i * n), n, t[i].begin());
  }
  return t;
}

}  // namespace

FiniteRig::FiniteRig(RigTables t) {
  check_shape(t);
  name_ = std::move(t.name);
  n_ = t.labels.size();
  labels_ = std::move(t.labels);
  add_ = flatten(t.add);
  mul_ = flatten(t.mul);
  zero_ = t.zero;
  one_ = t.one;

  check_monoid(add_, n_, zero_, "add");
  check_monoid(mul_, n_, one_, "mul");
  for (Elem x = 0; x < n_; ++x) {
    if (mul(x, zero_) != zero_) throw AxiomViolation("zero-annihilation", {x});
  }
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      for (Elem z = 0; z < n_; ++z) {
        if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
          throw AxiomViolation("distributivity", {x, y, z});
        }
      }
    }
  }

  leq_.assign(n_ * n_, 0);
  for (Elem w = 0; w < n_; ++w) {
    for (Elem x = 0; x < n_; ++x) leq_[x * n_ + add(w, x)] = 1;
  }
}

std::optional<Elem> FiniteRig::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem FiniteRig::pow(Elem x, std::size_t k) const {
  Elem result = one_;
  Elem base = x;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

Table FiniteRig::add_table() const { return unflatten(add_, n_); }
Table FiniteRig::mul_table() const { return unflatten(mul_, n_); }

RigTables FiniteRig::tables() const {
  return RigTables{name_, labels_, add_table(), mul_table(), zero_, one_};
}

bool FiniteRig::same_tables(const FiniteRig& other) const {
  return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ &&
         add_ == other.add_ && mul_ == other.mul_ && labels_ == other.labels_;
}

RigRef validate_rig(RigTables tables) {
  return std::make_shared<const FiniteRig>(std::move(tables));
}

// ---------------------------------------------------------------------------
// Morphisms

std::optional<std::string> morphism_defect(const FiniteRig& dom,
                                           const FiniteRig& cod,
                                           std::span<const Elem> map) {
  const std::size_t n = dom.size();
  if (map.size() != n) return "map has wrong length";
  for (Elem v : map) {
    if (v >= cod.size()) return "map value out of range";
  }
  if (map[dom.zero()] != cod.zero()) return "preserves 0";
  if (map[dom.one()] != cod.one()) return "preserves 1";
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (map[dom.add(x, y)] != cod.add(map[x], map[y])) return "preserves +";
      if (map[dom.mul(x, y)] != cod.mul(map[x], map[y])) return "preserves ·";
    }
  }
  return std::nullopt;
}

RigMorphism::RigMorphism(RigRef dom, RigRef cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (auto defect = morphism_defect(*dom_, *cod_, map_)) {
    throw AxiomViolation("morphism " + *defect, {},
                         dom_->name() + " -> " + cod_->name());
  }
}

bool RigMorphism::is_injective() const {
  std::vector<char> hit(cod_->size(), 0);
  for (Elem v : map_) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool RigMorphism::is_surjective() const {
  std::vector<char> hit(cod_->size(), 0);
  for (Elem v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool RigMorphism::operator==(const RigMorphism& other) const {
  return map_ == other.map_ && dom_->same_tables(*other.dom_) &&
         cod_->same_tables(*other.cod_);
}

RigMorphism identity(const RigRef& a) {
  std::vector<Elem> map(a->size());
  for (Elem x = 0; x < a->size(); ++x) map[x] = x;
  return RigMorphism(a, a, std::move(map));
}

RigMorphism compose(const RigMorphism& g, const RigMorphism& f) {
  if (!f.cod()->same_tables(*g.dom())) {
    throw AlgebraError("cannot compose " + f.dom()->name() + " -> " +
                       f.cod()->name() + " with " + g.dom()->name() + " -> " +
                       g.cod()->name());
  }
  std::vector<Elem> map(f.dom()->size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return RigMorphism(f.dom(), g.cod(), std::move(map));
}

RigMorphism inverse(const RigMorphism& f) {
  if (!f.is_bijective()) throw AlgebraError("morphism is not bijective");
  std::vector<Elem> map(f.cod()->size());
  for (Elem x = 0; x < f.dom()->size(); ++x) map[f(x)] = x;
  return RigMorphism(f.cod(), f.dom(), std::move(map));
}

// ---------------------------------------------------------------------------
// Powers and element classes

PowerSequence::PowerSequence(const FiniteRig& a, Elem x) {
  Elem current = a.one();
  std::vector<std::size_t> first_seen(a.size(), a.size() + 1);
  while (first_seen[current] > a.size()) {
    first_seen[current] = seq_.size();
    seq_.push_back(current);
    current = a.mul(current, x);
  }
  cycle_start_ = first_seen[current];
}

Elem PowerSequence::at(std::size_t k) const {
  if (k < seq_.size()) return seq_[k];
  const std::size_t period = seq_.size() - cycle_start_;
  return seq_[cycle_start_ + (k - cycle_start_) % period];
}

bool is_integral(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.add(a.one(), x) != a.one()) return false;
  }
  return true;
}

bool has_idempotent_addition(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.add(x, x) != x) return false;
  }
  return true;
}

bool is_distributive_lattice(const FiniteRig& a) {
  if (!is_integral(a)) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (!is_idempotent(a, x)) return false;
  }
  return true;
}

bool is_totally_ordered(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = x + 1; y < a.size(); ++y) {
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
    }
  }
  return true;
}

OrderRelation canonical_order(const RigRef& a) {
  OrderRelation order{a, std::vector<std::vector<bool>>(
                             a->size(), std::vector<bool>(a->size(), false))};
  for (Elem x = 0; x < a->size(); ++x) {
    for (Elem y = 0; y < a->size(); ++y) order.leq[x][y] = a->leq(x, y);
  }
  return order;
}

std::vector<Elem> invertible_elements(const FiniteRig& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.mul(x, y) == a.one()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool is_local(const RigMorphism& f) {
  const auto inv_dom = invertible_elements(*f.dom());
  const auto inv_cod = invertible_elements(*f.cod());
  std::vector<char> in_cod(f.cod()->size(), 0);
  for (Elem y : inv_cod) in_cod[y] = 1;
  std::vector<Elem> preimage;
  for (Elem x = 0; x < f.dom()->size(); ++x) {
    if (in_cod[f(x)]) preimage.push_back(x);
  }
  return preimage == inv_dom;
}

bool divides(const FiniteRig& a, Elem b, Elem target) {
  for (Elem u = 0; u < a.size(); ++u) {
    if (a.mul(b, u) == target) return true;
  }
  return false;
}

std::optional<Elem> boolean_complement(const FiniteRig& a, Elem x) {
  for (Elem y = 0; y < a.size(); ++y) {
    if (a.add(x, y) == a.one() && a.mul(x, y) == a.zero()) return y;
  }
  return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> boolean_pairs(const FiniteRig& a) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.add(x, y) == a.one() && a.mul(x, y) == a.zero()) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

bool is_idempotent(const FiniteRig& a, Elem x) { return a.mul(x, x) == x; }

bool is_strongly_idempotent(const FiniteRig& a, Elem x) {
  for (Elem y = 0; y < a.size(); ++y) {
    if (a.leq(y, x) && a.mul(x, y) != y) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteRig& a, Elem x) {
  PowerSequence powers(a, x);
  for (std::size_t k = 1; k <= powers.bound(); ++k) {
    if (powers.at(k) == a.zero()) return true;
  }
  return false;
}

std::optional<std::pair<Elem, Elem>> really_local_witness(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = x; y < a.size(); ++y) {
      if (a.add(x, y) == a.one() && x != a.one() && y != a.one()) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

bool is_really_local(const FiniteRig& a) {
  return !a.is_trivial() && !really_local_witness(a);
}

// ---------------------------------------------------------------------------
// Homomorphism search

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Backtracking over the elements of the domain in index order. Every new
// assignment is closed under + and · against all earlier ones, so a complete
// assignment is a morphism by construction.
class HomSearch {
 public:
  HomSearch(const RigRef& a, const RigRef& b, HomSearchOptions opts)
      : a_(a), b_(b), opts_(opts), image_(a->size(), kUnset),
        used_(b->size(), 0) {}

  std::vector<RigMorphism> run() {
    if (assign(a_->zero(), b_->zero()) && assign(a_->one(), b_->one()) &&
        propagate()) {
      search();
    }
    std::sort(results_.begin(), results_.end());
    std::vector<RigMorphism> out;
    out.reserve(results_.size());
    for (auto& map : results_) out.emplace_back(a_, b_, std::move(map));
    return out;
  }

 private:
  bool done() const { return opts_.limit != 0 && results_.size() >= opts_.limit; }

  bool assign(Elem x, Elem v) {
    if (image_[x] != kUnset) return image_[x] == v;
    if (opts_.injective && used_[v]) return false;
    image_[x] = v;
    used_[v] = 1;
    trail_.push_back(x);
    queue_.push_back(x);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Elem x = queue_.back();
      queue_.pop_back();
      // trail_ doubles as the list of assigned elements.
      for (std::size_t i = 0; i < trail_.size(); ++i) {
        const Elem y = trail_[i];
        if (!assign(a_->add(x, y), b_->add(image_[x], image_[y]))) return false;
        if (!assign(a_->mul(x, y), b_->mul(image_[x], image_[y]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem x = trail_.back();
      trail_.pop_back();
      used_[image_[x]] = 0;
      image_[x] = kUnset;
    }
    queue_.clear();
  }

  void search() {
    if (done()) return;
    auto next = std::find(image_.begin(), image_.end(), kUnset);
    if (next == image_.end()) {
      results_.push_back(image_);
      return;
    }
    const Elem x = static_cast<Elem>(next - image_.begin());
    for (Elem v = 0; v < b_->size() && !done(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(x, v) && propagate()) search();
      undo(mark);
    }
  }

  RigRef a_;
  RigRef b_;
  HomSearchOptions opts_;
  std::vector<Elem> image_;
  std::vector<char> used_;
  std::vector<Elem> trail_;
  std::vector<Elem> queue_;
  std::vector<std::vector<Elem>> results_;
};

}  // namespace

std::vector<RigMorphism> enumerate_homs(const RigRef& a, const RigRef& b,
                                        HomSearchOptions opts) {
  return HomSearch(a, b, opts).run();
}

std::optional<RigMorphism> find_isomorphism(const RigRef& a, const RigRef& b) {
  if (a->size() != b->size()) return std::nullopt;
  auto found = enumerate_homs(a, b, {.injective = true, .limit = 1});
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool are_isomorphic(const RigRef& a, const RigRef& b) {
  return find_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Constructions

RigRef trivial_rig() {
  static const RigRef rig = validate_rig({"1", {"0"}, {{0}}, {{0}}, 0, 0});
  return rig;
}

RigRef two() {
  static const RigRef rig =
      validate_rig({"2", {"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1});
  return rig;
}

Elem Product::index_of(std::span<const Elem> tuple) const {
  Elem index = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    index = index * projections[i].cod()->size() + tuple[i];
  }
  return index;
}

Product product(const RigRef& a, const RigRef& b) {
  const RigRef factors[] = {a, b};
  return product(factors);
}

Product product(std::span<const RigRef> factors, std::string name) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f->size();
  if (name.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      name += (i ? "×" : "") + factors[i]->name();
    }
    if (factors.empty()) name = "1";
  }

  // Decode every index once.
  std::vector<std::vector<Elem>> tuple(n, std::vector<Elem>(factors.size()));
  for (Elem idx = 0; idx < n; ++idx) {
    Elem rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      tuple[idx][i] = rest % factors[i]->size();
      rest /= factors[i]->size();
    }
  }
  auto encode = [&](const std::vector<Elem>& t) {
    Elem index = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      index = index * factors[i]->size() + t[i];
    }
    return index;
  };

  RigTables t;
  t.name = name;
  t.add.assign(n, std::vector<Elem>(n));
  t.mul.assign(n, std::vector<Elem>(n));
  std::vector<Elem> scratch(factors.size());
  for (Elem x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      label += (i ? "," : "") + factors[i]->label(tuple[x][i]);
    }
    t.labels.push_back(label + ")");
    for (Elem y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        scratch[i] = factors[i]->add(tuple[x][i], tuple[y][i]);
      }
      t.add[x][y] = encode(scratch);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        scratch[i] = factors[i]->mul(tuple[x][i], tuple[y][i]);
      }
      t.mul[x][y] = encode(scratch);
    }
  }
  for (std::size_t i = 0; i < factors.size(); ++i) scratch[i] = factors[i]->zero();
  t.zero = encode(scratch);
  for (std::size_t i = 0; i < factors.size(); ++i) scratch[i] = factors[i]->one();
  t.one = encode(scratch);

  Product out{validate_rig(std::move(t)), {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Elem> map(n);
    for (Elem x = 0; x < n; ++x) map[x] = tuple[x][i];
    out.projections.emplace_back(out.rig, factors[i], std::move(map));
  }
  return out;
}

RigRef down_set_rig(const RigRef& a, Elem top) {
  std::vector<Elem> members;
  std::vector<Elem> position(a->size(), kUnset);
  for (Elem x = 0; x < a->size(); ++x) {
    if (a->leq(x, top)) {
      position[x] = members.size();
      members.push_back(x);
    }
  }
  const std::size_t n = members.size();
  RigTables t;
  t.name = "↓" + a->label(top);
  t.add.assign(n, std::vector<Elem>(n));
  t.mul.assign(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i) {
    t.labels.push_back(a->label(members[i]));
    for (Elem j = 0; j < n; ++j) {
      const Elem s = position[a->add(members[i], members[j])];
      const Elem p = position[a->mul(members[i], members[j])];
      if (s == kUnset || p == kUnset) {
        throw MalformedTable("↓" + a->label(top) + " is not closed");
      }
      t.add[i][j] = s;
      t.mul[i][j] = p;
    }
  }
  if (position[a->zero()] == kUnset) {
    throw MalformedTable("↓" + a->label(top) + " does not contain 0");
  }
  t.zero = position[a->zero()];
  t.one = position[top];
  return validate_rig(std::move(t));
}

BooleanDecomposition decompose_by_boolean(const RigRef& a, Elem x) {
  if (!is_integral(*a)) throw NotIntegral(a->name());
  auto complement = boolean_complement(*a, x);
  if (!complement) throw NotBoolean(a->label(x));
  const Elem y = *complement;

  RigRef first = down_set_rig(a, x);
  RigRef second = down_set_rig(a, y);
  Product factors = product(first, second);
  auto rank = [&](Elem top, Elem v) {
    Elem r = 0;
    for (Elem w = 0; w < v; ++w) r += a->leq(w, top) ? 1 : 0;
    return r;
  };
  std::vector<Elem> map(a->size());
  for (Elem v = 0; v < a->size(); ++v) {
    const Elem parts[] = {rank(x, a->mul(x, v)), rank(y, a->mul(y, v))};
    map[v] = factors.index_of(parts);
  }
  RigMorphism iso(a, factors.rig, std::move(map));
  if (!iso.is_bijective()) {
    throw NoSuchFactorization("x ↦ (ax, a′x) is not bijective on " + a->name());
  }
  return {x, y, first, second, std::move(factors), std::move(iso)};
}

std::string describe(const FiniteRig& a) {
  std::ostringstream os;
  os << "rig " << a.name() << " (" << a.size() << (a.size() == 1 ? " element)\n" : " elements)\n");
  os << "  elements:";
  for (const auto& l : a.labels()) os << ' ' << l;
  os << "\n  zero: " << a.label(a.zero()) << "  one: " << a.label(a.one()) << '\n';
  auto table = [&](const char* title, auto op) {
    os << "  " << title << ":\n";
    for (Elem x = 0; x < a.size(); ++x) {
      os << "   ";
      for (Elem y = 0; y < a.size(); ++y) os << ' ' << a.label(op(x, y));
      os << '\n';
    }
  };
  table("add", [&](Elem x, Elem y) { return a.add(x, y); });
  table("mul", [&](Elem x, Elem y) { return a.mul(x, y); });
  return os.str();
}

}  // namespace rigrep
