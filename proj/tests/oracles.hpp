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

// Brute-force reference implementations used as test oracles. They read
// only the raw operation tables and deliberately avoid every algorithm in
// the library: no backtracking, no union-find, no power-cycle bounds beyond
// the trivial n + 1, no congruence machinery.

#ifndef RIGREP_TESTS_ORACLES_HPP_
#define RIGREP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigrep/rig.hpp"

namespace oracle {

using rigrep::Elem;
using rigrep::FiniteRig;
using rigrep::RigTables;

using Map = std::vector<Elem>;
using Partition = std::vector<Elem>;  // least member of each element's block

/// Element by label; fails loudly on a typo in a test.
inline Elem at(const FiniteRig& a, const std::string& label) {
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.label(x) == label) return x;
  }
  throw std::logic_error("no element " + label + " in " + a.name());
}

// ---------------------------------------------------------------------------
// Rig laws on raw tables.

/// Does `law` fail at `w` in the given tables? The witness layouts are:
///   *-associativity (x, y, z)   *-commutativity (x, y)   *-identity (x)
///   zero-annihilation (x)       distributivity (x, y, z)
inline bool law_fails_at(const RigTables& t, const std::string& law,
                         const std::vector<std::size_t>& w) {
  const bool is_add = law.rfind("add-", 0) == 0;
  const auto& op = is_add ? t.add : t.mul;
  const Elem unit = is_add ? t.zero : t.one;
  auto has = [&](std::size_t k) { return w.size() == k; };
  if (law.find("associativity") != std::string::npos && has(3)) {
    return op[op[w[0]][w[1]]][w[2]] != op[w[0]][op[w[1]][w[2]]];
  }
  if (law.find("commutativity") != std::string::npos && has(2)) {
    return op[w[0]][w[1]] != op[w[1]][w[0]];
  }
  if (law.find("identity") != std::string::npos && has(1)) {
    return op[unit][w[0]] != w[0] || op[w[0]][unit] != w[0];
  }
  if (law == "zero-annihilation" && has(1)) {
    return t.mul[w[0]][t.zero] != t.zero || t.mul[t.zero][w[0]] != t.zero;
  }
  if (law == "distributivity" && has(3)) {
    const auto& a = t.add;
    const auto& m = t.mul;
    const Elem x = w[0], y = w[1], z = w[2];
    return m[a[x][y]][z] != a[m[x][z]][m[y][z]] || m[z][a[x][y]] != a[m[z][x]][m[z][y]];
  }
  return false;
}

/// True iff every rig law holds on the tables (plain triple loops).
inline bool all_laws_hold(const RigTables& t) {
  const std::size_t n = t.labels.size();
  const auto& a = t.add;
  const auto& m = t.mul;
  for (Elem x = 0; x < n; ++x) {
    if (a[t.zero][x] != x || a[x][t.zero] != x || m[t.one][x] != x || m[x][t.one] != x)
      return false;
    if (m[x][t.zero] != t.zero || m[t.zero][x] != t.zero) return false;
    for (Elem y = 0; y < n; ++y) {
      if (a[x][y] != a[y][x] || m[x][y] != m[y][x]) return false;
      for (Elem z = 0; z < n; ++z) {
        if (a[a[x][y]][z] != a[x][a[y][z]] || m[m[x][y]][z] != m[x][m[y][z]]) return false;
        if (m[x][a[y][z]] != a[m[x][y]][m[x][z]]) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Order, powers and element classes.

/// x ≤ y iff w + x = y for some w (scan all w).
inline bool leq(const FiniteRig& a, Elem x, Elem y) {
  for (Elem w = 0; w < a.size(); ++w) {
    if (a.add(w, x) == y) return true;
  }
  return false;
}

/// x^k by repeated multiplication.
inline Elem power(const FiniteRig& a, Elem x, std::size_t k) {
  Elem r = a.one();
  for (std::size_t i = 0; i < k; ++i) r = a.mul(r, x);
  return r;
}

/// Some power x^m (1 ≤ m ≤ n + 1) lies below y. By pigeonhole every power
/// x^m with m ≥ 1 already occurs among x^1 .. x^{n+1}.
inline bool power_below(const FiniteRig& a, Elem x, Elem y) {
  for (std::size_t m = 1; m <= a.size() + 1; ++m) {
    if (leq(a, power(a, x, m), y)) return true;
  }
  return false;
}

inline bool nilpotent(const FiniteRig& a, Elem x) {
  for (std::size_t m = 1; m <= a.size() + 1; ++m) {
    if (power(a, x, m) == a.zero()) return true;
  }
  return false;
}

inline bool integral(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.add(a.one(), x) != a.one()) return false;
  }
  return true;
}

inline std::vector<Elem> invertibles(const FiniteRig& a) {
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

inline bool really_local(const FiniteRig& a) {
  if (a.zero() == a.one()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.add(x, y) == a.one() && x != a.one() && y != a.one()) return false;
    }
  }
  return true;
}

inline bool totally_ordered(const FiniteRig& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (!leq(a, x, y) && !leq(a, y, x)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphisms by exhaustive enumeration of all |B|^|A| functions.

inline bool preserves(const FiniteRig& a, const FiniteRig& b, const Map& f) {
  if (f[a.zero()] != b.zero() || f[a.one()] != b.one()) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y])) return false;
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

/// Every structure-preserving function, in lexicographic order of the map
/// (odometer with the first element most significant).
inline std::vector<Map> homs(const FiniteRig& a, const FiniteRig& b) {
  std::vector<Map> out;
  Map f(a.size(), 0);
  while (true) {
    if (preserves(a, b, f)) out.push_back(f);
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++f[i] < b.size()) break;
      f[i] = 0;
      if (i == 0) return out;
    }
    if (a.size() == 0) return out;
  }
}

inline bool is_bijective(const Map& f, std::size_t cod_size) {
  std::set<Elem> image(f.begin(), f.end());
  return f.size() == cod_size && image.size() == cod_size;
}

inline bool isomorphic(const FiniteRig& a, const FiniteRig& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : homs(a, b)) {
    if (is_bijective(f, b.size())) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Relations and partitions.

using Relation = std::function<bool(Elem, Elem)>;

/// Partition of an equivalence given as a predicate, by least member.
inline Partition partition_of(std::size_t n, const Relation& related) {
  Partition p(n);
  for (Elem x = 0; x < n; ++x) {
    p[x] = x;
    for (Elem y = 0; y < x; ++y) {
      if (related(x, y)) {
        p[x] = p[y];
        break;
      }
    }
  }
  return p;
}

inline std::size_t blocks(const Partition& p) {
  return std::set<Elem>(p.begin(), p.end()).size();
}

inline bool compatible(const FiniteRig& a, const Partition& p) {
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem x2 = 0; x2 < a.size(); ++x2) {
      if (p[x] != p[x2]) continue;
      for (Elem z = 0; z < a.size(); ++z) {
        if (p[a.add(x, z)] != p[a.add(x2, z)] || p[a.mul(x, z)] != p[a.mul(x2, z)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// The smallest congruence containing `pairs`, by naive fixpoint iteration
/// of a boolean relation matrix (reflexive, symmetric, transitive and
/// translation closure until nothing changes).
inline Partition generated_congruence(const FiniteRig& a,
                                      const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x) r[x][x] = true;
  for (auto [x, y] : pairs) r[x][y] = r[y][x] = true;
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](Elem x, Elem y) {
      if (!r[x][y]) {
        r[x][y] = true;
        changed = true;
      }
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!r[x][y]) continue;
        set(y, x);
        for (Elem z = 0; z < n; ++z) {
          if (r[y][z]) set(x, z);
          set(a.add(x, z), a.add(y, z));
          set(a.mul(x, z), a.mul(y, z));
        }
      }
    }
  }
  return partition_of(n, [&](Elem x, Elem y) { return r[x][y]; });
}

/// Closure of `seeds` ∪ {1} under ·, by fixpoint.
inline std::set<Elem> closure(const FiniteRig& a, const std::vector<Elem>& seeds) {
  std::set<Elem> s(seeds.begin(), seeds.end());
  s.insert(a.one());
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x : std::vector<Elem>(s.begin(), s.end())) {
      for (Elem y : std::vector<Elem>(s.begin(), s.end())) {
        changed = s.insert(a.mul(x, y)).second || changed;
      }
    }
  }
  return s;
}

/// x ≡_F y iff w·x ≤ y and v·y ≤ x for some w, v in F (the definition,
/// evaluated directly).
inline Partition localization_partition(const FiniteRig& a, const std::set<Elem>& f) {
  auto below = [&](Elem x, Elem y) {
    for (Elem w : f) {
      if (leq(a, a.mul(w, x), y)) return true;
    }
    return false;
  };
  return partition_of(a.size(), [&](Elem x, Elem y) { return below(x, y) && below(y, x); });
}

/// x ∼ y iff each has a power below the other.
inline Partition reticulation_partition(const FiniteRig& a) {
  return partition_of(a.size(), [&](Elem x, Elem y) {
    return power_below(a, x, y) && power_below(a, y, x);
  });
}

// ---------------------------------------------------------------------------
// Lattices.

inline bool is_distributive_lattice(const FiniteRig& a) {
  if (!integral(a)) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (a.mul(x, x) != x) return false;
  }
  return true;
}

inline std::vector<Elem> join_irreducibles(const FiniteRig& d) {
  std::vector<Elem> out;
  for (Elem j = 0; j < d.size(); ++j) {
    if (j == d.zero()) continue;
    bool irreducible = true;
    for (Elem x = 0; x < d.size(); ++x) {
      for (Elem y = 0; y < d.size(); ++y) {
        if (d.add(x, y) == j && x != j && y != j) irreducible = false;
      }
    }
    if (irreducible) out.push_back(j);
  }
  return out;
}

/// All maps A → 2 that preserve the structure; 2 is given as a rig.
inline std::vector<Map> points(const FiniteRig& a, const FiniteRig& two) {
  return homs(a, two);
}

// ---------------------------------------------------------------------------
// Residuation and MV-algebras.

/// a ⊸ b as the unique c with a·c' ≤ b ⟺ c' ≤ c, found by scanning all c
/// (throws std::logic_error if no such c exists).
inline Elem residual(const FiniteRig& a, Elem x, Elem y) {
  for (Elem c = 0; c < a.size(); ++c) {
    bool adjoint = true;
    for (Elem d = 0; d < a.size() && adjoint; ++d) {
      adjoint = leq(a, a.mul(x, d), y) == leq(a, d, c);
    }
    if (adjoint) return c;
  }
  throw std::logic_error("no residual");
}

/// Every subset of an n-element MV-algebra (n ≤ 12) that is an ideal:
/// contains 0, closed under ⊕, downward closed for x ≤ y ⟺ ¬x ⊕ y = 1.
template <typename Oplus, typename Neg>
std::vector<std::vector<Elem>> mv_ideals_by_subsets(std::size_t n, Elem zero, Oplus oplus,
                                                    Neg neg) {
  const Elem one = neg(zero);
  auto mv_leq = [&](Elem x, Elem y) { return oplus(neg(x), y) == one; };
  std::vector<std::vector<Elem>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto in = [&](Elem x) { return ((mask >> x) & 1) != 0; };
    if (!in(zero)) continue;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (in(y) && !in(oplus(x, y))) ok = false;
        if (mv_leq(y, x) && !in(y)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Elem> ideal;
    for (Elem x = 0; x < n; ++x) {
      if (in(x)) ideal.push_back(x);
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace oracle

#endif  // RIGREP_TESTS_ORACLES_HPP_
