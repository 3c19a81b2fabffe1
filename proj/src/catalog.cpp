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

#include "rigrep/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <regex>

namespace rigrep {
namespace {

constexpr std::size_t kMaxStructured = 32;
constexpr std::size_t kMaxRandom = 5;
constexpr int kRandomAttempts = 256;

void check_range(const std::string& what, std::size_t value, std::size_t lo,
                 std::size_t hi) {
  if (value < lo || value > hi) {
    throw ParseError(what, "parameter " + std::to_string(value) + " outside [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::string middle_label(std::size_t i) {
  // i counts from 1 for the first element strictly between 0 and 1.
  if (i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return "c" + std::to_string(i);
}

RigTables square_tables(std::string name, std::vector<std::string> labels) {
  RigTables t;
  t.name = std::move(name);
  const std::size_t n = labels.size();
  t.labels = std::move(labels);
  t.add.assign(n, std::vector<Elem>(n, 0));
  t.mul.assign(n, std::vector<Elem>(n, 0));
  return t;
}

// Least element of `candidates` under `leq`, if there is one.
std::optional<Elem> least(const std::vector<Elem>& candidates,
                          const std::vector<std::vector<bool>>& leq) {
  for (Elem c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](Elem d) { return leq[c][d]; })) {
      return c;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> transpose(const std::vector<std::vector<bool>>& leq) {
  std::vector<std::vector<bool>> out(leq.size(), std::vector<bool>(leq.size()));
  for (std::size_t i = 0; i < leq.size(); ++i) {
    for (std::size_t j = 0; j < leq.size(); ++j) out[j][i] = leq[i][j];
  }
  return out;
}

std::optional<Table> joins(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  Table t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      std::vector<Elem> upper;
      for (Elem u = 0; u < n; ++u) {
        if (leq[x][u] && leq[y][u]) upper.push_back(u);
      }
      auto j = least(upper, leq);
      if (!j) return std::nullopt;
      t[x][y] = *j;
    }
  }
  return t;
}

// Uniform-enough draw in [0, k); raw modulo keeps the stream portable.
std::size_t draw(std::mt19937_64& rng, std::size_t k) {
  return static_cast<std::size_t>(rng() % k);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

bool rig_laws_hold(const Table& add, const Table& mul) {
  const std::size_t n = add.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) return false;
        if (mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]) return false;
      }
    }
  }
  return true;
}

// Fills the undetermined cells of `mul` (commutative, below both arguments)
// in order, trying candidates in a seeded order.
bool search_mul(const std::vector<std::pair<Elem, Elem>>& cells, std::size_t next,
                const std::vector<std::vector<bool>>& leq, const Table& add, Table& mul,
                std::mt19937_64& rng, std::size_t& budget) {
  if (next == cells.size()) return rig_laws_hold(add, mul);
  if (budget == 0) return false;
  --budget;
  const auto [x, y] = cells[next];
  std::vector<Elem> candidates;
  for (Elem c = 0; c < add.size(); ++c) {
    if (leq[c][x] && leq[c][y]) candidates.push_back(c);
  }
  shuffle(candidates, rng);
  for (Elem c : candidates) {
    mul[x][y] = mul[y][x] = c;
    if (search_mul(cells, next + 1, leq, add, mul, rng, budget)) return true;
  }
  return false;
}

RigRef product_named(std::vector<RigRef> factors, std::string name) {
  return product(std::span<const RigRef>(factors), std::move(name)).rig;
}

}  // namespace

RigRef lattice_from_order(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  auto join = joins(leq);
  auto meet = joins(transpose(leq));
  std::vector<Elem> all(n);
  std::iota(all.begin(), all.end(), Elem{0});
  auto bottom = least(all, leq);
  auto top = least(all, transpose(leq));
  if (!join || !meet || !bottom || !top) throw NotLattice(name);
  RigTables t = square_tables(std::move(name), std::move(labels));
  t.add = std::move(*join);
  t.mul = std::move(*meet);
  t.zero = *bottom;
  t.one = *top;
  return validate_rig(std::move(t));
}

RigRef chain(std::size_t n) {
  check_range("chain", n, 1, kMaxStructured);
  if (n == 1) return trivial_rig();
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back(middle_label(i));
  labels.push_back("1");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) leq[x][y] = x <= y;
  }
  return lattice_from_order("C" + std::to_string(n), std::move(labels), leq);
}

RigRef lukasiewicz(std::size_t n) {
  check_range("lukasiewicz", n, 2, kMaxStructured);
  const std::size_t d = n - 1;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t g = std::gcd(k, d);
    if (k == 0) {
      labels.push_back("0");
    } else if (k == d) {
      labels.push_back("1");
    } else if (2 * k == d) {
      labels.push_back("h");
    } else {
      labels.push_back(std::to_string(k / g) + "/" + std::to_string(d / g));
    }
  }
  RigTables t = square_tables("Ł" + std::to_string(n), std::move(labels));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      t.add[x][y] = std::max(x, y);
      t.mul[x][y] = x + y > d ? x + y - d : 0;
    }
  }
  t.zero = 0;
  t.one = d;
  return validate_rig(std::move(t));
}

RigRef boolean_lattice(std::size_t k) {
  check_range("boolean", k, 1, 5);
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string bits;
    for (std::size_t b = k; b-- > 0;) bits.push_back(((mask >> b) & 1) ? '1' : '0');
    labels.push_back(bits);
  }
  RigTables t = square_tables("2^" + std::to_string(k), std::move(labels));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      t.add[x][y] = x | y;
      t.mul[x][y] = x & y;
    }
  }
  t.zero = 0;
  t.one = n - 1;
  return validate_rig(std::move(t));
}

RigRef truncated_naturals(std::size_t n) {
  check_range("naturals", n, 1, kMaxStructured);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(std::to_string(k));
  RigTables t = square_tables("N" + std::to_string(n), std::move(labels));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      t.add[x][y] = std::min(x + y, n - 1);
      t.mul[x][y] = std::min(x * y, n - 1);
    }
  }
  t.zero = 0;
  t.one = std::min<Elem>(1, n - 1);
  return validate_rig(std::move(t));
}

MVRef lukasiewicz_mv(std::size_t n) { return mv_from_rig(lukasiewicz(n)); }

RigRef random_integral_rig(std::uint64_t seed, std::size_t size) {
  check_range("random size", size, 1, kMaxRandom);
  const std::string name = "R" + std::to_string(seed) + "_" + std::to_string(size);
  if (size == 1) {
    RigTables t = square_tables(name, {"0"});
    return validate_rig(std::move(t));
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + size);
  const std::size_t n = size;
  const Elem top = n - 1;
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < top; ++i) labels.push_back(middle_label(i));
  labels.push_back("1");

  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    // A random order with 0 at the bottom and 1 at the top, compatible with
    // index order, closed transitively.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (Elem x = 0; x < n; ++x) {
      leq[x][x] = true;
      leq[0][x] = true;
      leq[x][top] = true;
    }
    for (Elem x = 1; x < top; ++x) {
      for (Elem y = x + 1; y < top; ++y) leq[x][y] = draw(rng, 2) == 1;
    }
    for (Elem k = 0; k < n; ++k) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (leq[x][k] && leq[k][y]) leq[x][y] = true;
        }
      }
    }
    auto add = joins(leq);
    if (!add) continue;

    Table mul(n, std::vector<Elem>(n, 0));
    for (Elem x = 0; x < n; ++x) mul[top][x] = mul[x][top] = x;
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 1; x < top; ++x) {
      for (Elem y = x; y < top; ++y) cells.emplace_back(x, y);
    }
    std::size_t budget = 100000;
    if (!search_mul(cells, 0, leq, *add, mul, rng, budget)) continue;

    RigTables t = square_tables(name, labels);
    t.add = std::move(*add);
    t.mul = std::move(mul);
    t.zero = 0;
    t.one = top;
    return validate_rig(std::move(t));
  }
  throw NoModelFound("no integral rig found for seed " + std::to_string(seed) +
                     " and size " + std::to_string(size));
}

RigRef random_integral_rig(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_integral_rig(seed, 2 + draw(rng, 4));
}

RigRef by_name(const std::string& name) {
  static const std::regex kAtom(R"((T|2)|([CLBN])(\d{1,2})|R(\d{1,9})(?:_(\d))?)");
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = name.find('x', start)) != std::string::npos;
       start = pos + 1) {
    parts.push_back(name.substr(start, pos - start));
  }
  parts.push_back(name.substr(start));

  std::vector<RigRef> factors;
  for (const auto& part : parts) {
    std::smatch m;
    if (!std::regex_match(part, m, kAtom)) {
      throw ParseError(name, "unknown algebra name '" + part + "'");
    }
    if (m[1].matched) {
      factors.push_back(m[1] == "T" ? trivial_rig() : two());
    } else if (m[2].matched) {
      const std::size_t k = std::stoul(m[3]);
      const char kind = m[2].str()[0];
      factors.push_back(kind == 'C'   ? chain(k)
                        : kind == 'L' ? lukasiewicz(k)
                        : kind == 'B' ? boolean_lattice(k)
                                      : truncated_naturals(k));
    } else {
      const std::uint64_t seed = std::stoull(m[4]);
      factors.push_back(m[5].matched ? random_integral_rig(seed, std::stoul(m[5]))
                                     : random_integral_rig(seed));
    }
  }
  if (factors.size() == 1) return factors.front();
  return product_named(std::move(factors), name);
}

std::vector<CatalogEntry> rig_catalog() {
  std::vector<CatalogEntry> out;
  std::vector<std::string> names{"2"};
  for (int n = 3; n <= 6; ++n) names.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 6; ++n) names.push_back("L" + std::to_string(n));
  for (int k = 1; k <= 4; ++k) names.push_back("B" + std::to_string(k));
  const std::vector<std::string> base{"2", "C3", "L3"};
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) names.push_back(base[i] + "x" + base[j]);
  }
  names.push_back("N3");
  for (int seed = 1; seed <= 50; ++seed) names.push_back("R" + std::to_string(seed));
  for (const auto& name : names) out.push_back({name, by_name(name)});
  return out;
}

std::vector<CatalogEntry> integral_catalog() {
  std::vector<CatalogEntry> out;
  for (auto& entry : rig_catalog()) {
    if (is_integral(*entry.rig)) out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CatalogEntry> lattice_catalog() {
  auto order = [](const std::vector<std::pair<Elem, Elem>>& covers, std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (Elem x = 0; x < n; ++x) leq[x][x] = true;
    for (auto [x, y] : covers) leq[x][y] = true;
    for (Elem k = 0; k < n; ++k) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (leq[x][k] && leq[k][y]) leq[x][y] = true;
        }
      }
    }
    return leq;
  };
  std::vector<CatalogEntry> out;
  out.push_back({"T", trivial_rig()});
  out.push_back({"2", two()});
  out.push_back({"C3", chain(3)});
  out.push_back({"C4", chain(4)});
  out.push_back({"B2", boolean_lattice(2)});
  out.push_back({"C5", chain(5)});
  out.push_back({"B2+1", lattice_from_order("2^2⊕1", {"0", "a", "b", "c", "1"},
                                            order({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, 5))});
  out.push_back({"1+B2", lattice_from_order("1⊕2^2", {"0", "a", "b", "c", "1"},
                                            order({{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, 5))});
  out.push_back({"B3", boolean_lattice(3)});
  out.push_back({"B4", boolean_lattice(4)});
  return out;
}

std::vector<MVRef> mv_catalog() {
  std::vector<MVRef> out;
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(lukasiewicz_mv(n));
  for (std::size_t i = 2; i <= 4; ++i) {
    for (std::size_t j = i; j <= 4; ++j) {
      out.push_back(mv_from_rig(by_name("L" + std::to_string(i) + "xL" + std::to_string(j))));
    }
  }
  return out;
}

std::vector<Corruption> corrupted_tables() {
  std::vector<Corruption> out;
  auto tweak = [&](const std::string& description, const RigRef& base, auto edit) {
    RigTables t = base->tables();
    edit(t);
    out.push_back({description, std::move(t)});
  };
  tweak("Ł3 with h·h = 1", lukasiewicz(3), [](RigTables& t) { t.mul[1][1] = 2; });
  tweak("Ł3 with h·1 = 0 but 1·h = h", lukasiewicz(3), [](RigTables& t) { t.mul[1][2] = 0; });
  tweak("C3 with 0 + a = 1 but a + 0 = a", chain(3), [](RigTables& t) { t.add[0][1] = 2; });
  tweak("C4 with a + b = 1", chain(4), [](RigTables& t) { t.add[1][2] = t.add[2][1] = 3; });
  tweak("C3 with 0·a = a·0 = a", chain(3), [](RigTables& t) { t.mul[0][1] = t.mul[1][0] = 1; });
  tweak("2 with 1·1 = 0", two(), [](RigTables& t) { t.mul[1][1] = 0; });
  tweak("2 with 0 + 0 = 1", two(), [](RigTables& t) { t.add[0][0] = 1; });
  tweak("2^2 with 01·10 = 01 and 10·01 = 01", boolean_lattice(2),
        [](RigTables& t) { t.mul[1][2] = t.mul[2][1] = 1; });
  return out;
}

}  // namespace rigrep
