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

#include "rigrep/report.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "rigrep/catalog.hpp"
#include "rigrep/reticulation.hpp"

namespace rigrep {
namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Check = std::function<Outcome()>;

void run(VerifyReport& report, const std::string& suite, const Check& check) {
  try {
    Outcome o = check();
    report.lines.push_back(
        {o.ok ? CheckStatus::kPass : CheckStatus::kFail, suite, std::move(o.detail)});
  } catch (const AlgebraError& e) {
    report.lines.push_back({CheckStatus::kFail, suite, e.what()});
  }
}

void skip(VerifyReport& report, const std::string& suite, const std::string& why) {
  report.lines.push_back({CheckStatus::kSkip, suite, why});
}

std::string list(const FiniteRig& a, const std::vector<Elem>& xs) {
  if (xs.empty()) return "none";
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : " ") + a.label(x);
  return out;
}

std::string map_text(const RigMorphism& f) {
  std::string out;
  for (Elem x = 0; x < f.dom()->size(); ++x) {
    out += (x ? ", " : "") + f.dom()->label(x) + "↦" + f.cod()->label(f(x));
  }
  return out;
}

std::string count_text(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Closed submonoids generated by at most two elements, each once.
std::vector<std::vector<Elem>> small_submonoids(const FiniteRig& a) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> out;
  auto add = [&](std::vector<Elem> seeds) {
    auto m = submonoid_closure(a, seeds);
    if (seen.insert(m).second) out.push_back(std::move(m));
  };
  add({});
  for (Elem x = 0; x < a.size(); ++x) {
    add({x});
    for (Elem y = x + 1; y < a.size(); ++y) add({x, y});
  }
  return out;
}

void integral_suites(VerifyReport& report, const RigRef& a) {
  const std::size_t n = a->size();

  run(report, "canonical-order", [&] {
    const OrderRelation order = canonical_order(a);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (x != y && order(x, y) && order(y, x)) return Outcome{false, "not antisymmetric"};
        for (Elem z = 0; z < n; ++z) {
          if (order(x, y) && !(order(a->add(x, z), a->add(y, z)) &&
                               order(a->mul(x, z), a->mul(y, z)))) {
            return Outcome{false, "operations not monotone"};
          }
        }
      }
    }
    return Outcome{true, "partial order with 0 least and 1 greatest; + and · monotone"};
  });

  run(report, "invertibles", [&] {
    const auto inv = invertible_elements(*a);
    return Outcome{inv == std::vector<Elem>{a->one()}, "Inv(A) = {" + list(*a, inv) + "}"};
  });

  run(report, "localization-universal", [&] {
    const std::vector<RigRef> targets{two(), chain(3), lukasiewicz(3), trivial_rig()};
    const auto monoids = small_submonoids(*a);
    for (const auto& m : monoids) {
      for (const auto& b : targets) {
        if (!verify_localization_universal(a, m, b)) {
          return Outcome{false, "fails for F = {" + list(*a, m) + "} into " + b->name()};
        }
      }
    }
    return Outcome{true, count_text(monoids.size(), "submonoid") + " × " +
                             count_text(targets.size(), "target")};
  });

  run(report, "nilpotent-localization", [&] {
    for (Elem x = 0; x < n; ++x) {
      if (localize_at(a, x).rig->is_trivial() != is_nilpotent(*a, x)) {
        return Outcome{false, "A[" + a->label(x) + "⁻¹] triviality disagrees"};
      }
    }
    return Outcome{true, "A[x⁻¹] trivial exactly for nilpotent x"};
  });

  run(report, "stepwise-localization", [&] {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!stepwise_localization_agrees(a, x, y)) {
          return Outcome{false, "at " + a->label(x) + ", " + a->label(y)};
        }
      }
    }
    return Outcome{true, "A[x⁻¹][y⁻¹] ≅ A[(xy)⁻¹] for all pairs"};
  });

  run(report, "strong-idempotents", [&] {
    std::vector<Elem> strong;
    for (Elem x = 0; x < n; ++x) {
      if (!is_strongly_idempotent(*a, x)) continue;
      strong.push_back(x);
      const auto d = localize_strong_idem(a, x);
      if (!d.comparison.is_bijective()) {
        return Outcome{false, "↓" + a->label(x) + " is not A[" + a->label(x) + "⁻¹]"};
      }
    }
    return Outcome{true, "↓a ≅ A[a⁻¹] for " + list(*a, strong)};
  });

  run(report, "boolean-decomposition", [&] {
    const auto pairs = boolean_pairs(*a);
    for (const auto& [x, y] : pairs) {
      (void)y;
      if (!decompose_by_boolean(a, x).iso.is_bijective()) {
        return Outcome{false, "at " + a->label(x)};
      }
    }
    return Outcome{true, "A ≅ ↓a × ↓a′ for " + count_text(pairs.size(), "Boolean pair")};
  });

  run(report, "pushout-pullback", [&] {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!pushout_pullback_check(a, x, y).ok()) {
          return Outcome{false, "at " + a->label(x) + ", " + a->label(y)};
        }
      }
    }
    return Outcome{true, "all " + std::to_string(n * n) + " pairs"};
  });

  run(report, "power-inequality", [&] {
    if (auto c = power_inequality_counterexample(*a)) {
      return Outcome{false, "(" + a->label((*c)[0]) + " + " + a->label((*c)[1]) + ")^" +
                                std::to_string((*c)[2] * (*c)[3]) + " exceeds the bound"};
    }
    return Outcome{true, "(x + y)^{mn} ≤ x^m + y^n up to the power-cycle bound"};
  });

  run(report, "reticulation", [&] {
    const Reticulation r = reticulate(a);
    const auto lattices = lattice_catalog();
    for (const auto& d : lattices) {
      if (!verify_reticulation_universal(a, d.rig)) {
        return Outcome{false, "universal property fails into " + d.name};
      }
    }
    return Outcome{true, "L(A) has " + count_text(r.lattice->size(), "element") +
                             "; universal against " + count_text(lattices.size(), "lattice")};
  });

  run(report, "reticulation-localization", [&] {
    for (Elem x = 0; x < n; ++x) {
      if (!retic_localization_compat(a, x).ok()) return Outcome{false, "at " + a->label(x)};
    }
    return Outcome{true, "L(A[x⁻¹]) ≅ (L A)[(ηx)⁻¹] for all x"};
  });

  run(report, "spectrum", [&] {
    const Reticulation r = reticulate(a);
    const Birkhoff b = birkhoff(r.lattice);
    if (!spectrum_precomposition_bijective(a)) {
      return Outcome{false, "precomposition with η is not a bijection"};
    }
    return Outcome{true, count_text(b.points.size(), "point") +
                             "; Birkhoff and η-precomposition bijective"};
  });

  if (a->is_trivial()) {
    const std::string why = "trivial rig (0 = 1)";
    for (const char* s : {"representation", "support-map", "unit-iso", "subdirect"}) {
      skip(report, s, why);
    }
  } else {
    std::optional<Representation> built;
    try {
      built.emplace(build_representation(a));
    } catch (const AlgebraError& e) {
      report.lines.push_back({CheckStatus::kFail, "representation", e.what()});
    }
    if (!built) return;
    const Representation& rep = *built;
    run(report, "representation", [&] {
      if (!sheaf_condition_all_covers(rep.sheaf)) return Outcome{false, "not a sheaf"};
      if (!really_local_over_lattice(rep.sheaf)) {
        return Outcome{false, "not really local over L(A)"};
      }
      if (!fiber_choice_independent(a)) {
        return Outcome{false, "fibers depend on the chosen preimage"};
      }
      return Outcome{true, "sheaf over " + count_text(rep.sheaf.size(), "base element") +
                               "; fiber(⊥) trivial; irreducible fibers really local"};
    });
    run(report, "support-map", [&] {
      const auto s = verify_support_map(rep);
      return Outcome{s.ok(), s.ok() ? "χ: Ā → Λ is a local surjection with kernel the "
                                      "reticulation"
                                    : "χ fails a check"};
    });
    run(report, "unit-iso", [&] {
      const auto u = verify_unit_iso(rep);
      return Outcome{u.iso, "A → Γ over " +
                                count_text(rep.irreducibles.size(), "join-irreducible") +
                                (u.iso ? " is an iso" : " is not an iso")};
    });
    run(report, "subdirect", [&] {
      const auto s = subdirect_embedding(a);
      return Outcome{s.ok(), "A ↪ product of " + count_text(s.stalks.size(), "stalk")};
    });
  }

  run(report, "residuation", [&] {
    residuals(a);
    return Outcome{true, std::string("a ⊸ b exists for all pairs; ") +
                             (is_prelinear(a) ? "pre-linear" : "not pre-linear")};
  });
  if (is_prelinear(a)) {
    run(report, "prelinear-fibers", [&] {
      const auto p = prelinear_fibers_totally_ordered(a);
      return Outcome{p.ok(), p.ok() ? "stalks and fibers totally ordered; ⊸ descends"
                                    : "a fiber is not totally ordered"};
    });
  } else {
    skip(report, "prelinear-fibers", "not pre-linear");
  }
}

void mv_suites(VerifyReport& report, const MVRef& m, const RigRef& as_rig) {
  run(report, "mv-round-trip", [&] {
    const MVRig back = rig_from_mv(m);
    const bool ok = mv_from_rig(back.rig)->same_tables(*m) &&
                    rig_from_mv(mv_from_rig(as_rig)).rig->same_tables(*as_rig);
    return Outcome{ok && natural_order_matches(m),
                   "MV-algebra ↔ MV-rig translations are mutually inverse"};
  });
  run(report, "prime-ideals", [&] {
    const auto primes = prime_ideals(m);
    return Outcome{prime_point_bijection(m),
                   count_text(primes.size(), "prime ideal") + " ↔ spectrum points"};
  });
  run(report, "mv-fibers", [&] {
    return Outcome{dubuc_poveda_matches_stalks(m), "A/I agrees with the stalk at each prime"};
  });
}

}  // namespace

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(lines.begin(), lines.end(), [&](const CheckLine& l) { return l.status == s; }));
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "verify " << subject << '\n';
  for (const auto& l : lines) {
    const char* tag = l.status == CheckStatus::kPass   ? "[PASS]"
                      : l.status == CheckStatus::kFail ? "[FAIL]"
                                                       : "[SKIP]";
    os << tag << ' ' << l.suite << ": " << l.detail << '\n';
  }
  os << "summary: " << count(CheckStatus::kPass) << " passed, " << count(CheckStatus::kFail)
     << " failed, " << count(CheckStatus::kSkip) << " skipped\n";
  return os.str();
}

VerifyReport verify_suite(const RigRef& a) {
  VerifyReport report{a->name() + " (" + count_text(a->size(), "element") + ")", {}};
  report.lines.push_back({CheckStatus::kPass, "axioms", "all rig laws hold cell-wise"});
  if (!is_integral(*a)) {
    report.lines.push_back(
        {CheckStatus::kSkip, "integral", "1 + x = 1 fails; integral-only suites skipped"});
    return report;
  }
  report.lines.push_back({CheckStatus::kPass, "integral", "1 + x = 1 for all x"});
  integral_suites(report, a);
  if (is_wajsberg(a)) {
    mv_suites(report, mv_from_rig(a), a);
  } else {
    skip(report, "mv", "not an MV-rig");
  }
  return report;
}

VerifyReport verify_suite(const MVRef& m) {
  const RigRef r = rig_from_mv(m).rig;
  VerifyReport report = verify_suite(r);
  report.subject = m->name() + " (MV-algebra, " + count_text(m->size(), "element") + ")";
  return report;
}

bool prime_point_bijection(const MVRef& m) {
  const RigRef r = rig_from_mv(m).rig;
  const auto primes = prime_ideals(m);
  const auto points = spectrum(r);
  if (primes.size() != points.size()) return false;
  for (const auto& p : points) {
    if (!(point_of_ideal(m, ideal_of_point(m, p)).morphism() == p.morphism())) return false;
  }
  for (const auto& ideal : primes) {
    if (ideal_of_point(m, point_of_ideal(m, ideal)) != ideal) return false;
  }
  return true;
}

bool dubuc_poveda_matches_stalks(const MVRef& m) {
  const RigRef r = rig_from_mv(m).rig;
  for (const auto& ideal : prime_ideals(m)) {
    const DubucPovedaFiber f = dubuc_poveda_fiber(m, ideal);
    const Localization s = stalk(r, point_of_ideal(m, ideal));
    if (!f.kills_exactly_ideal || !f.stalk.rig->same_tables(*s.rig)) return false;
    if (f.stalk.unit.map() != s.unit.map()) return false;
  }
  return true;
}

std::string validate_report(const FiniteRig& a) {
  std::ostringstream os;
  os << "valid rig " << a.name() << " (" << count_text(a.size(), "element") << ")\n";
  os << "integral: " << (is_integral(a) ? "yes" : "no") << '\n';
  return os.str();
}

std::string info_report(const RigRef& a) {
  std::ostringstream os;
  os << describe(*a);
  const FiniteRig& r = *a;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "integral: " << yes(is_integral(r)) << '\n';
  os << "idempotent addition: " << yes(has_idempotent_addition(r)) << '\n';
  os << "distributive lattice: " << yes(is_distributive_lattice(r)) << '\n';
  if (has_idempotent_addition(r)) {
    os << "order covers:";
    const Poset p = order_poset(r);
    for (auto [x, y] : p.covers()) os << ' ' << p.label(x) << '<' << p.label(y);
    os << '\n';
    os << "totally ordered: " << yes(is_totally_ordered(r)) << '\n';
  }
  std::vector<Elem> idem, strong, nil;
  for (Elem x = 0; x < r.size(); ++x) {
    if (is_idempotent(r, x)) idem.push_back(x);
    if (is_integral(r) && is_strongly_idempotent(r, x)) strong.push_back(x);
    if (is_nilpotent(r, x)) nil.push_back(x);
  }
  os << "invertible: " << list(r, invertible_elements(r)) << '\n';
  os << "idempotent: " << list(r, idem) << '\n';
  if (is_integral(r)) os << "strongly idempotent: " << list(r, strong) << '\n';
  os << "nilpotent: " << list(r, nil) << '\n';
  os << "Boolean:";
  const auto pairs = boolean_pairs(r);
  if (pairs.empty()) os << " none";
  for (auto [x, y] : pairs) os << ' ' << r.label(x) << "/" << r.label(y);
  os << '\n';
  os << "really local: ";
  if (r.is_trivial()) {
    os << "no (trivial)\n";
  } else if (auto w = really_local_witness(r)) {
    os << "no (" << r.label(w->first) << " + " << r.label(w->second) << " = 1)\n";
  } else {
    os << "yes\n";
  }
  return os.str();
}

std::string reticulation_report(const Reticulation& r) {
  std::ostringstream os;
  const FiniteRig& a = *r.source;
  os << "reticulation of " << a.name() << ": " << count_text(r.lattice->size(), "element")
     << '\n';
  for (Elem l = 0; l < r.lattice->size(); ++l) {
    std::vector<Elem> cls;
    for (Elem x = 0; x < a.size(); ++x) {
      if (r.unit(x) == l) cls.push_back(x);
    }
    os << "  " << r.lattice->label(l) << " = η{" << list(a, cls) << "}\n";
  }
  os << "  covers:";
  const Poset p = order_poset(*r.lattice);
  for (auto [x, y] : p.covers()) os << ' ' << p.label(x) << '<' << p.label(y);
  os << '\n';
  os << describe(*r.lattice);
  return os.str();
}

std::string spectrum_report(const RigRef& a) {
  std::ostringstream os;
  const auto points = spectrum(a);
  os << "spectrum of " << a->name() << ": " << count_text(points.size(), "point") << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << "  p" << i << ": filter {" << list(*a, points[i].filter()) << "}\n";
  }
  if (is_integral(*a)) {
    const Reticulation r = reticulate(a);
    const Poset j = join_irreducibles(*r.lattice);
    os << "join-irreducibles of L(A):";
    for (std::size_t i = 0; i < j.size(); ++i) os << ' ' << j.label(i);
    os << '\n';
    os << "precomposition with η bijective: "
       << (spectrum_precomposition_bijective(a) ? "yes" : "no") << '\n';
  }
  return os.str();
}

std::string localization_report(const Localization& loc) {
  std::ostringstream os;
  const FiniteRig& a = *loc.source;
  os << "localization " << loc.rig->name() << " of " << a.name() << '\n';
  os << "inverted submonoid: {" << list(a, loc.monoid) << "}\n";
  os << describe(*loc.rig);
  os << "unit: " << map_text(loc.unit) << '\n';
  if (loc.rig->is_trivial()) {
    std::vector<Elem> nil;
    for (Elem x : loc.monoid) {
      if (is_nilpotent(a, x)) nil.push_back(x);
    }
    os << "note: the result is trivial because the inverted monoid contains the "
          "nilpotent element(s) "
       << list(a, nil) << " (a power reaches 0, and 0 = 1 once it is inverted)\n";
  }
  return os.str();
}

std::string representation_report(const Representation& r, bool& ok) {
  std::ostringstream os;
  const FiniteRig& a = *r.source;
  const FiniteRig& l = *r.retic.lattice;
  os << "representation of " << a.name() << " (" << count_text(a.size(), "element") << ")\n";
  os << "base L(A): " << count_text(l.size(), "element");
  if (are_isomorphic(r.retic.lattice, two())) os << " (≅ 2)";
  os << '\n';
  for (Elem d = 0; d < l.size(); ++d) {
    const FiniteRig& f = *r.sheaf.fiber(d);
    os << "  fiber at " << l.label(d);
    if (d == l.zero()) os << " (⊥)";
    if (d == l.one()) os << " (⊤)";
    os << ": " << f.name() << ", " << count_text(f.size(), "element");
    if (f.is_trivial()) {
      os << ", trivial";
    } else if (is_really_local(f)) {
      os << ", really local";
    }
    if (are_isomorphic(r.sheaf.fiber(d), r.source)) os << ", ≅ " << a.name();
    os << '\n';
  }
  os << "join-irreducibles:";
  for (std::size_t i = 0; i < r.irreducibles.size(); ++i) os << ' ' << r.irreducibles.label(i);
  os << '\n';
  auto verdict = [&](const std::string& what, bool good) {
    os << what << ": " << (good ? "verified" : "FAILED") << '\n';
    ok = ok && good;
  };
  verdict("sheaf condition on binary covers", sheaf_condition_all_covers(r.sheaf));
  verdict("really local over L(A)", really_local_over_lattice(r.sheaf));
  verdict("support map χ", verify_support_map(r).ok());
  verdict("unit iso A → Γ", verify_unit_iso(r).iso);
  verdict("subdirect embedding into stalks", subdirect_embedding(r.source).ok());
  return os.str();
}

std::string mv_report(const MVAlgebra& m) {
  std::ostringstream os;
  os << "MV-algebra " << m.name() << " (" << count_text(m.size(), "element") << ")\n";
  os << "  zero: " << m.label(m.zero()) << "  one: " << m.label(m.one()) << '\n';
  os << "  neg:";
  for (Elem x = 0; x < m.size(); ++x) os << ' ' << m.label(x) << "↦" << m.label(m.neg(x));
  os << "\n  oplus:\n";
  for (Elem x = 0; x < m.size(); ++x) {
    os << "   ";
    for (Elem y = 0; y < m.size(); ++y) os << ' ' << m.label(m.oplus(x, y));
    os << '\n';
  }
  return os.str();
}

std::string dot_poset(const Poset& p, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << dot_quote(title) << " {\n";
  os << "  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=" << dot_quote(p.label(i)) << "];\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_presheaf(const PresheafOfRigs& f, const std::string& title) {
  std::ostringstream os;
  const Poset& base = f.base();
  os << "digraph " << dot_quote(title) << " {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t d = 0; d < base.size(); ++d) {
    const FiniteRig& fiber = *f.fiber(d);
    os << "  n" << d << " [label="
       << dot_quote(base.label(d) + "\n" + fiber.name() + " (" + std::to_string(fiber.size()) +
                    ")")
       << "];\n";
  }
  // Restrictions run downward, from fiber(d) to fiber(c) for c ⋖ d.
  for (auto [c, d] : base.covers()) {
    os << "  n" << d << " -> n" << c << " [label=" << dot_quote(map_text(f.restriction(c, d)))
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rigrep
