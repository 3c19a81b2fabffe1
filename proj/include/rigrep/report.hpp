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

// Human-readable reports, the invariant suite behind `rigrep verify`, and
// Graphviz output. Everything here is deterministic: identical input gives
// byte-identical text.

#ifndef RIGREP_REPORT_HPP_
#define RIGREP_REPORT_HPP_

#include <string>
#include <vector>

#include "rigrep/localization.hpp"
#include "rigrep/residuated.hpp"
#include "rigrep/rig.hpp"
#include "rigrep/sheaf.hpp"
#include "rigrep/spectrum.hpp"

namespace rigrep {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckLine {
  CheckStatus status;
  std::string suite;
  std::string detail;
};

struct VerifyReport {
  std::string subject;
  std::vector<CheckLine> lines;

  std::size_t count(CheckStatus s) const;
  bool failed() const { return count(CheckStatus::kFail) > 0; }
  /// One "[PASS] suite: detail" line per check plus a summary line.
  std::string text() const;
};

/// Runs every applicable invariant check. Suites needing integrality,
/// non-triviality, pre-linearity or the MV equations are skipped (not
/// failed) when the algebra lacks them.
VerifyReport verify_suite(const RigRef& a);
/// The rig suites on rig_from_mv(m), then the MV checks.
VerifyReport verify_suite(const MVRef& m);

/// Prime ideals and spectrum points correspond under ideal_of_point and
/// point_of_ideal, in both directions.
bool prime_point_bijection(const MVRef& m);
/// Each prime ideal's Dubuc-Poveda quotient has the same tables as the
/// stalk at the corresponding point, and kills exactly the ideal.
bool dubuc_poveda_matches_stalks(const MVRef& m);

std::string validate_report(const FiniteRig& a);
std::string info_report(const RigRef& a);
std::string reticulation_report(const Reticulation& r);
std::string spectrum_report(const RigRef& a);
std::string localization_report(const Localization& loc);
/// Also reports on the support map, unit iso and subdirect embedding;
/// `ok` is cleared if any of them fails.
std::string representation_report(const Representation& r, bool& ok);
std::string mv_report(const MVAlgebra& m);

/// Hasse diagram of the canonical order.
std::string dot_poset(const Poset& p, const std::string& title);
/// One node per base element with its fiber; edges are restriction maps
/// along covers.
std::string dot_presheaf(const PresheafOfRigs& f, const std::string& title);

}  // namespace rigrep

#endif  // RIGREP_REPORT_HPP_
