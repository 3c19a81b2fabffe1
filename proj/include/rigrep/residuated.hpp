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

// Residuated integral rigs, MV-rigs and the translation to and from
// MV-algebras (A, ⊕, ¬, 0).

#ifndef RIGREP_RESIDUATED_HPP_
#define RIGREP_RESIDUATED_HPP_

#include <memory>
#include <string>
#include <vector>

#include "rigrep/localization.hpp"
#include "rigrep/rig.hpp"
#include "rigrep/spectrum.hpp"

namespace rigrep {

/// a ⊸ b for every pair; the adjunction a·c ≤ b ⟺ c ≤ a ⊸ b is checked on
/// construction.
struct ResidualTable {
  RigRef over;
  Table imp;

  Elem operator()(Elem a, Elem b) const { return imp[a][b]; }
};

/// Throws NotIntegral or NotIdempotentAddition.
ResidualTable residuals(const RigRef& a);

bool is_prelinear(const RigRef& a);
bool is_wajsberg(const RigRef& a);

/// An MV-algebra; the constructor checks the three MV equations and that
/// (⊕, 0) is a commutative monoid.
class MVAlgebra {
 public:
  MVAlgebra(std::string name, std::vector<std::string> labels, Table oplus,
            std::vector<Elem> neg, Elem zero);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  Elem oplus(Elem x, Elem y) const { return oplus_[x][y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  Elem zero() const { return zero_; }
  Elem one() const { return neg_[zero_]; }
  const Table& oplus_table() const { return oplus_; }
  const std::vector<Elem>& neg_table() const { return neg_; }

  bool same_tables(const MVAlgebra& other) const {
    return oplus_ == other.oplus_ && neg_ == other.neg_ && zero_ == other.zero_ &&
           labels_ == other.labels_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Table oplus_;
  std::vector<Elem> neg_;
  Elem zero_;
};

using MVRef = std::shared_ptr<const MVAlgebra>;

/// ¬x = x ⊸ 0, x ⊕ y = ¬(¬x · ¬y). Throws NotMVRig.
MVRef mv_from_rig(const RigRef& r);

struct MVRig {
  RigRef rig;
  ResidualTable residual;
};

/// x + y = ¬(¬x ⊕ y) ⊕ y, x·y = ¬(¬x ⊕ ¬y), 1 = ¬0, x ⊸ y = ¬x ⊕ y.
MVRig rig_from_mv(const MVRef& m);

/// x ≤ y iff x · ¬y = 0, compared against the canonical rig order.
bool natural_order_matches(const MVRef& m);

using Ideal = std::vector<Elem>;

/// All ideals (downward-closed ⊕-submonoids), sorted by size then content.
std::vector<Ideal> ideals(const MVRef& m);
bool is_ideal(const MVRef& m, const Ideal& candidate);
bool is_prime_ideal(const MVRef& m, const Ideal& candidate);
std::vector<Ideal> prime_ideals(const MVRef& m);

/// {¬x | p x = 1}; throws NotPrime if the result is not prime.
Ideal ideal_of_point(const MVRef& m, const SpectrumPoint& p);
/// p x = 1 iff ¬x ∈ I, as a point of rig_from_mv(m). Throws NotPrime.
SpectrumPoint point_of_ideal(const MVRef& m, const Ideal& ideal);

struct DubucPovedaFiber {
  Localization stalk;
  /// Every member of the ideal maps to 0 and nothing else does.
  bool kills_exactly_ideal = false;
};

DubucPovedaFiber dubuc_poveda_fiber(const MVRef& m, const Ideal& ideal);

struct PrelinearFiberReport {
  bool stalks_totally_ordered = false;
  bool fibers_totally_ordered = false;
  /// In every stalk and representation fiber the residual of images equals
  /// the image of the residual.
  bool residuals_descend = false;

  bool ok() const {
    return stalks_totally_ordered && fibers_totally_ordered && residuals_descend;
  }
};

/// The localization's residuals are the images of the source's.
bool residuals_descend(const Localization& loc);

/// Throws NotPrelinear (and whatever residuals throws).
PrelinearFiberReport prelinear_fibers_totally_ordered(const RigRef& a);

}  // namespace rigrep

#endif  // RIGREP_RESIDUATED_HPP_
