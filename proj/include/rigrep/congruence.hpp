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

#ifndef RIGREP_CONGRUENCE_HPP_
#define RIGREP_CONGRUENCE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigrep/rig.hpp"

namespace rigrep {

/// A congruence, stored as the least index of each element's class.
/// The constructor re-checks that the partition is compatible with + and ·.
class Congruence {
 public:
  Congruence(RigRef over, std::vector<Elem> class_of);

  /// Builds the partition of an equivalence relation given as a predicate.
  /// Throws AxiomViolation if `related` is not an equivalence or the
  /// result is not compatible.
  static Congruence from_relation(RigRef over,
                                  const std::function<bool(Elem, Elem)>& related);

  const RigRef& over() const { return over_; }
  const std::vector<Elem>& class_of() const { return class_of_; }
  Elem rep(Elem x) const { return class_of_[x]; }
  bool related(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }

  /// Representatives in increasing order.
  std::vector<Elem> representatives() const;
  std::size_t num_classes() const { return representatives().size(); }
  std::vector<std::vector<Elem>> classes() const;

  bool operator==(const Congruence& other) const {
    return class_of_ == other.class_of_;
  }
  /// Every pair related here is related in `other`.
  bool refines(const Congruence& other) const;

 private:
  RigRef over_;
  std::vector<Elem> class_of_;
};

Congruence identity_congruence(const RigRef& a);
Congruence total_congruence(const RigRef& a);

/// Smallest congruence containing `pairs`.
Congruence congruence_from_pairs(const RigRef& a,
                                 const std::vector<std::pair<Elem, Elem>>& pairs);

struct Quotient {
  RigRef rig;
  RigMorphism projection;
};

/// Carrier is the class representatives, in increasing order.
Quotient quotient(const RigRef& a, const Congruence& theta, std::string name = {});

Congruence join(const Congruence& first, const Congruence& second);
Congruence kernel(const RigMorphism& f);

/// Given a surjection q: A → Q and f: A → B, the unique g: Q → B with
/// g ∘ q = f, or nullopt when f does not factor.
std::optional<RigMorphism> factor_through(const RigMorphism& q,
                                          const RigMorphism& f);

}  // namespace rigrep

#endif  // RIGREP_CONGRUENCE_HPP_
