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

// The JSON algebra document: a named carrier of string labels plus
// operation tables, written either with labels or with indices.
//
//   {
//     "name": "Ł3",
//     "elements": ["0", "h", "1"],
//     "add": [["0", "h", "1"], ["h", "h", "1"], ["1", "1", "1"]],
//     "mul": [[0, 0, 0], [0, 0, 1], [0, 1, 2]],
//     "zero": "0",
//     "one": "1"
//   }
//
// MV-algebras use "oplus" and "neg" (a label per element) instead of
// "add", "mul" and "one".

#ifndef RIGREP_IO_HPP_
#define RIGREP_IO_HPP_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "rigrep/residuated.hpp"
#include "rigrep/rig.hpp"

namespace rigrep {

/// Parsed but not yet validated. Table entries are canonical indices.
struct AlgebraDocument {
  std::string name;
  std::vector<std::string> elements;
  std::optional<Table> add;
  std::optional<Table> mul;
  std::string zero;
  std::optional<std::string> one;
  std::optional<Table> oplus;
  std::optional<std::vector<Elem>> neg;

  bool is_mv() const { return oplus.has_value(); }
  bool operator==(const AlgebraDocument&) const = default;
};

/// Throws ParseError naming the line (JSON syntax) or field (shape).
AlgebraDocument parse_document(const std::string& text);
/// One table row per line, labels throughout; emit(parse(emit(d))) == emit(d).
std::string emit_document(const AlgebraDocument& doc);

AlgebraDocument document_of(const FiniteRig& a);
AlgebraDocument document_of(const MVAlgebra& m);

/// Throws ParseError if the document lacks the rig tables, and whatever
/// validation throws.
RigRef rig_of(const AlgebraDocument& doc);
/// Throws ParseError if the document lacks the MV tables.
MVRef mv_of(const AlgebraDocument& doc);
/// The rig a document describes, going through rig_from_mv for MV input.
RigRef as_rig(const AlgebraDocument& doc);

std::string read_all(std::istream& in);

}  // namespace rigrep

#endif  // RIGREP_IO_HPP_
