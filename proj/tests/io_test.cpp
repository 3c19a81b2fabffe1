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

// Tests for the algebra document format and the catalog generators.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "oracles.hpp"
#include "rigrep/catalog.hpp"
#include "rigrep/io.hpp"
#include "rigrep/report.hpp"

using namespace rigrep;

namespace {

const char* const kTwo = R"({
  "name": "2",
  "elements": ["0", "1"],
  "add": [[0, 1], [1, 1]],
  "mul": [[0, 0], [0, 1]],
  "zero": "0",
  "one": "1"
})";

const char* const kL3 = R"({
  "name": "L3",
  "elements": ["0", "h", "1"],
  "add": [["0", "h", "1"], ["h", "h", "1"], ["1", "1", "1"]],
  "mul": [["0", "0", "0"], ["0", "0", "h"], ["0", "h", "1"]],
  "zero": "0",
  "one": "1"
})";

std::string parse_error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal two-element document") {
  const AlgebraDocument doc = parse_document(kTwo);
  CHECK_FALSE(doc.is_mv());
  const RigRef r = rig_of(doc);
  CHECK(r->same_tables(*two()));
}

TEST_CASE("Ł3 document with labels in the tables") {
  const RigRef r = rig_of(parse_document(kL3));
  CHECK(r->name() == "L3");
  CHECK(oracle::all_laws_hold(r->tables()));
  CHECK(r->same_tables(*lukasiewicz(3)));
  CHECK(validate_report(*r).find("valid") != std::string::npos);
}

TEST_CASE("parse errors name the problem") {
  std::string ragged = kTwo;
  ragged.replace(ragged.find("[[0, 1], [1, 1]]"), 16, "[[0, 1], [1]]");
  CHECK(parse_error_of(ragged).find("add[1]") != std::string::npos);

  CHECK(parse_error_of("{\n  \"name\": \"x\",\n  oops\n}").find("line 3") != std::string::npos);

  std::string unknown = kTwo;
  unknown.replace(unknown.find("\"name\""), 6, "\"nom\"");
  CHECK(parse_error_of(unknown).find("nom") != std::string::npos);

  std::string bad_label = kL3;
  bad_label.replace(bad_label.find("\"zero\": \"0\""), 11, "\"zero\": \"z\"");
  CHECK(parse_error_of(bad_label).find("zero") != std::string::npos);

  std::string out_of_range = kTwo;
  out_of_range.replace(out_of_range.find("[[0, 0], [0, 1]]"), 16, "[[0, 0], [0, 9]]");
  CHECK_FALSE(parse_error_of(out_of_range).empty());

  std::string missing = kTwo;
  missing.replace(missing.find(",\n  \"one\": \"1\""), 14, "");
  CHECK(parse_error_of(missing).find("one") != std::string::npos);
}

TEST_CASE("emit and parse round-trip on the catalogs") {
  for (const auto& e : rig_catalog()) {
    const std::string text = emit_document(document_of(*e.rig));
    const AlgebraDocument back = parse_document(text);
    CHECK(back == document_of(*e.rig));
    CHECK(emit_document(back) == text);
    CHECK(rig_of(back)->same_tables(*e.rig));
  }
  for (const auto& m : mv_catalog()) {
    const std::string text = emit_document(document_of(*m));
    const AlgebraDocument back = parse_document(text);
    CHECK(back.is_mv());
    CHECK(mv_of(back)->same_tables(*m));
    CHECK(as_rig(back)->same_tables(*rig_from_mv(m).rig));
    CHECK_THROWS_AS(rig_of(back), ParseError);
  }
}

TEST_CASE("invalid tables surface as AxiomViolation") {
  for (const auto& c : corrupted_tables()) {
    AlgebraDocument doc;
    doc.name = c.tables.name;
    doc.elements = c.tables.labels;
    doc.add = c.tables.add;
    doc.mul = c.tables.mul;
    doc.zero = c.tables.labels[c.tables.zero];
    doc.one = c.tables.labels[c.tables.one];
    CHECK_THROWS_AS(rig_of(parse_document(emit_document(doc))), AxiomViolation);
  }
}

TEST_CASE("generators") {
  const RigRef c3 = chain(3);
  CHECK(c3->size() == 3);
  CHECK(c3->labels() == std::vector<std::string>{"0", "a", "1"});
  CHECK(oracle::is_distributive_lattice(*c3));
  CHECK(oracle::totally_ordered(*c3));

  const RigRef l3 = lukasiewicz(3);
  for (Elem x = 0; x < 3; ++x) {
    for (Elem y = 0; y < 3; ++y) {
      CHECK(l3->add(x, y) == std::max(x, y));
      CHECK(l3->mul(x, y) == (x + y >= 2 ? x + y - 2 : 0));
    }
  }
  CHECK(lukasiewicz(5)->labels() == std::vector<std::string>{"0", "1/4", "h", "3/4", "1"});

  const RigRef p = by_name("C3xL3");
  CHECK(p->size() == 9);
  CHECK(oracle::integral(*p));
  CHECK(oracle::all_laws_hold(p->tables()));

  CHECK(boolean_lattice(3)->size() == 8);
  CHECK(truncated_naturals(3)->add(1, 1) == 2);
  CHECK_THROWS_AS(by_name("nonsense"), ParseError);
}

TEST_CASE("random integral rigs are deterministic and valid") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (std::size_t size = 1; size <= 5; ++size) {
      const RigRef a = random_integral_rig(seed, size);
      CHECK(a->size() == size);
      CHECK(oracle::all_laws_hold(a->tables()));
      CHECK(oracle::integral(*a));
      CHECK(a->same_tables(*random_integral_rig(seed, size)));
    }
  }
}

TEST_CASE("catalog contents") {
  const auto rigs = rig_catalog();
  std::size_t random = 0;
  for (const auto& e : rigs) {
    CHECK(oracle::all_laws_hold(e.rig->tables()));
    if (e.name.rfind("R", 0) == 0) {
      ++random;
      CHECK(e.rig->size() <= 5);
    }
  }
  CHECK(random == 50);
  for (const auto& e : integral_catalog()) CHECK(oracle::integral(*e.rig));
  for (const auto& e : lattice_catalog()) CHECK(oracle::is_distributive_lattice(*e.rig));
  CHECK(mv_catalog().size() == 11);
}
