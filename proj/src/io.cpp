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

#include "rigrep/io.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rigrep {
namespace {

using json = nlohmann::json;

const std::set<std::string> kKnownFields = {"name", "elements", "add", "mul", "zero",
                                            "one",  "oplus",    "neg"};

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

class Resolver {
 public:
  explicit Resolver(const std::vector<std::string>& labels) : n_(labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i) index_[labels[i]] = i;
  }

  Elem operator()(const json& cell, const std::string& where) const {
    if (cell.is_string()) {
      auto it = index_.find(cell.get<std::string>());
      if (it == index_.end()) {
        throw ParseError(where, "unknown element '" + cell.get<std::string>() + "'");
      }
      return it->second;
    }
    if (cell.is_number_unsigned() || (cell.is_number_integer() && cell.get<long long>() >= 0)) {
      const auto i = cell.get<unsigned long long>();
      if (i >= n_) throw ParseError(where, "index " + std::to_string(i) + " out of range");
      return static_cast<Elem>(i);
    }
    throw ParseError(where, "expected an element label or index");
  }

 private:
  std::size_t n_;
  std::map<std::string, Elem> index_;
};

Table read_table(const json& j, const std::string& field, const Resolver& resolve,
                 std::size_t n) {
  if (!j.is_array()) throw ParseError(field, "expected an array of rows");
  if (j.size() != n) {
    throw ParseError(field, "has " + std::to_string(j.size()) + " rows, expected " +
                                std::to_string(n));
  }
  Table t(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string where = field + "[" + std::to_string(r) + "]";
    const json& row = j[r];
    if (!row.is_array()) throw ParseError(where, "expected a row array");
    if (row.size() != n) {
      throw ParseError(where, "row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      t[r].push_back(resolve(row[c], where + "[" + std::to_string(c) + "]"));
    }
  }
  return t;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void emit_table(std::ostringstream& out, const std::string& field, const Table& t,
                const std::vector<std::string>& labels) {
  out << "  " << quoted(field) << ": [\n";
  for (std::size_t r = 0; r < t.size(); ++r) {
    out << "    [";
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      out << (c ? ", " : "") << quoted(labels[t[r][c]]);
    }
    out << "]" << (r + 1 < t.size() ? "," : "") << "\n";
  }
  out << "  ]";
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)), "malformed JSON");
  }
  if (!j.is_object()) throw ParseError("line 1", "document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownFields.count(key)) throw ParseError(key, "unknown field");
  }

  AlgebraDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name", "expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("elements")) throw ParseError("elements", "missing field");
  const json& elements = j["elements"];
  if (!elements.is_array() || elements.empty()) {
    throw ParseError("elements", "expected a non-empty array of labels");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) {
      throw ParseError("elements[" + std::to_string(i) + "]", "labels must be strings");
    }
    doc.elements.push_back(elements[i].get<std::string>());
  }
  if (std::set<std::string>(doc.elements.begin(), doc.elements.end()).size() !=
      doc.elements.size()) {
    throw ParseError("elements", "labels are not distinct");
  }

  const std::size_t n = doc.elements.size();
  const Resolver resolve(doc.elements);
  auto element_field = [&](const std::string& field) {
    return doc.elements[resolve(j[field], field)];
  };

  if (!j.contains("zero")) throw ParseError("zero", "missing field");
  doc.zero = element_field("zero");
  if (j.contains("one")) doc.one = element_field("one");
  if (j.contains("add")) doc.add = read_table(j["add"], "add", resolve, n);
  if (j.contains("mul")) doc.mul = read_table(j["mul"], "mul", resolve, n);
  if (j.contains("oplus")) doc.oplus = read_table(j["oplus"], "oplus", resolve, n);
  if (j.contains("neg")) {
    const json& neg = j["neg"];
    if (!neg.is_array() || neg.size() != n) {
      throw ParseError("neg", "expected one entry per element");
    }
    std::vector<Elem> values;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(resolve(neg[i], "neg[" + std::to_string(i) + "]"));
    }
    doc.neg = std::move(values);
  }

  const bool rig_fields = doc.add || doc.mul || doc.one;
  const bool mv_fields = doc.oplus || doc.neg;
  if (mv_fields) {
    if (!doc.oplus) throw ParseError("oplus", "missing field");
    if (!doc.neg) throw ParseError("neg", "missing field");
    if (rig_fields) {
      throw ParseError(doc.add ? "add" : doc.mul ? "mul" : "one",
                       "MV documents carry oplus/neg instead");
    }
  } else {
    if (!doc.add) throw ParseError("add", "missing field");
    if (!doc.mul) throw ParseError("mul", "missing field");
    if (!doc.one) throw ParseError("one", "missing field");
  }
  return doc;
}

std::string emit_document(const AlgebraDocument& doc) {
  const auto& labels = doc.elements;
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << quoted(doc.name) << ",\n";
  out << "  \"elements\": [";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << quoted(labels[i]);
  out << "],\n";
  if (doc.add) {
    emit_table(out, "add", *doc.add, labels);
    out << ",\n";
  }
  if (doc.mul) {
    emit_table(out, "mul", *doc.mul, labels);
    out << ",\n";
  }
  if (doc.oplus) {
    emit_table(out, "oplus", *doc.oplus, labels);
    out << ",\n";
  }
  if (doc.neg) {
    out << "  \"neg\": [";
    for (std::size_t i = 0; i < doc.neg->size(); ++i) {
      out << (i ? ", " : "") << quoted(labels[(*doc.neg)[i]]);
    }
    out << "],\n";
  }
  out << "  \"zero\": " << quoted(doc.zero);
  if (doc.one) out << ",\n  \"one\": " << quoted(*doc.one);
  out << "\n}\n";
  return out.str();
}

AlgebraDocument document_of(const FiniteRig& a) {
  AlgebraDocument doc;
  doc.name = a.name();
  doc.elements = a.labels();
  doc.add = a.add_table();
  doc.mul = a.mul_table();
  doc.zero = a.label(a.zero());
  doc.one = a.label(a.one());
  return doc;
}

AlgebraDocument document_of(const MVAlgebra& m) {
  AlgebraDocument doc;
  doc.name = m.name();
  doc.elements = m.labels();
  doc.oplus = m.oplus_table();
  doc.neg = m.neg_table();
  doc.zero = m.label(m.zero());
  return doc;
}

namespace {

Elem index_of(const AlgebraDocument& doc, const std::string& label) {
  return static_cast<Elem>(
      std::find(doc.elements.begin(), doc.elements.end(), label) - doc.elements.begin());
}

}  // namespace

RigRef rig_of(const AlgebraDocument& doc) {
  if (doc.is_mv() || !doc.add || !doc.mul || !doc.one) {
    throw ParseError("add", "document does not describe a rig");
  }
  RigTables t;
  t.name = doc.name;
  t.labels = doc.elements;
  t.add = *doc.add;
  t.mul = *doc.mul;
  t.zero = index_of(doc, doc.zero);
  t.one = index_of(doc, *doc.one);
  return validate_rig(std::move(t));
}

MVRef mv_of(const AlgebraDocument& doc) {
  if (!doc.is_mv() || !doc.neg) throw ParseError("oplus", "document does not describe an MV-algebra");
  return std::make_shared<const MVAlgebra>(doc.name, doc.elements, *doc.oplus, *doc.neg,
                                           index_of(doc, doc.zero));
}

RigRef as_rig(const AlgebraDocument& doc) {
  return doc.is_mv() ? rig_from_mv(mv_of(doc)).rig : rig_of(doc);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace rigrep
