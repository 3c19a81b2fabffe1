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

// rigrep: command-line front end for the finite integral-rig library.
//
// Every command reads one algebra document from a file argument or from
// standard input ("-" or no argument) and writes text to standard output.
// Exit status: 0 on success, 1 when a check fails, 2 on bad input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigrep/catalog.hpp"
#include "rigrep/io.hpp"
#include "rigrep/localization.hpp"
#include "rigrep/report.hpp"
#include "rigrep/reticulation.hpp"
#include "rigrep/sheaf.hpp"

namespace {

using namespace rigrep;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

// Raised for problems with the command line itself, reported like input errors.
struct UsageError : AlgebraError {
  using AlgebraError::AlgebraError;
};

AlgebraDocument load(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    text = read_all(in);
  }
  return parse_document(text);
}

Elem element(const FiniteRig& a, const std::string& label) {
  if (auto x = a.find(label)) return *x;
  throw UsageError("no element '" + label + "' in " + a.name());
}

// Splits on commas outside parentheses, so product labels such as "(1,0)"
// stay whole.
std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::string part;
    int depth = 0;
    for (char c : item) {
      if (c == ',' && depth == 0) {
        if (!part.empty()) out.push_back(part);
        part.clear();
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')') --depth;
      part += c;
    }
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

// Errors a caller can fix by changing the input, as opposed to failures of
// a theorem-backed check.
bool is_input_error(const AlgebraError& e) {
  return dynamic_cast<const NoSuchFactorization*>(&e) == nullptr &&
         dynamic_cast<const NoLargestWitness*>(&e) == nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite integral rigs: localization, reticulation and sheaf representation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string input;
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Algebra document (default: stdin)");
  };

  auto* validate = app.add_subcommand("validate", "Check the rig or MV axioms");
  add_input(validate);
  auto* info = app.add_subcommand("info", "Order, element classes and really-local verdict");
  add_input(info);
  auto* reticulate_cmd = app.add_subcommand("reticulate", "The reticulation L(A)");
  add_input(reticulate_cmd);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Points A → 2");
  add_input(spectrum_cmd);

  auto* localize_cmd = app.add_subcommand("localize", "Invert an element or a set of elements");
  add_input(localize_cmd);
  std::string at;
  std::vector<std::string> monoid;
  auto* at_opt = localize_cmd->add_option("--at", at, "Element to invert");
  auto* monoid_opt =
      localize_cmd->add_option("--monoid", monoid, "Elements to invert (comma separated)");
  at_opt->excludes(monoid_opt);

  auto* represent = app.add_subcommand("represent", "Representing sheaf over L(A)");
  add_input(represent);
  auto* verify = app.add_subcommand("verify", "Run the whole invariant suite");
  add_input(verify);

  auto* mv = app.add_subcommand("mv", "Translate between MV-algebras and MV-rigs");
  mv->require_subcommand(1);
  auto* to_rig = mv->add_subcommand("to-rig", "MV-algebra document → rig document");
  add_input(to_rig);
  auto* from_rig = mv->add_subcommand("from-rig", "rig document → MV-algebra document");
  add_input(from_rig);

  auto* gen = app.add_subcommand(
      "gen",
      "Generate a document: chain N | lukasiewicz N | boolean K | naturals N | "
      "product NAME... | random | name NAME");
  std::vector<std::string> gen_args;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  bool as_mv = false;
  gen->add_option("generator", gen_args, "Generator and its parameters")->required();
  gen->add_option("--seed", seed, "Seed for random");
  gen->add_option("--size", size, "Carrier size for random (1-5)");
  gen->add_flag("--mv", as_mv, "Emit the MV-algebra form");

  auto* dot = app.add_subcommand("dot", "Graphviz output");
  add_input(dot);
  bool dot_poset_flag = false;
  bool dot_presheaf_flag = false;
  auto* poset_opt = dot->add_flag("--poset", dot_poset_flag, "Hasse diagram of the order");
  auto* presheaf_opt =
      dot->add_flag("--presheaf", dot_presheaf_flag, "Representing presheaf over L(A)");
  poset_opt->excludes(presheaf_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  std::ostream& out = std::cout;
  try {
    if (*validate) {
      const AlgebraDocument doc = load(input);
      try {
        if (doc.is_mv()) {
          const MVRef m = mv_of(doc);
          out << "valid MV-algebra " << m->name() << " (" << m->size() << " elements)\n";
        } else {
          out << validate_report(*rig_of(doc));
        }
      } catch (const AxiomViolation& e) {
        out << "invalid: " << e.what() << '\n';
        return kCheckFailed;
      }
      return kOk;
    }
    if (*info) {
      out << info_report(as_rig(load(input)));
      return kOk;
    }
    if (*reticulate_cmd) {
      out << reticulation_report(reticulate(as_rig(load(input))));
      return kOk;
    }
    if (*spectrum_cmd) {
      out << spectrum_report(as_rig(load(input)));
      return kOk;
    }
    if (*localize_cmd) {
      if (at.empty() && monoid.empty()) throw UsageError("localize needs --at or --monoid");
      const RigRef a = as_rig(load(input));
      std::vector<Elem> seeds;
      if (!at.empty()) {
        seeds.push_back(element(*a, at));
      } else {
        for (const auto& label : split_labels(monoid)) seeds.push_back(element(*a, label));
      }
      out << localization_report(localize(a, seeds));
      return kOk;
    }
    if (*represent) {
      bool ok = true;
      out << representation_report(build_representation(as_rig(load(input))), ok);
      return ok ? kOk : kCheckFailed;
    }
    if (*verify) {
      const AlgebraDocument doc = load(input);
      const VerifyReport report = doc.is_mv() ? verify_suite(mv_of(doc)) : verify_suite(rig_of(doc));
      out << report.text();
      return report.failed() ? kCheckFailed : kOk;
    }
    if (*to_rig) {
      out << emit_document(document_of(*rig_from_mv(mv_of(load(input))).rig));
      return kOk;
    }
    if (*from_rig) {
      out << emit_document(document_of(*mv_from_rig(rig_of(load(input)))));
      return kOk;
    }
    if (*gen) {
      const std::string& kind = gen_args.front();
      std::vector<std::string> params(gen_args.begin() + 1, gen_args.end());
      auto number = [&](std::size_t i) -> std::size_t {
        if (i >= params.size()) throw UsageError("gen " + kind + ": missing parameter");
        try {
          return std::stoul(params[i]);
        } catch (const std::exception&) {
          throw UsageError("gen " + kind + ": '" + params[i] + "' is not a number");
        }
      };
      RigRef r;
      if (kind == "chain") {
        r = chain(number(0));
      } else if (kind == "lukasiewicz") {
        r = lukasiewicz(number(0));
      } else if (kind == "boolean") {
        r = boolean_lattice(number(0));
      } else if (kind == "naturals") {
        r = truncated_naturals(number(0));
      } else if (kind == "random") {
        r = size ? random_integral_rig(seed, size) : random_integral_rig(seed);
      } else if (kind == "product") {
        if (params.size() < 2) throw UsageError("gen product needs at least two factors");
        std::string name;
        for (const auto& p : params) name += (name.empty() ? "" : "x") + p;
        r = by_name(name);
      } else if (kind == "name") {
        if (params.size() != 1) throw UsageError("gen name takes one catalog name");
        r = by_name(params[0]);
      } else {
        throw UsageError("unknown generator '" + kind + "'");
      }
      out << (as_mv ? emit_document(document_of(*mv_from_rig(r)))
                    : emit_document(document_of(*r)));
      return kOk;
    }
    if (*dot) {
      if (!dot_poset_flag && !dot_presheaf_flag) {
        throw UsageError("dot needs --poset or --presheaf");
      }
      const RigRef a = as_rig(load(input));
      if (dot_poset_flag) {
        if (!has_idempotent_addition(*a)) {
          throw UsageError(a->name() + " has no canonical partial order");
        }
        out << dot_poset(order_poset(*a), a->name());
      } else {
        const Representation r = build_representation(a);
        out << dot_presheaf(r.sheaf, a->name());
      }
      return kOk;
    }
  } catch (const AlgebraError& e) {
    std::cerr << "rigrep: " << e.what() << '\n';
    return is_input_error(e) ? kBadInput : kCheckFailed;
  }
  return kOk;
}
