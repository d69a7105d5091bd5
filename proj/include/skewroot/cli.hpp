// Copyright 2026 The skewroot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewroot/skewroot.hpp"

namespace skw::cli {

// One job, read from a sectioned plain-text config:
//
//   [group]
//   orders = 2 2
//   [bicharacter]
//   n = 2
//   row = 1            # strict lower triangle, k-1 rows, row i has i entries
//   [rootsystem]
//   kind = lie
//   root = 0 1
//   root = 1 0
//   [run]
//   analyze = killing centroid
//   out = /tmp/export.txt
//
// A job names its system exactly one way: an explicit [rootsystem] with
// roots, a family (family = nonsingular:2:lie in [run]), or an enumeration
// request (enumerate = lie in [run]).
struct JobConfig {
  std::vector<long> orders;
  long n = 1;
  std::vector<std::vector<long>> lower;  // strict lower-triangle rows
  std::optional<Kind> kind;
  std::vector<std::vector<long>> roots;
  bool have_roots = false;
  std::optional<std::string> family;
  bool enumerate = false;
  std::vector<std::string> analyses;
  std::optional<std::string> out;
  long long budget = kDefaultBudget;
  int jobs = 0;
};

// Throws ParseError on malformed input or when the exactly-one-source
// invariant is violated.
JobConfig parse_config(std::istream& in);
JobConfig load_config(const std::string& path);

struct CmdResult {
  int exit_code = 0;  // 0 ok, 1 negative finding, 2 input, 3 budget
  std::string report;
};

// Axiom check; exit 0 valid, 1 invalid with witnesses in the report.
CmdResult cmd_validate(const JobConfig& c);

// Builds the algebra and runs the requested analyses (all applicable ones
// when none are named). Prints exact scalars only; writes the
// structure-constant export when an output path is set. Exit 1 when a
// checked property fails (degenerate form, failed identity, dictionary
// mismatch), never for measurements like centroid dimension.
CmdResult cmd_analyze(const JobConfig& c);

// Exhaustive census of the systems for (beta, kind) up to
// beta-automorphisms, annotated with the family fixtures they realize.
CmdResult cmd_enumerate(const JobConfig& c);

// Summary of a family instance (both sides unless a side is named).
CmdResult cmd_family(const JobConfig& c);

// Structure-constant export alone, to the output path or the report.
CmdResult cmd_export(const JobConfig& c);

// Full front end: subcommands validate/analyze/enumerate/family/export with
// --config/--family/--out/--budget/--jobs. Returns the process exit code;
// module errors map to 2 (input) and 3 (budget).
int run_cli(int argc, const char* const* argv);

}  // namespace skw::cli
