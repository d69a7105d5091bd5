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

#include <string>
#include <vector>

#include "skewroot/symplectic.hpp"

namespace skw {

// The two gradable structures: antisymmetric brackets (Lie) and symmetric
// circle products (Jordan). The skew condition compares beta against
// epsilon = +1 for Lie, -1 for Jordan.
enum class Kind { Lie, Jordan };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

// True when the pair (a, b) "interacts": beta(a,b) != 1 (Lie) resp.
// beta(a,b) != -1 (Jordan). Symmetric in a, b.
bool kind_edge(const Bicharacter& beta, Kind kind, const GroupElem& a, const GroupElem& b);

// One axiom failure, with the offending elements.
struct ValidationIssue {
  std::string axiom;  // "SRSL0".."SRSL2", "SRSL-rad", "SRSJ0".."SRSJ2"
  std::vector<GroupElem> witness;
  std::string detail;
  std::string to_string() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Checks the axioms:
//   *0: R generates G (and R nonempty)
//   *1: R = -R
//   *2: a, b in R, beta(a,b) != epsilon  =>  a+b in R
//   Lie only: R does not meet Rad(beta)
// Every violated axiom is reported once with the first witness found.
ValidationReport validate_system(Kind kind, const Bicharacter& beta,
                                 std::vector<GroupElem> roots,
                                 long long budget = kDefaultBudget);

// A validated skew root system. Roots are kept sorted and deduplicated.
class SkewRootSystem {
 public:
  // Throws NotValidated (message carries the first witness) on bad input.
  static SkewRootSystem checked(Kind kind, Bicharacter beta, std::vector<GroupElem> roots,
                                long long budget = kDefaultBudget);

  Kind kind() const { return kind_; }
  const Bicharacter& beta() const { return beta_; }
  const FinAbGroup& group() const { return beta_.group(); }
  const std::vector<GroupElem>& roots() const { return roots_; }
  long dim() const { return static_cast<long>(roots_.size()); }

  // Rad(beta) trivial.
  bool reduced(long long budget = kDefaultBudget) const;

 private:
  SkewRootSystem(Kind kind, Bicharacter beta, std::vector<GroupElem> roots);
  Kind kind_;
  Bicharacter beta_;
  std::vector<GroupElem> roots_;
};

// Undirected interaction graph on the roots: vertices in root order, edge
// {i, j} (i < j) iff kind_edge(root_i, root_j).
struct RootGraph {
  std::vector<GroupElem> verts;
  std::vector<std::pair<long, long>> edges;
  std::vector<std::vector<long>> adj;
};
RootGraph root_graph(const SkewRootSystem& s);

// Connected components as sorted index lists, ordered by smallest vertex.
std::vector<std::vector<long>> graph_components(const RootGraph& g);

struct IndecomposabilityReport {
  bool indecomposable;
  // The converse (connected => indecomposable as an orthogonal sum) is a
  // theorem for reduced Lie systems; outside that case this flag records
  // that only the graph criterion was evaluated.
  bool connectivity_only;
};
IndecomposabilityReport is_indecomposable(const SkewRootSystem& s);

// Orthogonal direct sum on the concatenated group. Both systems must share
// the kind (KindMismatch). The result is re-validated: Lie sums pass, and a
// Jordan "sum" correctly fails closure (NotValidated), since joint roots
// (r, s) would be forced.
SkewRootSystem direct_sum(const SkewRootSystem& a, const SkewRootSystem& b);

// Reduction modulo a subgroup of the radical: quotient group, pushed-forward
// bicharacter, image roots. Throws NotInRadical when h is not inside
// Rad(beta).
struct ReductionResult {
  SkewRootSystem system;
  GroupHom projection;
};
ReductionResult reduce(const SkewRootSystem& s, const std::vector<GroupElem>& h,
                       long long budget = kDefaultBudget);

// All skew root systems for (beta, kind), each as a sorted root list, in
// lexicographic order. Backtracking over negation orbits with closure
// forcing; node count is charged against the budget.
std::vector<std::vector<GroupElem>> enumerate_systems(const Bicharacter& beta, Kind kind,
                                                      long long budget = kDefaultBudget);

// All group automorphisms preserving beta, brute force over generator
// images with order and pairing pruning.
std::vector<GroupHom> beta_automorphisms(const Bicharacter& beta,
                                         long long budget = kDefaultBudget);

// Orbits of the given systems under the beta-preserving automorphisms,
// keyed by the lexicographically minimal image. Classes sorted by canonical
// representative.
struct IsoClass {
  std::vector<GroupElem> canonical;
  std::vector<std::size_t> members;  // indices into the input list
};
std::vector<IsoClass> classify_systems(const Bicharacter& beta,
                                       const std::vector<std::vector<GroupElem>>& systems,
                                       long long budget = kDefaultBudget);

}  // namespace skw
