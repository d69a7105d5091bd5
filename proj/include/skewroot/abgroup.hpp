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

#include <memory>
#include <string>
#include <vector>

namespace skw {

// Hard cap on element enumerations unless the caller raises it.
inline constexpr long long kDefaultBudget = 1LL << 20;

class GroupElem;

// Finite abelian group presented as a direct sum of cyclic factors
// Z/n_1 x ... x Z/n_k. Value type with shared immutable state; equality is
// structural (same orders list). Trivial factors (n_i = 1) are dropped at
// construction, so the trivial group has k() == 0.
class FinAbGroup {
 public:
  explicit FinAbGroup(std::vector<long> orders);
  static FinAbGroup trivial() { return FinAbGroup(std::vector<long>{}); }

  long k() const { return static_cast<long>(orders_->size()); }
  const std::vector<long>& orders() const { return *orders_; }
  long long size() const;
  // lcm of the cyclic orders; 1 for the trivial group.
  long exponent() const;

  GroupElem zero() const;
  // Residues are reduced componentwise; arity must match k().
  GroupElem elem(std::vector<long> residues) const;
  GroupElem generator(long i) const;

  // All elements in mixed-radix lexicographic order (first coordinate most
  // significant). Throws BudgetExceeded when size() > budget.
  std::vector<GroupElem> elements(long long budget = kDefaultBudget) const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return *a.orders_ == *b.orders_;
  }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

  std::string to_string() const;  // "Z 2 x Z 4", "Z 1" for trivial

 private:
  std::shared_ptr<const std::vector<long>> orders_;
};

// Element of a FinAbGroup; carries its group (cheap shared copy), residues
// normalized to [0, n_i). Cross-group arithmetic throws MismatchedGroups.
class GroupElem {
 public:
  GroupElem(FinAbGroup g, std::vector<long> residues);

  const FinAbGroup& group() const { return g_; }
  const std::vector<long>& residues() const { return r_; }

  bool is_zero() const;
  long order() const;

  friend GroupElem operator+(const GroupElem& a, const GroupElem& b);
  friend GroupElem operator-(const GroupElem& a, const GroupElem& b);
  GroupElem operator-() const;
  GroupElem scaled(long m) const;

  friend bool operator==(const GroupElem& a, const GroupElem& b);
  friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
  // Lexicographic on residues; total order inside one group.
  friend bool operator<(const GroupElem& a, const GroupElem& b);

  std::string to_string() const;  // "(l1,l2,...,lk)"

 private:
  FinAbGroup g_;
  std::vector<long> r_;
};

// Homomorphism given by generator images; construction checks
// well-definedness (n_i * image_i = 0 for each factor).
class GroupHom {
 public:
  GroupHom(FinAbGroup dom, FinAbGroup cod, std::vector<GroupElem> gen_images);

  const FinAbGroup& dom() const { return dom_; }
  const FinAbGroup& cod() const { return cod_; }
  const std::vector<GroupElem>& gen_images() const { return images_; }

  GroupElem apply(const GroupElem& x) const;

 private:
  FinAbGroup dom_, cod_;
  std::vector<GroupElem> images_;
};

// Closure of a generating set, BFS; sorted ascending. The budget guards the
// ambient enumeration implied by worst-case closure size.
std::vector<GroupElem> subgroup_generated(const FinAbGroup& g,
                                          const std::vector<GroupElem>& gens,
                                          long long budget = kDefaultBudget);

// True when `h` is nonempty, contains zero and is closed under addition.
bool is_subgroup(const FinAbGroup& g, const std::vector<GroupElem>& h);

// Smith normal form over the integers: u*a*v = d with u, v unimodular and
// d diagonal, d_1 | d_2 | ... (nonnegative diagonal).
struct SnfResult {
  std::vector<std::vector<long long>> d, u, v;
};
SnfResult smith_normal_form(std::vector<std::vector<long long>> a);

// Invariant factors > 1 in divisibility order; the canonical form of the
// isomorphism class ("Z 2 x Z 4 x Z 3" -> [2, 12]).
std::vector<long> canonical_orders(const FinAbGroup& g);

// G / <subgroup>, with the projection hom. The subgroup must be closed
// (NotASubgroup otherwise). The returned group is in canonical invariant-
// factor form.
struct QuotientResult {
  FinAbGroup group;
  GroupHom projection;
};
QuotientResult quotient(const FinAbGroup& g, const std::vector<GroupElem>& subgroup);

}  // namespace skw
