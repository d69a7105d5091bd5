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

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "skewroot/abgroup.hpp"
#include "skewroot/cyclo.hpp"

namespace skw {

// Alternating bicharacter beta : G x G -> mu_N, stored through its exponent
// matrix on the generators: beta(a, b) = z_N^(a^T M b). Construction checks
// well-definedness (n_i M_ij = 0 = n_j M_ij mod N) and that beta(a, a) = 1
// for every a (diagonal zero, M_ij + M_ji = 0 mod N).
class Bicharacter {
 public:
  Bicharacter(FinAbGroup g, long n, std::vector<std::vector<long>> m);
  static Bicharacter trivial(FinAbGroup g, long n = 1);
  // Strictly-lower-triangular data (row i lists m_i0 .. m_i,i-1); the upper
  // part is filled in by skew symmetry. This mirrors the text format.
  static Bicharacter from_lower_triangle(FinAbGroup g, long n,
                                         const std::vector<std::vector<long>>& rows);

  const FinAbGroup& group() const { return g_; }
  long n() const { return n_; }
  long exp_at(long i, long j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  // Exponent of beta(a, b) in [0, N).
  long eval_exp(const GroupElem& a, const GroupElem& b) const;
  CycloNum eval(const GroupElem& a, const GroupElem& b) const;
  bool eval_is_one(const GroupElem& a, const GroupElem& b) const;
  // beta(a,b) = -1; always false for odd N.
  bool eval_is_minus_one(const GroupElem& a, const GroupElem& b) const;

  // Rad(beta) = { a : beta(a, .) = 1 }, sorted. Enumerates G.
  std::vector<GroupElem> radical(long long budget = kDefaultBudget) const;
  bool nonsingular(long long budget = kDefaultBudget) const;

  // Mathematical equality: same group and the same function G x G -> roots
  // of unity (exponent matrices compared after lifting to the lcm of the
  // two conductors).
  friend bool operator==(const Bicharacter& a, const Bicharacter& b);
  friend bool operator!=(const Bicharacter& a, const Bicharacter& b) { return !(a == b); }

 private:
  FinAbGroup g_;
  long n_;
  std::vector<std::vector<long>> m_;
};

// Bilinear 2-cocycle xi : G x G -> mu_N, xi(a, b) = z_N^(a^T S b). Bilinear
// maps are automatically associative 2-cocycles; construction checks
// well-definedness only.
class Cocycle {
 public:
  Cocycle(FinAbGroup g, long n, std::vector<std::vector<long>> s);
  static Cocycle trivial(FinAbGroup g, long n = 1);

  const FinAbGroup& group() const { return g_; }
  long n() const { return n_; }
  long exp_at(long i, long j) const { return s_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  long eval_exp(const GroupElem& a, const GroupElem& b) const;
  CycloNum eval(const GroupElem& a, const GroupElem& b) const;

  friend bool operator==(const Cocycle& a, const Cocycle& b);
  friend bool operator!=(const Cocycle& a, const Cocycle& b) { return !(a == b); }

 private:
  FinAbGroup g_;
  long n_;
  std::vector<std::vector<long>> s_;
};

// The skew form of a cocycle: Psi(xi)(a, b) = xi(a, b) xi(b, a)^{-1}. Always
// alternating and well-defined.
Bicharacter psi(const Cocycle& xi);

// Standard section of Psi: S = strict lower triangle of M. Satisfies
// psi(standard_cocycle(beta)) == beta for every alternating bicharacter.
Cocycle standard_cocycle(const Bicharacter& beta);

// Orthogonal direct sum (block diagonal on the concatenated group, conductor
// the lcm).
Bicharacter orthogonal_sum(const Bicharacter& a, const Bicharacter& b);
Cocycle cocycle_product(const Cocycle& a, const Cocycle& b);

// Composition with a homomorphism f : H -> G in both arguments. Covers
// restriction to a subgroup (f injective) and pullback along a projection.
Bicharacter pull_bicharacter(const Bicharacter& beta, const GroupHom& f);
Cocycle pull_cocycle(const Cocycle& xi, const GroupHom& f);

// Descends beta along a projection p : G -> Gbar whose kernel lies in
// Rad(beta): betabar(p a, p b) = beta(a, b). Throws NotInRadical otherwise.
Bicharacter push_bicharacter(const Bicharacter& beta, const GroupHom& p,
                             long long budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Twisted group algebra F^xi G: basis u_g, u_a u_b = xi(a, b) u_{a+b}.

class TGAElement;

class TwistedGroupAlgebra {
 public:
  explicit TwistedGroupAlgebra(Cocycle xi);

  const Cocycle& cocycle() const;
  const FinAbGroup& group() const;

  TGAElement basis(const GroupElem& g) const;
  TGAElement zero() const;
  TGAElement one() const;  // u_0
  // Two-sided inverse of the basis element u_g: xi(g,-g)^{-1} u_{-g}.
  TGAElement basis_inverse(const GroupElem& g) const;

  friend bool operator==(const TwistedGroupAlgebra& a, const TwistedGroupAlgebra& b);
  friend bool operator!=(const TwistedGroupAlgebra& a, const TwistedGroupAlgebra& b) {
    return !(a == b);
  }

 private:
  std::shared_ptr<const Cocycle> xi_;
};

// Element as a sparse combination of basis vectors; carries its algebra.
// Operations between elements of different algebras throw
// MismatchedAlgebras.
class TGAElement {
 public:
  TGAElement(TwistedGroupAlgebra alg, std::map<GroupElem, CycloNum> terms);

  const TwistedGroupAlgebra& algebra() const { return alg_; }
  const std::map<GroupElem, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloNum coeff(const GroupElem& g) const;

  friend TGAElement operator+(const TGAElement& a, const TGAElement& b);
  friend TGAElement operator-(const TGAElement& a, const TGAElement& b);
  friend TGAElement operator*(const TGAElement& a, const TGAElement& b);
  friend TGAElement operator*(const CycloNum& s, const TGAElement& a);
  friend bool operator==(const TGAElement& a, const TGAElement& b);
  friend bool operator!=(const TGAElement& a, const TGAElement& b) { return !(a == b); }

 private:
  TwistedGroupAlgebra alg_;
  std::map<GroupElem, CycloNum> terms_;  // zero coefficients dropped
};

// Recovers the alternating bicharacter of a G-graded division-algebra
// grading from its scalar multiplication table: table(g, h) is the scalar
// with b_g b_h = table(g, h) b_{g+h}. Requires every table value nonzero
// (NotDivision) and all commutator ratios to form a bicharacter with values
// in mu_n (NotABicharacter). The result is invariant under rescaling the
// basis b_g -> lambda_g b_g.
Bicharacter extract_bicharacter(
    const FinAbGroup& g, long n,
    const std::function<CycloNum(const GroupElem&, const GroupElem&)>& table,
    long long budget = kDefaultBudget);

// Exhaustive associativity sweep u_a (u_b u_c) == (u_a u_b) u_c over G^3
// via actual algebra products (OpenMP kernel). The serial reference checks
// the equivalent exponent-level identity instead; the two routes are
// independent.
bool tga_associative(const TwistedGroupAlgebra& a, long long budget = kDefaultBudget);
namespace serial {
bool tga_associative(const TwistedGroupAlgebra& a, long long budget = kDefaultBudget);
}

}  // namespace skw
