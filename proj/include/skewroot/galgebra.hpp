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
#include <vector>

#include "skewroot/linalg.hpp"
#include "skewroot/skewroot.hpp"
#include "skewroot/symplectic.hpp"

namespace skw {

// The graded algebra spanned by {u_a : a in R} inside the twisted group
// algebra of xi: Lie bracket [u_a,u_b] = (xi(a,b)-xi(b,a)) u_{a+b}, Jordan
// product u_a o u_b = (xi(a,b)+xi(b,a))/2 u_{a+b}. Closure of the root set
// guarantees the coefficient vanishes whenever a+b is not a root, so the
// span really is a subalgebra; build() re-verifies this.
class GradedAlgebra {
 public:
  // Requires xi on the same group with psi(xi) == beta (CocycleMismatch).
  static GradedAlgebra build(const SkewRootSystem& s, const Cocycle& xi);

  Kind kind() const { return sys_.kind(); }
  const SkewRootSystem& system() const { return sys_; }
  const Cocycle& cocycle() const { return xi_; }
  const std::vector<GroupElem>& basis() const { return sys_.roots(); }
  long dim() const { return sys_.dim(); }

  // Index of a in the basis order, -1 when a is not a root.
  long basis_index(const GroupElem& a) const;
  // Index of basis[i] + basis[j], -1 when the sum is not a root.
  long sum_index(long i, long j) const;
  // c with u_i u_j = c u_{i+j}; zero exactly when sum_index(i,j) == -1 or
  // the pair does not interact.
  const CycloNum& struct_const(long i, long j) const;

  // Matrix of multiplication by u_{basis[i]} in the basis order: ad u_a for
  // Lie kind, the left multiplication L(u_a) for Jordan kind. Monomial
  // shape: at most one nonzero per column.
  CycloMatrix mul_matrix(long i) const;

  // Product of two coordinate vectors.
  std::vector<CycloNum> product(const std::vector<CycloNum>& x,
                                const std::vector<CycloNum>& y) const;

 private:
  GradedAlgebra(SkewRootSystem s, Cocycle xi);
  SkewRootSystem sys_;
  Cocycle xi_;
  std::vector<std::vector<long>> sum_;
  std::vector<std::vector<CycloNum>> c_;
};

// Killing form matrix, entries tr(ad u_a . ad u_b) computed through the
// monomial structure (OpenMP over entries). Lie kind only (KindMismatch).
// Gradedness makes every entry with a+b != 0 vanish; the entries are still
// computed as traces, not assumed.
CycloMatrix killing_form(const GradedAlgebra& a);

// Closed form for the pairing entry kappa(u_a, u_{-a}) with a = basis[i]:
// xi(a,-a) * sum_{b in R} (2 - beta(a,b) - beta(a,b)^{-1}).
CycloNum killing_pairing_closed(const GradedAlgebra& a, long i);

// Jordan trace form, entries tr L(u_g o u_h) (OpenMP). Jordan kind only.
CycloMatrix trace_form(const GradedAlgebra& a);

// Closed form for the pairing entry tau(u_g, u_{-g}): xi(-g,g) * dim.
CycloNum trace_pairing_closed(const GradedAlgebra& a, long i);

// Dimension of { phi : phi ad_x = ad_x phi for all basis x }. For a Lie
// algebra with nondegenerate Killing form this counts the simple summands;
// the nondegeneracy gate runs first and failure raises NotSemisimple.
// Lie kind only (KindMismatch).
long centroid_dim(const GradedAlgebra& a);

// True when, for every root a, the reachability closure of {a} under
// b -> a'+b (over a' with c_{a',b} != 0) is all of R: no proper nonzero
// graded ideal exists.
bool graded_simple(const GradedAlgebra& a);

// Lie kind: min_poly_squarefree(ad u_a) for every root (ad-semisimplicity).
// Jordan kind: the inverse relation u_g o (xi(g,g) u_{-g}) = u_0 for every
// root (division grading).
bool homogeneous_semisimple(const GradedAlgebra& a);

// Identity sweeps over all basis triples (Jacobi, Lie kind) resp. pairs of
// two-term elements against basis vectors (linearized Jordan identity,
// Jordan kind). OpenMP; serial::* below are independent reference routes.
bool jacobi_holds(const GradedAlgebra& a);
bool jordan_identity_holds(const GradedAlgebra& a);

// Verification of the surjection u_g -> u_{p(g)} induced by a reduction.
// Requires a's cocycle to be the pull-back of abar's along p (checked on
// generator pairs; both are bilinear), else NotPulledBack. Every structure
// constant must transfer exactly; MismatchedAlgebras on any failure.
struct ReductionHomReport {
  std::vector<long> image_index;  // basis index in abar per basis element of a
  bool surjective;
  bool bijective;
  long fiber_excess;  // dim a - number of distinct images
};
ReductionHomReport check_reduction_hom(const GradedAlgebra& a, const GradedAlgebra& abar,
                                       const GroupHom& p);

// Line-oriented structure-constant export: one record "a b a+b scalar" per
// nonzero constant, in lexicographic basis order. Byte-deterministic.
void export_structure(const GradedAlgebra& a, std::ostream& os);

// Searches for a graded isomorphism u_a -> lambda_a u_a between two builds
// of the same system from different cocycles with equal psi-image. Values
// are searched among roots of unity of order 2*lcm of the two conductors,
// with constraint propagation; intended for small instances. Returns the
// scale factors in basis order, or nullopt if the search is exhausted.
std::optional<std::vector<CycloNum>> rescaling_isomorphism(const GradedAlgebra& a,
                                                           const GradedAlgebra& b,
                                                           long long budget = 1LL << 16);

namespace serial {
// Dense reference routes, no OpenMP: full multiplication matrices, entry
// sums for traces, coordinate-vector expansions for the identities.
CycloMatrix killing_form(const GradedAlgebra& a);
CycloMatrix trace_form(const GradedAlgebra& a);
bool jacobi_holds(const GradedAlgebra& a);
bool jordan_identity_holds(const GradedAlgebra& a);
}  // namespace serial

}  // namespace skw
