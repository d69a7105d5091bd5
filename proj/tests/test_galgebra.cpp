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

#include <doctest.h>

#include <sstream>

#include "skewroot/errors.hpp"
#include "skewroot/galgebra.hpp"

using namespace skw;

namespace {

Bicharacter pairing22() {
  return Bicharacter(FinAbGroup({2, 2}), 2, {{0, 1}, {1, 0}});
}

Bicharacter pairing44() {
  return Bicharacter(FinAbGroup({4, 4}), 4, {{0, 1}, {3, 0}});
}

std::vector<GroupElem> nonzero_elements(const FinAbGroup& g) {
  std::vector<GroupElem> out;
  for (const GroupElem& x : g.elements())
    if (!x.is_zero()) out.push_back(x);
  return out;
}

// L(G \ 0) over the standard cocycle: sl_n-presentation fixtures.
GradedAlgebra lie_all(const Bicharacter& beta) {
  auto s = SkewRootSystem::checked(Kind::Lie, beta, nonzero_elements(beta.group()));
  return GradedAlgebra::build(s, standard_cocycle(beta));
}

GradedAlgebra jordan_all(const Bicharacter& beta) {
  auto s = SkewRootSystem::checked(Kind::Jordan, beta, beta.group().elements());
  return GradedAlgebra::build(s, standard_cocycle(beta));
}

// Pointwise product of two cocycles on the same group (exponents add).
Cocycle twist(const Cocycle& a, const Cocycle& b) {
  REQUIRE(a.group() == b.group());
  REQUIRE(a.n() == b.n());
  const long k = a.group().k();
  std::vector<std::vector<long>> s(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (a.exp_at(i, j) + b.exp_at(i, j)) % a.n();
  return Cocycle(a.group(), a.n(), std::move(s));
}

}  // namespace

TEST_CASE("build validates the cocycle against the bicharacter") {
  const Bicharacter b = pairing22();
  auto s = SkewRootSystem::checked(Kind::Lie, b, nonzero_elements(b.group()));
  CHECK_THROWS_AS(GradedAlgebra::build(s, Cocycle::trivial(b.group(), 2)), CocycleMismatch);
  CHECK_THROWS_AS(GradedAlgebra::build(s, Cocycle::trivial(FinAbGroup({2, 2, 2}), 2)),
                  MismatchedGroups);
}

TEST_CASE("sl2 fixture: structure constants, multiplication matrix, minimal polynomial") {
  const GradedAlgebra a = lie_all(pairing22());
  REQUIRE(a.dim() == 3);
  const FinAbGroup& g = a.system().group();
  // basis order is lexicographic: (0,1), (1,0), (1,1)
  const long i01 = a.basis_index(g.elem({0, 1}));
  const long i10 = a.basis_index(g.elem({1, 0}));
  const long i11 = a.basis_index(g.elem({1, 1}));
  REQUIRE(i01 == 0);
  REQUIRE(i10 == 1);
  REQUIRE(i11 == 2);

  // [u_10, u_01] = 2 u_11 under the standard cocycle
  CHECK(a.struct_const(i10, i01) == CycloNum::integer(2));
  CHECK(a.sum_index(i10, i01) == i11);
  // antisymmetry and vanishing squares
  for (long i = 0; i < 3; ++i) {
    CHECK(a.struct_const(i, i).is_zero());
    for (long j = 0; j < 3; ++j)
      CHECK(a.struct_const(i, j) == CycloNum::integer(0) - a.struct_const(j, i));
  }
  // sums leaving the root set only happen with vanishing constants
  CHECK(a.sum_index(i01, i01) == -1);
  CHECK(a.struct_const(i01, i01).is_zero());

  const CycloMatrix ad10 = a.mul_matrix(i10);
  CHECK(ad10.at(i11, i01) == CycloNum::integer(2));
  CHECK(ad10.at(i01, i11) == CycloNum::integer(2));
  CHECK(ad10.at(i10, i10).is_zero());

  // min poly of ad u_10 is x^3 - 4x: eigenvalues {0, 2, -2}
  const auto mp = min_poly(ad10);
  REQUIRE(mp.size() == 4);
  CHECK(mp[0] == CycloNum::integer(0));
  CHECK(mp[1] == CycloNum::integer(-4));
  CHECK(mp[2] == CycloNum::integer(0));
  CHECK(mp[3] == CycloNum::integer(1));
  CHECK(min_poly_squarefree(ad10));
}

TEST_CASE("sl2 Killing form: closed form, trace route, dense reference") {
  const GradedAlgebra a = lie_all(pairing22());
  const CycloMatrix k = killing_form(a);
  // diag(8, 8, -8) in basis order (0,1),(1,0),(1,1)
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) {
      if (i != j) {
        CHECK(k.at(i, j).is_zero());  // pairing a+b=0 only on the diagonal here
      } else {
        CHECK(k.at(i, i) == CycloNum::integer(i == 2 ? -8 : 8));
        CHECK(k.at(i, i) == killing_pairing_closed(a, i));
      }
    }
  CHECK(mat_det(k) == CycloNum::integer(-512));
  CHECK(serial::killing_form(a) == k);
  CHECK_THROWS_AS(trace_form(a), KindMismatch);
  CHECK_THROWS_AS(jordan_identity_holds(a), KindMismatch);
}

TEST_CASE("M2+ fixture: unit, trace form, inverse relation") {
  const GradedAlgebra a = jordan_all(pairing22());
  REQUIRE(a.dim() == 4);
  const FinAbGroup& g = a.system().group();
  const long i00 = a.basis_index(g.zero());
  const long i11 = a.basis_index(g.elem({1, 1}));
  REQUIRE(i00 == 0);

  // u_0 is the unit: L(u_0) = id
  CHECK(a.mul_matrix(i00) == CycloMatrix::identity(4, a.cocycle().n()));
  // anticommuting pairs multiply to zero in the Jordan product
  CHECK(a.struct_const(1, 2).is_zero());
  CHECK(a.struct_const(1, 3).is_zero());
  CHECK(a.struct_const(2, 3).is_zero());

  const CycloMatrix t = trace_form(a);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) {
      if (i != j) {
        CHECK(t.at(i, j).is_zero());
      } else {
        CHECK(t.at(i, i) == CycloNum::integer(i == i11 ? -4 : 4));
        CHECK(t.at(i, i) == trace_pairing_closed(a, i));
      }
    }
  CHECK(mat_det(t) == CycloNum::integer(-256));
  CHECK(serial::trace_form(a) == t);
  CHECK(homogeneous_semisimple(a));
  CHECK(graded_simple(a));
  CHECK(jordan_identity_holds(a));
  CHECK(serial::jordan_identity_holds(a));
  CHECK_THROWS_AS(killing_form(a), KindMismatch);
  CHECK_THROWS_AS(centroid_dim(a), KindMismatch);
  CHECK_THROWS_AS(jacobi_holds(a), KindMismatch);
}

TEST_CASE("spin-factor Jordan fixture: orthonormal generators") {
  // R = {0, e1, e2} under the anticommutation pairing: F 1 + F v1 + F v2
  const Bicharacter b = pairing22();
  const FinAbGroup& g = b.group();
  auto s = SkewRootSystem::checked(Kind::Jordan, b,
                                   {g.zero(), g.elem({0, 1}), g.elem({1, 0})});
  const GradedAlgebra a = GradedAlgebra::build(s, standard_cocycle(b));
  REQUIRE(a.dim() == 3);
  const long v1 = a.basis_index(g.elem({0, 1}));
  const long v2 = a.basis_index(g.elem({1, 0}));
  // v_i o v_j = delta_ij
  CHECK(a.struct_const(v1, v2).is_zero());
  CHECK(a.struct_const(v1, v1) == CycloNum::integer(1));
  CHECK(a.struct_const(v2, v2) == CycloNum::integer(1));
  CHECK(a.sum_index(v1, v1) == a.basis_index(g.zero()));
  const CycloMatrix t = trace_form(a);
  CHECK(!mat_det(t).is_zero());
  CHECK(jordan_identity_holds(a));
  CHECK(serial::jordan_identity_holds(a));
  CHECK(graded_simple(a));
  CHECK(homogeneous_semisimple(a));
}

TEST_CASE("sl4 over Z4^2: identities, semisimplicity, simplicity") {
  const GradedAlgebra a = lie_all(pairing44());
  REQUIRE(a.dim() == 15);
  CHECK(jacobi_holds(a));
  CHECK(serial::jacobi_holds(a));
  const CycloMatrix k = killing_form(a);
  CHECK(!mat_det(k).is_zero());
  for (long i = 0; i < a.dim(); ++i) {
    const long j = a.basis_index(-a.basis()[static_cast<std::size_t>(i)]);
    CHECK(k.at(i, j) == killing_pairing_closed(a, i));
  }
  CHECK(serial::killing_form(a) == k);
  CHECK(centroid_dim(a) == 1);
  CHECK(graded_simple(a));
  CHECK(homogeneous_semisimple(a));
}

TEST_CASE("M4+ over Z4^2: Jordan identities and trace form") {
  const GradedAlgebra a = jordan_all(pairing44());
  REQUIRE(a.dim() == 16);
  CHECK(jordan_identity_holds(a));
  const CycloMatrix t = trace_form(a);
  CHECK(!mat_det(t).is_zero());
  for (long i = 0; i < a.dim(); ++i) {
    const long j = a.basis_index(-a.basis()[static_cast<std::size_t>(i)]);
    CHECK(t.at(i, j) == trace_pairing_closed(a, i));
    // off-pairing entries vanish
    for (long l = 0; l < a.dim(); ++l)
      if (l != j) CHECK(t.at(i, l).is_zero());
  }
  CHECK(graded_simple(a));
  CHECK(homogeneous_semisimple(a));
}

TEST_CASE("centroid separates simple from semisimple") {
  const Bicharacter b = pairing22();
  auto s = SkewRootSystem::checked(Kind::Lie, b, nonzero_elements(b.group()));
  const GradedAlgebra single = GradedAlgebra::build(s, standard_cocycle(b));
  CHECK(centroid_dim(single) == 1);

  const SkewRootSystem sum = direct_sum(s, s);
  const GradedAlgebra twice = GradedAlgebra::build(sum, standard_cocycle(sum.beta()));
  CHECK(twice.dim() == 6);
  CHECK(jacobi_holds(twice));
  const CycloMatrix k = killing_form(twice);
  CHECK(mat_det(k) == CycloNum::integer(262144));  // (-512)^2, block diagonal
  CHECK(centroid_dim(twice) == 2);
  CHECK_FALSE(graded_simple(twice));
  CHECK(homogeneous_semisimple(twice));
}

TEST_CASE("reduction homomorphism transfers all structure constants") {
  const FinAbGroup g({2, 2, 2});
  const Bicharacter b(g, 2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  std::vector<GroupElem> roots;
  for (const GroupElem& x : g.elements())
    if (x.residues()[0] != 0 || x.residues()[1] != 0) roots.push_back(x);
  auto s = SkewRootSystem::checked(Kind::Lie, b, roots);
  auto red = reduce(s, b.radical());

  const Cocycle xibar = standard_cocycle(red.system.beta());
  const Cocycle xi = pull_cocycle(xibar, red.projection);
  const GradedAlgebra abar = GradedAlgebra::build(red.system, xibar);
  const GradedAlgebra a = GradedAlgebra::build(s, xi);

  const auto rep = check_reduction_hom(a, abar, red.projection);
  CHECK(rep.surjective);
  CHECK_FALSE(rep.bijective);
  CHECK(rep.fiber_excess == 3);  // 6 roots over 3

  // identity projection: bijective
  std::vector<GroupElem> gens;
  for (long i = 0; i < g.k(); ++i) gens.push_back(g.generator(i));
  const GroupHom idhom(g, g, gens);
  const GradedAlgebra a2 = GradedAlgebra::build(s, standard_cocycle(b));
  const auto rep2 = check_reduction_hom(a2, a2, idhom);
  CHECK(rep2.bijective);
  CHECK(rep2.fiber_excess == 0);

  // a cocycle that is not pulled back along the projection is rejected
  const Cocycle rho(g, 2, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const GradedAlgebra bad = GradedAlgebra::build(s, twist(xi, rho));
  CHECK_THROWS_AS(check_reduction_hom(bad, abar, red.projection), NotPulledBack);
}

TEST_CASE("structure constant export is deterministic and value-correct") {
  const GradedAlgebra a = lie_all(pairing22());
  std::ostringstream o1, o2;
  export_structure(a, o1);
  export_structure(a, o2);
  CHECK(o1.str() == o2.str());

  const std::string expected =
      "(0,1) (1,0) (1,1) 2:[-2/1]\n"
      "(0,1) (1,1) (1,0) 2:[-2/1]\n"
      "(1,0) (0,1) (1,1) 2:[2/1]\n"
      "(1,0) (1,1) (0,1) 2:[2/1]\n"
      "(1,1) (0,1) (1,0) 2:[2/1]\n"
      "(1,1) (1,0) (0,1) 2:[-2/1]\n";
  CHECK(o1.str() == expected);
}

TEST_CASE("different cocycles over one bicharacter are rescaling-isomorphic") {
  const Bicharacter b = pairing22();
  const Cocycle xs = standard_cocycle(b);
  // symmetric twist: same psi image, different cocycle
  const Cocycle rho(b.group(), 2, {{1, 0}, {0, 0}});
  const Cocycle xt = twist(xs, rho);
  REQUIRE(psi(xt) == b);

  auto s = SkewRootSystem::checked(Kind::Lie, b, nonzero_elements(b.group()));
  const GradedAlgebra a1 = GradedAlgebra::build(s, xs);
  const GradedAlgebra a2 = GradedAlgebra::build(s, xt);
  const auto lam = rescaling_isomorphism(a1, a2);
  REQUIRE(lam.has_value());
  // verify: c1(i,j) lam_{i+j} = lam_i lam_j c2(i,j)
  for (long i = 0; i < a1.dim(); ++i)
    for (long j = 0; j < a1.dim(); ++j) {
      if (a1.struct_const(i, j).is_zero()) {
        CHECK(a2.struct_const(i, j).is_zero());
        continue;
      }
      const long t = a1.sum_index(i, j);
      CHECK(a1.struct_const(i, j) * (*lam)[static_cast<std::size_t>(t)] ==
            (*lam)[static_cast<std::size_t>(i)] * (*lam)[static_cast<std::size_t>(j)] *
                a2.struct_const(i, j));
    }

  // Jordan variant
  auto sj = SkewRootSystem::checked(Kind::Jordan, b, b.group().elements());
  const GradedAlgebra j1 = GradedAlgebra::build(sj, xs);
  const GradedAlgebra j2 = GradedAlgebra::build(sj, xt);
  CHECK(rescaling_isomorphism(j1, j2).has_value());

  // identical algebras: trivially isomorphic
  CHECK(rescaling_isomorphism(a1, a1).has_value());
}
