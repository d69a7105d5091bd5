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

#include <optional>
#include <string>
#include <vector>

#include "skewroot/galgebra.hpp"

namespace skw {

// ---------------------------------------------------------------------------
// Quadratic forms over F_2.

enum class QuadKind {
  HOdd,    // h on Z_2^{2k+1}: sum a_{2i-1} a_{2i} + a_{2k+1}^2
  F0Even,  // f0 on Z_2^{2k}:  sum a_{2i-1} a_{2i}
  F1Even,  // f1 on Z_2^{2k}:  a_1^2 + a_2^2 + sum a_{2i-1} a_{2i}
};

// "h" | "f0" | "f1"; throws ParseError otherwise.
QuadKind parse_quad_kind(const std::string& s);
std::string quad_kind_name(QuadKind kind);

// One of the three built-in nonsingular forms, evaluated literally over F_2
// (squares are computed as products; a^2 = a holds but is not used to
// simplify). The polarization q(a+b) - q(a) - q(b) is bilinear; beta() is
// the alternating bicharacter (-1)^{polarization} built independently from
// the explicit pair-block matrix, so tests can compare the two routes.
class QuadraticFormF2 {
 public:
  QuadraticFormF2(QuadKind kind, long k);  // RangeError if k < 1

  QuadKind form_kind() const { return kind_; }
  long k() const { return k_; }
  long n() const;  // 2k+1 for HOdd, 2k otherwise
  const FinAbGroup& group() const { return g_; }

  int eval(const GroupElem& a) const;
  int polarize(const GroupElem& a, const GroupElem& b) const;
  Bicharacter beta() const;

 private:
  QuadKind kind_;
  long k_;
  FinAbGroup g_;
};

// ---------------------------------------------------------------------------
// Monomial matrices: exactly one nonzero entry per row and column. All the
// graded matrix models used here (diagonal/shift generator words, operator
// chains, involution form matrices) are monomial, which turns n^3 matrix
// products into n-step ones.

class MonoMatrix {
 public:
  // Row r carries value scale[r] at column perm[r]; perm must be a
  // permutation and every scale nonzero.
  MonoMatrix(std::vector<long> perm, std::vector<CycloNum> scale);

  static MonoMatrix identity(long n);

  long size() const { return static_cast<long>(perm_.size()); }
  const std::vector<long>& perm() const { return perm_; }
  const CycloNum& scale(long row) const;
  CycloNum entry(long r, long c) const;

  friend MonoMatrix operator*(const MonoMatrix& a, const MonoMatrix& b);
  MonoMatrix scaled(const CycloNum& c) const;
  MonoMatrix transpose() const;
  MonoMatrix inverse() const;
  MonoMatrix kron(const MonoMatrix& o) const;
  MonoMatrix pow(long e) const;  // e >= 0

  CycloMatrix dense(long order) const;

  friend bool operator==(const MonoMatrix& a, const MonoMatrix& b);
  friend bool operator!=(const MonoMatrix& a, const MonoMatrix& b) { return !(a == b); }

 private:
  std::vector<long> perm_;
  std::vector<CycloNum> scale_;
};

// A graded monomial model: one matrix per group element, multiplication
// closing up to scalars. mul_scalar(a, b) returns the lambda with
// at(a) at(b) = lambda at(a+b) and throws Error if the product is not
// proportional to the target basis matrix.
struct MatrixModel {
  FinAbGroup group;
  std::vector<MonoMatrix> basis;  // indexed in the order of group.elements()

  const MonoMatrix& at(const GroupElem& g) const;
  CycloNum mul_scalar(const GroupElem& a, const GroupElem& b) const;
  // Rank of the basis as vectors in F^{n x n}: the model is faithful iff
  // this equals |G|. Grouped by permutation part, so it stays cheap.
  long span_rank() const;
};

// ---------------------------------------------------------------------------
// Family constructors. Each instance carries the validated root systems
// together with the 2-cocycle the identification theorems expect.

struct FamilySystem {
  SkewRootSystem system;
  Cocycle xi;  // psi(xi) = system.beta()
};

struct FamilyInstance {
  std::string tag;  // canonical name without the :lie/:jordan suffix
  std::optional<FamilySystem> lie;
  std::optional<FamilySystem> jordan;
  // HOdd only: the coordinate-dropping hom onto the reduced group. The
  // instance cocycle is the pullback of the reduced standard cocycle along
  // this hom, so the induced map of graded algebras transfers structure
  // constants on the nose.
  std::optional<GroupHom> radical_projection;
  // Anticommuting family only: embedding of the Lie system's group (the
  // subgroup generated by the two-bit sums) into the ambient group.
  std::optional<GroupHom> subgroup_embedding;
};

// Blockwise nonsingular pairs (Z_{n_t})^2 with interleaved coordinates;
// R^- = G minus zero, R^+ = G. Each order must be >= 2 (RangeError).
FamilyInstance family_nonsingular(const std::vector<long>& orders);

// Anticommuting generators on Z_2^n: beta(e_i, e_j) = -1 for i != j.
// Jordan system {0, e_i} needs n >= 2; the Lie system on the two-bit sums
// is attached for n >= 3. RangeError if n < 2.
FamilyInstance family_clifford(long n);

// Level sets of the three quadratic forms. Sides outside their validity
// range (HOdd/F0Even Lie: k >= 2; F1Even Jordan: k >= 2; all others k >= 1)
// are left empty; k < 1 throws RangeError.
FamilyInstance family_quadratic(QuadKind kind, long k);

// Parses a side-less tag ("nonsingular:2,2", "clifford:5", "quad:f1:2")
// and builds the whole instance. ParseError on malformed tags.
FamilyInstance family_instance(const std::string& tag);

// Parses "<family>:<params>:lie|jordan" (e.g. "nonsingular:2,2:lie",
// "clifford:5:lie", "quad:f1:2:jordan") and returns that side.
// ParseError on malformed names, RangeError when the side is undefined.
FamilySystem family_by_name(const std::string& name);

// ---------------------------------------------------------------------------
// Matrix models.

// Generator words over the diagonal/shift pair per block: the block of
// order n contributes D = diag(eps^{n-1}, ..., eps, 1) and the cyclic shift
// S, with D S = eps S D. The word for (i_1, j_1, ..., i_k, j_k) is the
// Kronecker product of the per-block words D^i S^j.
MatrixModel pauli_model(const std::vector<long>& orders);

// Anticommuting involutive generators v_1, ..., v_n (v_i v_j = -v_j v_i for
// i != j, v_i^2 = 1) realized as operator chains on ceil(n/2) tensor factors
// of 2x2 matrices; the word for (l_1, ..., l_n) is v_1^{l_1} ... v_n^{l_n}.
MatrixModel clifford_model(long n);

// ---------------------------------------------------------------------------
// Involutions X* = Phi^{-1} X^t Phi on the 2^k model, with Phi the tensor
// product of one skew 2x2 block (m = 1) or none (m = 0) and identity blocks.
// Splits the graded basis into the -1 and +1 eigenlines of * two ways:
// by the matrix test and by evaluating the matching quadratic form f_m.

struct SupportSplit {
  std::vector<GroupElem> k_matrix;  // X* = -X, matrix route
  std::vector<GroupElem> h_matrix;  // X* = +X, matrix route
  std::vector<GroupElem> k_form;    // f_m = 1, form route
  std::vector<GroupElem> h_form;    // f_m = 0, form route
  bool agree = false;               // the two routes produced equal splits
};

// RangeError unless m is 0 or 1 and k >= 1; BudgetExceeded for k > 5.
SupportSplit involution_support(int m, long k);

// ---------------------------------------------------------------------------
// Identification of a family algebra against its classical target.

struct IdentifyRecord {
  std::string family;     // the tag that was requested
  std::string type_name;  // e.g. "sl(4)", "so(5)", "sp(4)", "M(4)+", ...
  long expected_dim = 0;  // from the classical dimension formula
  long actual_dim = 0;
  bool dim_match = false;
  bool dictionary_checked = false;  // a matrix model was within budget
  bool dictionary_match = false;    // every structure constant agreed
};

// Compares a built algebra against the family's classical target: the
// dimension formula always, and for model sizes <= 16 the full
// structure-constant dictionary between the algebra basis and the graded
// model basis. Mismatches are reported in the record, not thrown.
IdentifyRecord identify(const GradedAlgebra& a, const std::string& family_name);

}  // namespace skw
