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
#include <vector>

#include "skewroot/cyclo.hpp"

namespace skw {

// Dense matrix over a fixed cyclotomic field. Every entry carries the same
// conductor `order`; set() embeds compatible entries into it.
class CycloMatrix {
 public:
  CycloMatrix() : rows_(0), cols_(0), order_(1) {}
  CycloMatrix(long rows, long cols, long order = 1);

  static CycloMatrix identity(long n, long order = 1);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long order() const { return order_; }

  const CycloNum& at(long r, long c) const;
  void set(long r, long c, const CycloNum& v);

  // Copy with all entries embedded in the field of conductor order2.
  CycloMatrix lifted(long order2) const;

  CycloMatrix transpose() const;
  CycloNum trace() const;
  CycloMatrix kron(const CycloMatrix& other) const;

  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b);

  std::vector<CycloNum> mul_vec(const std::vector<CycloNum>& v) const;

 private:
  long rows_, cols_, order_;
  std::vector<CycloNum> a_;  // row-major
};

// Exact Gaussian elimination (first-nonzero pivoting; entries form a field).
// These run the OpenMP row-update kernel; serial::* below are independent
// plain implementations kept as a reference for testing.
CycloNum mat_det(const CycloMatrix& m);
long mat_rank(const CycloMatrix& m);

// Solves m*x = rhs; nullopt when inconsistent. For underdetermined systems
// returns one solution (free variables set to zero).
std::optional<std::vector<CycloNum>> mat_solve(const CycloMatrix& m,
                                               const std::vector<CycloNum>& rhs);

// Basis of the right nullspace.
std::vector<std::vector<CycloNum>> mat_nullspace(const CycloMatrix& m);

// Inverse; nullopt when singular.
std::optional<CycloMatrix> mat_inverse(const CycloMatrix& m);

// Monic minimal polynomial of a square matrix, index i = coeff of x^i,
// computed from Krylov chains with exact dependency detection.
std::vector<CycloNum> min_poly(const CycloMatrix& m);

// p squarefree <=> gcd(p, p') is constant. Polynomials over a field of
// characteristic zero, so this is equivalent to "no repeated roots", i.e.
// for a minimal polynomial: the matrix is diagonalizable over a splitting
// field.
bool poly_squarefree(const std::vector<CycloNum>& p);
bool min_poly_squarefree(const CycloMatrix& m);

// Polynomial helpers over the cyclotomic field (trimmed coefficient
// vectors, index i = coeff of x^i). Exposed for tests and for callers that
// want to post-process min_poly output.
std::vector<CycloNum> cpoly_mul(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b);
std::pair<std::vector<CycloNum>, std::vector<CycloNum>> cpoly_divrem(std::vector<CycloNum> a,
                                                                     const std::vector<CycloNum>& b);
std::vector<CycloNum> cpoly_gcd(std::vector<CycloNum> a, std::vector<CycloNum> b);
std::vector<CycloNum> cpoly_derivative(const std::vector<CycloNum>& p);
// Evaluates p at a square matrix (Horner). Used by diagonalizability
// cross-checks: the squarefree part of the characteristic polynomial
// annihilates the matrix iff the matrix is diagonalizable.
CycloMatrix cpoly_eval_matrix(const std::vector<CycloNum>& p, const CycloMatrix& m);

// Incremental row-space rank tracker: feeds rows one at a time into a
// reduced echelon basis. Lets callers stream very tall systems (e.g. the
// centroid equations) without materializing them.
class RowReducer {
 public:
  RowReducer(long cols, long order) : cols_(cols), order_(order) {}
  // Returns true when the row was independent of the rows seen so far.
  bool add_row(std::vector<CycloNum> row);
  long rank() const { return static_cast<long>(rows_.size()); }
  long cols() const { return cols_; }

 private:
  long cols_, order_;
  std::vector<long> pivot_;                      // pivot column per stored row
  std::vector<std::vector<CycloNum>> rows_;      // pivot entry normalized to 1
};

namespace serial {
// Reference implementations: straight-line elimination, no OpenMP, written
// independently of the parallel path so the two can be compared in tests.
CycloNum mat_det(const CycloMatrix& m);
long mat_rank(const CycloMatrix& m);
}  // namespace serial

}  // namespace skw
