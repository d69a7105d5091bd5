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

#include "skewroot/linalg.hpp"

#include <algorithm>
#include <utility>

#include "skewroot/errors.hpp"

namespace skw {

CycloMatrix::CycloMatrix(long rows, long cols, long order)
    : rows_(rows), cols_(cols), order_(order) {
  if (rows < 0 || cols < 0) throw Error("CycloMatrix: negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            CycloNum::zero(order));
}

CycloMatrix CycloMatrix::identity(long n, long order) {
  CycloMatrix m(n, n, order);
  for (long i = 0; i < n; ++i) m.set(i, i, CycloNum::one(order));
  return m;
}

const CycloNum& CycloMatrix::at(long r, long c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("CycloMatrix::at: out of range");
  return a_[static_cast<std::size_t>(r) * cols_ + c];
}

void CycloMatrix::set(long r, long c, const CycloNum& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("CycloMatrix::set: out of range");
  a_[static_cast<std::size_t>(r) * cols_ + c] =
      v.order() == order_ ? v : v.embedded(order_);
}

CycloMatrix CycloMatrix::lifted(long order2) const {
  CycloMatrix m(rows_, cols_, order2);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m.set(r, c, at(r, c).embedded(order2));
  return m;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix m(cols_, rows_, order_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

CycloNum CycloMatrix::trace() const {
  if (rows_ != cols_) throw Error("trace: matrix not square");
  CycloNum t = CycloNum::zero(order_);
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& other) const {
  const long order = lcm_long(order_, other.order_);
  CycloMatrix m(rows_ * other.rows_, cols_ * other.cols_, order);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero()) continue;
      for (long r2 = 0; r2 < other.rows_; ++r2)
        for (long c2 = 0; c2 < other.cols_; ++c2)
          m.set(r * other.rows_ + r2, c * other.cols_ + c2, at(r, c) * other.at(r2, c2));
    }
  return m;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix add: shape mismatch");
  CycloMatrix m(a.rows_, a.cols_, lcm_long(a.order_, b.order_));
  for (long r = 0; r < a.rows_; ++r)
    for (long c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c) + b.at(r, c));
  return m;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sub: shape mismatch");
  CycloMatrix m(a.rows_, a.cols_, lcm_long(a.order_, b.order_));
  for (long r = 0; r < a.rows_; ++r)
    for (long c = 0; c < a.cols_; ++c) m.set(r, c, a.at(r, c) - b.at(r, c));
  return m;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix mul: shape mismatch");
  const long order = lcm_long(a.order_, b.order_);
  CycloMatrix m(a.rows_, b.cols_, order);
  for (long r = 0; r < a.rows_; ++r)
    for (long k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (long c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        m.set(r, c, m.at(r, c) + x * b.at(k, c));
      }
    }
  return m;
}

CycloMatrix operator*(const CycloNum& s, const CycloMatrix& a) {
  CycloMatrix m(a.rows_, a.cols_, lcm_long(s.order(), a.order_));
  for (long r = 0; r < a.rows_; ++r)
    for (long c = 0; c < a.cols_; ++c) m.set(r, c, s * a.at(r, c));
  return m;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (long r = 0; r < a.rows_; ++r)
    for (long c = 0; c < a.cols_; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

std::vector<CycloNum> CycloMatrix::mul_vec(const std::vector<CycloNum>& v) const {
  if (static_cast<long>(v.size()) != cols_) throw Error("mul_vec: size mismatch");
  std::vector<CycloNum> out(static_cast<std::size_t>(rows_), CycloNum::zero(order_));
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[static_cast<std::size_t>(c)].is_zero()) continue;
      out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
    }
  return out;
}

namespace {

using Row = std::vector<CycloNum>;

std::vector<Row> to_rows(const CycloMatrix& m) {
  std::vector<Row> rows(static_cast<std::size_t>(m.rows()));
  for (long r = 0; r < m.rows(); ++r) {
    rows[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(m.cols()));
    for (long c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m.at(r, c));
  }
  return rows;
}

// In-place Gauss-Jordan to reduced row echelon form. Pivot rows are
// normalized to 1; when det_out is nonnull it receives the determinant
// contribution (product of pivots, sign-adjusted for swaps). The update
// sweep over non-pivot rows is the OpenMP kernel.
std::vector<std::pair<long, long>> rref(std::vector<Row>& m, long order, CycloNum* det_out) {
  const long nr = static_cast<long>(m.size());
  const long nc = nr > 0 ? static_cast<long>(m[0].size()) : 0;
  CycloNum det = CycloNum::one(order);
  bool negate = false;
  std::vector<std::pair<long, long>> pivots;
  long pr = 0;
  for (long pc = 0; pc < nc && pr < nr; ++pc) {
    long sel = -1;
    for (long r = pr; r < nr; ++r)
      if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pr) {
      std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(pr)]);
      negate = !negate;
    }
    Row& prow = m[static_cast<std::size_t>(pr)];
    if (det_out) det *= prow[static_cast<std::size_t>(pc)];
    const CycloNum inv = prow[static_cast<std::size_t>(pc)].inv();
    for (long c = pc; c < nc; ++c)
      if (!prow[static_cast<std::size_t>(c)].is_zero())
        prow[static_cast<std::size_t>(c)] *= inv;

#pragma omp parallel for schedule(dynamic, 4) if (nr > 16)
    for (long r = 0; r < nr; ++r) {
      if (r == pr) continue;
      Row& row = m[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(pc)].is_zero()) continue;
      const CycloNum f = row[static_cast<std::size_t>(pc)];
      row[static_cast<std::size_t>(pc)] = CycloNum::zero(order);
      for (long c = pc + 1; c < nc; ++c)
        if (!prow[static_cast<std::size_t>(c)].is_zero())
          row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    pivots.emplace_back(pr, pc);
    ++pr;
  }
  if (det_out) {
    if (pr < std::min(nr, nc) || nr != nc) det = CycloNum::zero(order);
    *det_out = negate ? -det : det;
  }
  return pivots;
}

}  // namespace

CycloNum mat_det(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw Error("mat_det: matrix not square");
  if (m.rows() == 0) return CycloNum::one(m.order());
  auto rows = to_rows(m);
  CycloNum det = CycloNum::zero(m.order());
  rref(rows, m.order(), &det);
  return det;
}

long mat_rank(const CycloMatrix& m) {
  auto rows = to_rows(m);
  return static_cast<long>(rref(rows, m.order(), nullptr).size());
}

std::optional<std::vector<CycloNum>> mat_solve(const CycloMatrix& m,
                                               const std::vector<CycloNum>& rhs) {
  if (static_cast<long>(rhs.size()) != m.rows()) throw Error("mat_solve: rhs size mismatch");
  // Single conductor throughout: lift matrix and rhs to the lcm.
  long order = m.order();
  for (const auto& v : rhs) order = lcm_long(order, v.order());
  auto rows = to_rows(order == m.order() ? m : m.lifted(order));
  for (long r = 0; r < m.rows(); ++r)
    rows[static_cast<std::size_t>(r)].push_back(rhs[static_cast<std::size_t>(r)].embedded(order));
  auto pivots = rref(rows, order, nullptr);
  const long nc = m.cols();
  for (const auto& [pr, pc] : pivots)
    if (pc == nc) return std::nullopt;  // pivot in the augmented column
  std::vector<CycloNum> x(static_cast<std::size_t>(nc), CycloNum::zero(order));
  for (const auto& [pr, pc] : pivots)
    x[static_cast<std::size_t>(pc)] = rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(nc)];
  return x;
}

std::vector<std::vector<CycloNum>> mat_nullspace(const CycloMatrix& m) {
  auto rows = to_rows(m);
  auto pivots = rref(rows, m.order(), nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (const auto& [pr, pc] : pivots) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<std::vector<CycloNum>> basis;
  for (long fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    std::vector<CycloNum> v(static_cast<std::size_t>(m.cols()), CycloNum::zero(m.order()));
    v[static_cast<std::size_t>(fc)] = CycloNum::one(m.order());
    for (const auto& [pr, pc] : pivots)
      v[static_cast<std::size_t>(pc)] = -rows[static_cast<std::size_t>(pr)][static_cast<std::size_t>(fc)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycloMatrix> mat_inverse(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw Error("mat_inverse: matrix not square");
  const long n = m.rows();
  auto rows = to_rows(m);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c)
      rows[static_cast<std::size_t>(r)].push_back(r == c ? CycloNum::one(m.order())
                                                         : CycloNum::zero(m.order()));
  }
  auto pivots = rref(rows, m.order(), nullptr);
  long rank_left = 0;
  for (const auto& [pr, pc] : pivots)
    if (pc < n) ++rank_left;
  if (rank_left < n) return std::nullopt;
  CycloMatrix inv(n, n, m.order());
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) inv.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)]);
  return inv;
}

// ---------------------------------------------------------------------------
// Polynomials over the cyclotomic field.

namespace {

void cpoly_trim(std::vector<CycloNum>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int cpoly_deg(const std::vector<CycloNum>& p) { return static_cast<int>(p.size()) - 1; }

std::vector<CycloNum> cpoly_monic(std::vector<CycloNum> p) {
  cpoly_trim(p);
  if (p.empty()) return p;
  const CycloNum inv = p.back().inv();
  for (auto& c : p) c *= inv;
  return p;
}

}  // namespace

std::vector<CycloNum> cpoly_mul(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
  if (a.empty() || b.empty()) return {};
  const long order = lcm_long(a[0].order(), b[0].order());
  std::vector<CycloNum> c(a.size() + b.size() - 1, CycloNum::zero(order));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  cpoly_trim(c);
  return c;
}

std::pair<std::vector<CycloNum>, std::vector<CycloNum>> cpoly_divrem(
    std::vector<CycloNum> a, const std::vector<CycloNum>& b) {
  std::vector<CycloNum> bb = b;
  cpoly_trim(bb);
  if (bb.empty()) throw DivisionByZero("cpoly_divrem: division by zero polynomial");
  cpoly_trim(a);
  const int db = cpoly_deg(bb);
  const CycloNum lead_inv = bb.back().inv();
  std::vector<CycloNum> q;
  if (cpoly_deg(a) >= db)
    q.assign(static_cast<std::size_t>(cpoly_deg(a) - db + 1), CycloNum::zero(bb.back().order()));
  while (cpoly_deg(a) >= db) {
    const int shift = cpoly_deg(a) - db;
    const CycloNum f = a.back() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(shift + i)] -= f * bb[static_cast<std::size_t>(i)];
    cpoly_trim(a);
  }
  return {std::move(q), std::move(a)};
}

std::vector<CycloNum> cpoly_gcd(std::vector<CycloNum> a, std::vector<CycloNum> b) {
  cpoly_trim(a);
  cpoly_trim(b);
  while (!b.empty()) {
    auto qr = cpoly_divrem(std::move(a), b);
    a = std::move(b);
    b = std::move(qr.second);
  }
  return cpoly_monic(std::move(a));
}

std::vector<CycloNum> cpoly_derivative(const std::vector<CycloNum>& p) {
  std::vector<CycloNum> d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(CycloNum::integer(static_cast<long>(i), p[i].order()) * p[i]);
  cpoly_trim(d);
  return d;
}

CycloMatrix cpoly_eval_matrix(const std::vector<CycloNum>& p, const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw Error("cpoly_eval_matrix: matrix not square");
  CycloMatrix acc(m.rows(), m.rows(), m.order());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    if (!p[i].is_zero()) {
      for (long d = 0; d < m.rows(); ++d) acc.set(d, d, acc.at(d, d) + p[i]);
    }
  }
  return acc;
}

std::vector<CycloNum> min_poly(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw Error("min_poly: matrix not square");
  const long n = m.rows();
  const long order = m.order();
  std::vector<CycloNum> p = {CycloNum::one(order)};
  if (n == 0) return p;

  for (long start = 0; start < n && cpoly_deg(p) < n; ++start) {
    // Krylov chain from e_start with combination tracking: each stored row
    // is a reduced vector together with the polynomial expressing it in
    // powers of m applied to e_start.
    std::vector<Row> basis;
    std::vector<long> piv;
    std::vector<std::vector<CycloNum>> combs;

    Row w(static_cast<std::size_t>(n), CycloNum::zero(order));
    w[static_cast<std::size_t>(start)] = CycloNum::one(order);
    std::vector<CycloNum> local;
    for (long k = 0;; ++k) {
      Row r = w;
      std::vector<CycloNum> c(static_cast<std::size_t>(k) + 1, CycloNum::zero(order));
      c[static_cast<std::size_t>(k)] = CycloNum::one(order);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const CycloNum& f = r[static_cast<std::size_t>(piv[j])];
        if (f.is_zero()) continue;
        const CycloNum fc = f;
        for (long t = 0; t < n; ++t)
          if (!basis[j][static_cast<std::size_t>(t)].is_zero())
            r[static_cast<std::size_t>(t)] -= fc * basis[j][static_cast<std::size_t>(t)];
        for (std::size_t t = 0; t < combs[j].size(); ++t)
          if (!combs[j][t].is_zero()) c[t] -= fc * combs[j][t];
      }
      long pivot = -1;
      for (long t = 0; t < n; ++t)
        if (!r[static_cast<std::size_t>(t)].is_zero()) {
          pivot = t;
          break;
        }
      if (pivot < 0) {
        local = std::move(c);  // monic annihilator of e_start, degree k
        break;
      }
      const CycloNum inv = r[static_cast<std::size_t>(pivot)].inv();
      for (long t = 0; t < n; ++t)
        if (!r[static_cast<std::size_t>(t)].is_zero()) r[static_cast<std::size_t>(t)] *= inv;
      for (auto& x : c) x *= inv;
      basis.push_back(std::move(r));
      piv.push_back(pivot);
      combs.push_back(std::move(c));
      w = m.mul_vec(w);
    }
    // p = lcm(p, local)
    auto g = cpoly_gcd(p, local);
    auto qr = cpoly_divrem(cpoly_mul(p, local), g);
    p = cpoly_monic(std::move(qr.first));
  }
  return p;
}

bool poly_squarefree(const std::vector<CycloNum>& p) {
  std::vector<CycloNum> q = p;
  cpoly_trim(q);
  if (q.empty()) return false;
  if (cpoly_deg(q) == 0) return true;
  auto g = cpoly_gcd(q, cpoly_derivative(q));
  return cpoly_deg(g) == 0;
}

bool min_poly_squarefree(const CycloMatrix& m) { return poly_squarefree(min_poly(m)); }

bool RowReducer::add_row(std::vector<CycloNum> row) {
  if (static_cast<long>(row.size()) != cols_) throw Error("RowReducer: row size mismatch");
  // rows_ kept sorted by pivot; each stored row starts at its pivot.
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const CycloNum f = row[static_cast<std::size_t>(pivot_[j])];
    if (f.is_zero()) continue;
    for (long t = pivot_[j]; t < cols_; ++t)
      if (!rows_[j][static_cast<std::size_t>(t)].is_zero())
        row[static_cast<std::size_t>(t)] -= f * rows_[j][static_cast<std::size_t>(t)];
  }
  long pivot = -1;
  for (long t = 0; t < cols_; ++t)
    if (!row[static_cast<std::size_t>(t)].is_zero()) {
      pivot = t;
      break;
    }
  if (pivot < 0) return false;
  const CycloNum inv = row[static_cast<std::size_t>(pivot)].inv();
  for (long t = pivot; t < cols_; ++t)
    if (!row[static_cast<std::size_t>(t)].is_zero()) row[static_cast<std::size_t>(t)] *= inv;
  const auto pos = std::upper_bound(pivot_.begin(), pivot_.end(), pivot) - pivot_.begin();
  pivot_.insert(pivot_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return true;
}

namespace serial {

// Plain textbook elimination, deliberately kept independent of the parallel
// path above (no pivot normalization, no OpenMP).
CycloNum mat_det(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw Error("serial::mat_det: matrix not square");
  const long n = m.rows();
  if (n == 0) return CycloNum::one(m.order());
  auto rows = to_rows(m);
  bool negate = false;
  for (long p = 0; p < n; ++p) {
    long sel = -1;
    for (long r = p; r < n; ++r)
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) return CycloNum::zero(m.order());
    if (sel != p) {
      std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(p)]);
      negate = !negate;
    }
    for (long r = p + 1; r < n; ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)].is_zero()) continue;
      const CycloNum f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)] /
                         rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
      for (long c = p; c < n; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)];
    }
  }
  CycloNum det = CycloNum::one(m.order());
  for (long p = 0; p < n; ++p) det *= rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
  return negate ? -det : det;
}

long mat_rank(const CycloMatrix& m) {
  auto rows = to_rows(m);
  const long nr = m.rows(), nc = m.cols();
  long rank = 0;
  for (long pc = 0; pc < nc && rank < nr; ++pc) {
    long sel = -1;
    for (long r = rank; r < nr; ++r)
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(rank)]);
    for (long r = rank + 1; r < nr; ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)].is_zero()) continue;
      const CycloNum f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)] /
                         rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(pc)];
      for (long c = pc; c < nc; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace serial

}  // namespace skw
