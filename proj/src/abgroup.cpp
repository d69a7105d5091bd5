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

#include "skewroot/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "skewroot/cyclo.hpp"
#include "skewroot/errors.hpp"

namespace skw {

FinAbGroup::FinAbGroup(std::vector<long> orders) {
  std::vector<long> kept;
  for (long n : orders) {
    if (n < 1) throw Error("FinAbGroup: cyclic orders must be positive");
    if (n > 1) kept.push_back(n);
  }
  orders_ = std::make_shared<const std::vector<long>>(std::move(kept));
}

long long FinAbGroup::size() const {
  long long s = 1;
  for (long n : *orders_) s *= n;
  return s;
}

long FinAbGroup::exponent() const {
  long e = 1;
  for (long n : *orders_) e = lcm_long(e, n);
  return e;
}

GroupElem FinAbGroup::zero() const {
  return GroupElem(*this, std::vector<long>(orders_->size(), 0));
}

GroupElem FinAbGroup::elem(std::vector<long> residues) const {
  return GroupElem(*this, std::move(residues));
}

GroupElem FinAbGroup::generator(long i) const {
  if (i < 0 || i >= k()) throw Error("FinAbGroup::generator: index out of range");
  std::vector<long> r(orders_->size(), 0);
  r[static_cast<std::size_t>(i)] = 1;
  return GroupElem(*this, std::move(r));
}

std::vector<GroupElem> FinAbGroup::elements(long long budget) const {
  if (size() > budget) throw BudgetExceeded("FinAbGroup::elements: group larger than budget");
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::vector<long> cur(orders_->size(), 0);
  while (true) {
    out.push_back(GroupElem(*this, cur));
    long i = k() - 1;
    for (; i >= 0; --i) {
      if (++cur[static_cast<std::size_t>(i)] < (*orders_)[static_cast<std::size_t>(i)]) break;
      cur[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

std::string FinAbGroup::to_string() const {
  if (k() == 0) return "Z 1";
  std::ostringstream os;
  for (long i = 0; i < k(); ++i) {
    if (i) os << " x ";
    os << "Z " << (*orders_)[static_cast<std::size_t>(i)];
  }
  return os.str();
}

GroupElem::GroupElem(FinAbGroup g, std::vector<long> residues) : g_(std::move(g)), r_(std::move(residues)) {
  if (static_cast<long>(r_.size()) != g_.k())
    throw MismatchedGroups("GroupElem: arity does not match the group");
  for (std::size_t i = 0; i < r_.size(); ++i) {
    const long n = g_.orders()[i];
    r_[i] %= n;
    if (r_[i] < 0) r_[i] += n;
  }
}

bool GroupElem::is_zero() const {
  return std::all_of(r_.begin(), r_.end(), [](long v) { return v == 0; });
}

long GroupElem::order() const {
  long o = 1;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    const long n = g_.orders()[i];
    o = lcm_long(o, n / gcd_long(n, r_[i] == 0 ? n : r_[i]));
  }
  return o;
}

namespace {
void require_same_group(const GroupElem& a, const GroupElem& b) {
  if (a.group() != b.group())
    throw MismatchedGroups("group elements belong to different groups");
}
}  // namespace

GroupElem operator+(const GroupElem& a, const GroupElem& b) {
  require_same_group(a, b);
  std::vector<long> r(a.residues());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.residues()[i];
  return GroupElem(a.group(), std::move(r));
}

GroupElem operator-(const GroupElem& a, const GroupElem& b) {
  require_same_group(a, b);
  std::vector<long> r(a.residues());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.residues()[i];
  return GroupElem(a.group(), std::move(r));
}

GroupElem GroupElem::operator-() const {
  std::vector<long> r(r_);
  for (long& v : r) v = -v;
  return GroupElem(g_, std::move(r));
}

GroupElem GroupElem::scaled(long m) const {
  std::vector<long> r(r_);
  for (long& v : r) v = v * m;
  return GroupElem(g_, std::move(r));
}

bool operator==(const GroupElem& a, const GroupElem& b) {
  require_same_group(a, b);
  return a.residues() == b.residues();
}

bool operator<(const GroupElem& a, const GroupElem& b) {
  require_same_group(a, b);
  return a.residues() < b.residues();
}

std::string GroupElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (i) os << ",";
    os << r_[i];
  }
  os << ")";
  return os.str();
}

GroupHom::GroupHom(FinAbGroup dom, FinAbGroup cod, std::vector<GroupElem> gen_images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(gen_images)) {
  if (static_cast<long>(images_.size()) != dom_.k())
    throw Error("GroupHom: expected one image per generator");
  for (long i = 0; i < dom_.k(); ++i) {
    const GroupElem& img = images_[static_cast<std::size_t>(i)];
    if (img.group() != cod_) throw MismatchedGroups("GroupHom: image in wrong group");
    // Well-definedness on Z/n_i: n_i * image must vanish.
    if (!img.scaled(dom_.orders()[static_cast<std::size_t>(i)]).is_zero())
      throw NotWellDefined("GroupHom: generator image order does not divide the factor order");
  }
}

GroupElem GroupHom::apply(const GroupElem& x) const {
  if (x.group() != dom_) throw MismatchedGroups("GroupHom::apply: element not in the domain");
  GroupElem acc = cod_.zero();
  for (long i = 0; i < dom_.k(); ++i) {
    const long c = x.residues()[static_cast<std::size_t>(i)];
    if (c != 0) acc = acc + images_[static_cast<std::size_t>(i)].scaled(c);
  }
  return acc;
}

std::vector<GroupElem> subgroup_generated(const FinAbGroup& g,
                                          const std::vector<GroupElem>& gens,
                                          long long budget) {
  if (g.size() > budget)
    throw BudgetExceeded("subgroup_generated: ambient group larger than budget");
  std::set<GroupElem> seen;
  seen.insert(g.zero());
  std::vector<GroupElem> frontier = {g.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const GroupElem& x : frontier) {
      for (const GroupElem& s : gens) {
        if (s.group() != g) throw MismatchedGroups("subgroup_generated: generator in wrong group");
        GroupElem y = x + s;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool is_subgroup(const FinAbGroup& g, const std::vector<GroupElem>& h) {
  std::set<GroupElem> set;
  for (const GroupElem& x : h) {
    if (x.group() != g) throw MismatchedGroups("is_subgroup: element in wrong group");
    set.insert(x);
  }
  if (set.find(g.zero()) == set.end()) return false;
  for (const GroupElem& a : set)
    for (const GroupElem& b : set)
      if (set.find(a + b) == set.end()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form.

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat eye(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SnfResult smith_normal_form(Mat a) {
  const std::size_t nr = a.size();
  const std::size_t nc = nr ? a[0].size() : 0;
  SnfResult res;
  res.u = eye(nr);
  res.v = eye(nc);

  auto row_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t c = 0; c < nc; ++c) a[dst][c] -= q * a[src][c];
    for (std::size_t c = 0; c < nr; ++c) res.u[dst][c] -= q * res.u[src][c];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t r = 0; r < nr; ++r) a[r][dst] -= q * a[r][src];
    for (std::size_t r = 0; r < nc; ++r) res.v[r][dst] -= q * res.v[r][src];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < nr; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < nc; ++r) std::swap(res.v[r][i], res.v[r][j]);
  };
  auto row_neg = [&](std::size_t i) {
    for (std::size_t c = 0; c < nc; ++c) a[i][c] = -a[i][c];
    for (std::size_t c = 0; c < nr; ++c) res.u[i][c] = -res.u[i][c];
  };

  const std::size_t steps = std::min(nr, nc);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // pick the nonzero entry of least magnitude in the trailing block
      std::size_t pr = nr, pc = nc;
      long long best = 0;
      for (std::size_t r = t; r < nr; ++r)
        for (std::size_t c = t; c < nc; ++c) {
          const long long v = a[r][c] < 0 ? -a[r][c] : a[r][c];
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) goto done;  // trailing block is zero
      if (pr != t) row_swap(pr, t);
      if (pc != t) col_swap(pc, t);
      if (a[t][t] < 0) row_neg(t);

      bool clean = true;
      for (std::size_t r = t + 1; r < nr; ++r) {
        if (a[r][t] == 0) continue;
        row_sub(r, t, a[r][t] / a[t][t]);
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < nc; ++c) {
        if (a[t][c] == 0) continue;
        col_sub(c, t, a[t][c] / a[t][t]);
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;  // remainders left; repeat with a smaller pivot

      // enforce divisibility: a[t][t] must divide the trailing block
      bool divides = true;
      for (std::size_t r = t + 1; r < nr && divides; ++r)
        for (std::size_t c = t + 1; c < nc && divides; ++c)
          if (a[r][c] % a[t][t] != 0) {
            row_sub(t, r, -1);  // fold row r into row t, then restart
            divides = false;
          }
      if (divides) break;
    }
  }
done:
  res.d = std::move(a);
  return res;
}

std::vector<long> canonical_orders(const FinAbGroup& g) {
  const long k = g.k();
  if (k == 0) return {};
  Mat a(static_cast<std::size_t>(k), std::vector<long long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.orders()[static_cast<std::size_t>(i)];
  SnfResult snf = smith_normal_form(std::move(a));
  std::vector<long> out;
  for (long i = 0; i < k; ++i) {
    const long long d = snf.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (d > 1) out.push_back(static_cast<long>(d));
  }
  return out;
}

QuotientResult quotient(const FinAbGroup& g, const std::vector<GroupElem>& subgroup) {
  std::vector<GroupElem> h = subgroup;
  if (h.empty()) h.push_back(g.zero());
  if (!is_subgroup(g, h)) throw NotASubgroup("quotient: set is not closed");

  const long k = g.k();
  // Relation lattice: columns are the cyclic relations n_i e_i plus the
  // subgroup elements.
  const std::size_t cols = static_cast<std::size_t>(k) + h.size();
  Mat a(static_cast<std::size_t>(k), std::vector<long long>(cols, 0));
  for (long i = 0; i < k; ++i)
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.orders()[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < h.size(); ++j)
    for (long i = 0; i < k; ++i)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k) + j] =
          h[j].residues()[static_cast<std::size_t>(i)];

  SnfResult snf = smith_normal_form(std::move(a));

  // Z^k / lattice = sum of Z/d_i; x maps to (U x)_i mod d_i. Factors with
  // d_i = 1 vanish. The diag(n_i) block guarantees every d_i > 0.
  std::vector<long> dd(static_cast<std::size_t>(k));
  std::vector<long> kept;
  for (long i = 0; i < k; ++i) {
    dd[static_cast<std::size_t>(i)] =
        static_cast<long>(snf.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    if (dd[static_cast<std::size_t>(i)] > 1) kept.push_back(i);
  }
  std::vector<long> qorders;
  for (long i : kept) qorders.push_back(dd[static_cast<std::size_t>(i)]);
  FinAbGroup q(qorders);

  std::vector<GroupElem> images;
  for (long j = 0; j < k; ++j) {
    std::vector<long> res;
    for (long i : kept) {
      long long v = snf.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                    dd[static_cast<std::size_t>(i)];
      if (v < 0) v += dd[static_cast<std::size_t>(i)];
      res.push_back(static_cast<long>(v));
    }
    images.push_back(q.elem(std::move(res)));
  }
  GroupHom proj(g, q, std::move(images));

  // Sanity: the kernel of the projection is exactly the subgroup generated
  // by `h` (cheap here; ambient groups in this library are small).
  if (g.size() <= kDefaultBudget) {
    const auto span = subgroup_generated(g, h);
    long long kernel = 0;
    for (const GroupElem& x : g.elements()) {
      if (proj.apply(x).is_zero()) {
        ++kernel;
        if (!std::binary_search(span.begin(), span.end(), x))
          throw Error("quotient: kernel mismatch (internal)");
      }
    }
    if (kernel != static_cast<long long>(span.size()))
      throw Error("quotient: kernel size mismatch (internal)");
  }
  return {q, proj};
}

}  // namespace skw
