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

#include "skewroot/symplectic.hpp"

#include <algorithm>

#include "skewroot/errors.hpp"

namespace skw {

namespace {

long mod_norm(long v, long n) {
  v %= n;
  if (v < 0) v += n;
  return v;
}

std::vector<std::vector<long>> normalize_matrix(const FinAbGroup& g, long n,
                                                std::vector<std::vector<long>> m,
                                                const char* what) {
  if (n < 1) throw Error(std::string(what) + ": conductor must be >= 1");
  if (static_cast<long>(m.size()) != g.k())
    throw Error(std::string(what) + ": exponent matrix must be k x k");
  for (auto& row : m) {
    if (static_cast<long>(row.size()) != g.k())
      throw Error(std::string(what) + ": exponent matrix must be k x k");
    for (long& v : row) v = mod_norm(v, n);
  }
  return m;
}

void check_well_defined(const FinAbGroup& g, long n,
                        const std::vector<std::vector<long>>& m, const char* what) {
  // z^(m_ij) must have order dividing both n_i and n_j, else the bilinear
  // extension is not a function on G.
  for (long i = 0; i < g.k(); ++i)
    for (long j = 0; j < g.k(); ++j) {
      const long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if ((v * g.orders()[static_cast<std::size_t>(i)]) % n != 0 ||
          (v * g.orders()[static_cast<std::size_t>(j)]) % n != 0)
        throw NotWellDefined(std::string(what) +
                             ": exponent incompatible with generator orders");
    }
}

long pair_exp(const std::vector<std::vector<long>>& m, long n, const GroupElem& a,
              const GroupElem& b) {
  long long acc = 0;
  const auto& ra = a.residues();
  const auto& rb = b.residues();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < rb.size(); ++j) {
      if (rb[j] == 0) continue;
      row += static_cast<long long>(m[i][j]) * rb[j];
    }
    acc += static_cast<long long>(ra[i]) * (row % n);
  }
  return static_cast<long>(((acc % n) + n) % n);
}

bool same_function(const FinAbGroup& ga, long na, const std::vector<std::vector<long>>& ma,
                   const FinAbGroup& gb, long nb, const std::vector<std::vector<long>>& mb) {
  if (ga != gb) return false;
  const long l = lcm_long(na, nb);
  const long fa = l / na, fb = l / nb;
  for (long i = 0; i < ga.k(); ++i)
    for (long j = 0; j < ga.k(); ++j)
      if (mod_norm(ma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * fa, l) !=
          mod_norm(mb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * fb, l))
        return false;
  return true;
}

}  // namespace

Bicharacter::Bicharacter(FinAbGroup g, long n, std::vector<std::vector<long>> m)
    : g_(std::move(g)), n_(n), m_(normalize_matrix(g_, n, std::move(m), "Bicharacter")) {
  check_well_defined(g_, n_, m_, "Bicharacter");
  for (long i = 0; i < g_.k(); ++i) {
    if (m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      throw NotAlternating("Bicharacter: beta(a,a) != 1 on a generator");
    for (long j = i + 1; j < g_.k(); ++j)
      if ((m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
           m_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) %
              n_ !=
          0)
        throw NotAlternating("Bicharacter: matrix is not skew-symmetric mod N");
  }
}

Bicharacter Bicharacter::trivial(FinAbGroup g, long n) {
  const std::size_t k = static_cast<std::size_t>(g.k());
  return Bicharacter(std::move(g), n, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
}

Bicharacter Bicharacter::from_lower_triangle(FinAbGroup g, long n,
                                             const std::vector<std::vector<long>>& rows) {
  const long k = g.k();
  if (static_cast<long>(rows.size()) != (k > 0 ? k - 1 : 0))
    throw ParseError("bicharacter: expected k-1 lower-triangle rows");
  std::vector<std::vector<long>> m(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 1; i < k; ++i) {
    if (static_cast<long>(rows[static_cast<std::size_t>(i - 1)].size()) != i)
      throw ParseError("bicharacter: row arity mismatch in lower triangle");
    for (long j = 0; j < i; ++j) {
      const long v = mod_norm(rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)], n);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mod_norm(-v, n);
    }
  }
  return Bicharacter(std::move(g), n, std::move(m));
}

long Bicharacter::eval_exp(const GroupElem& a, const GroupElem& b) const {
  if (a.group() != g_ || b.group() != g_)
    throw MismatchedGroups("Bicharacter::eval: element in wrong group");
  return pair_exp(m_, n_, a, b);
}

CycloNum Bicharacter::eval(const GroupElem& a, const GroupElem& b) const {
  return CycloNum::root(n_, eval_exp(a, b));
}

bool Bicharacter::eval_is_one(const GroupElem& a, const GroupElem& b) const {
  return eval_exp(a, b) == 0;
}

bool Bicharacter::eval_is_minus_one(const GroupElem& a, const GroupElem& b) const {
  return n_ % 2 == 0 && eval_exp(a, b) == n_ / 2;
}

std::vector<GroupElem> Bicharacter::radical(long long budget) const {
  std::vector<GroupElem> rad;
  for (const GroupElem& a : g_.elements(budget)) {
    bool in = true;
    for (long j = 0; j < g_.k() && in; ++j)
      if (eval_exp(a, g_.generator(j)) != 0) in = false;
    if (in) rad.push_back(a);
  }
  return rad;
}

bool Bicharacter::nonsingular(long long budget) const { return radical(budget).size() == 1; }

bool operator==(const Bicharacter& a, const Bicharacter& b) {
  return same_function(a.g_, a.n_, a.m_, b.g_, b.n_, b.m_);
}

Cocycle::Cocycle(FinAbGroup g, long n, std::vector<std::vector<long>> s)
    : g_(std::move(g)), n_(n), s_(normalize_matrix(g_, n, std::move(s), "Cocycle")) {
  check_well_defined(g_, n_, s_, "Cocycle");
}

Cocycle Cocycle::trivial(FinAbGroup g, long n) {
  const std::size_t k = static_cast<std::size_t>(g.k());
  return Cocycle(std::move(g), n, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
}

long Cocycle::eval_exp(const GroupElem& a, const GroupElem& b) const {
  if (a.group() != g_ || b.group() != g_)
    throw MismatchedGroups("Cocycle::eval: element in wrong group");
  return pair_exp(s_, n_, a, b);
}

CycloNum Cocycle::eval(const GroupElem& a, const GroupElem& b) const {
  return CycloNum::root(n_, eval_exp(a, b));
}

bool operator==(const Cocycle& a, const Cocycle& b) {
  return same_function(a.g_, a.n_, a.s_, b.g_, b.n_, b.s_);
}

Bicharacter psi(const Cocycle& xi) {
  const long k = xi.group().k();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mod_norm(xi.exp_at(i, j) - xi.exp_at(j, i), xi.n());
  return Bicharacter(xi.group(), xi.n(), std::move(m));
}

Cocycle standard_cocycle(const Bicharacter& beta) {
  const long k = beta.group().k();
  std::vector<std::vector<long>> s(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < i; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = beta.exp_at(i, j);
  return Cocycle(beta.group(), beta.n(), std::move(s));
}

namespace {

std::vector<std::vector<long>> block_sum(const FinAbGroup& ga, long na,
                                         const std::vector<std::vector<long>>& a,
                                         const FinAbGroup& gb, long nb,
                                         const std::vector<std::vector<long>>& b, long l) {
  const long ka = ga.k(), kb = gb.k();
  const long fa = l / na, fb = l / nb;
  std::vector<std::vector<long>> m(static_cast<std::size_t>(ka + kb),
                                   std::vector<long>(static_cast<std::size_t>(ka + kb), 0));
  for (long i = 0; i < ka; ++i)
    for (long j = 0; j < ka; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mod_norm(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * fa, l);
  for (long i = 0; i < kb; ++i)
    for (long j = 0; j < kb; ++j)
      m[static_cast<std::size_t>(ka + i)][static_cast<std::size_t>(ka + j)] =
          mod_norm(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * fb, l);
  return m;
}

FinAbGroup concat_groups(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<long> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  return FinAbGroup(orders);
}

}  // namespace

Bicharacter orthogonal_sum(const Bicharacter& a, const Bicharacter& b) {
  const long l = lcm_long(a.n(), b.n());
  std::vector<std::vector<long>> ma(static_cast<std::size_t>(a.group().k()));
  for (long i = 0; i < a.group().k(); ++i)
    for (long j = 0; j < a.group().k(); ++j) ma[static_cast<std::size_t>(i)].push_back(a.exp_at(i, j));
  std::vector<std::vector<long>> mb(static_cast<std::size_t>(b.group().k()));
  for (long i = 0; i < b.group().k(); ++i)
    for (long j = 0; j < b.group().k(); ++j) mb[static_cast<std::size_t>(i)].push_back(b.exp_at(i, j));
  return Bicharacter(concat_groups(a.group(), b.group()), l,
                     block_sum(a.group(), a.n(), ma, b.group(), b.n(), mb, l));
}

Cocycle cocycle_product(const Cocycle& a, const Cocycle& b) {
  const long l = lcm_long(a.n(), b.n());
  std::vector<std::vector<long>> sa(static_cast<std::size_t>(a.group().k()));
  for (long i = 0; i < a.group().k(); ++i)
    for (long j = 0; j < a.group().k(); ++j) sa[static_cast<std::size_t>(i)].push_back(a.exp_at(i, j));
  std::vector<std::vector<long>> sb(static_cast<std::size_t>(b.group().k()));
  for (long i = 0; i < b.group().k(); ++i)
    for (long j = 0; j < b.group().k(); ++j) sb[static_cast<std::size_t>(i)].push_back(b.exp_at(i, j));
  return Cocycle(concat_groups(a.group(), b.group()), l,
                 block_sum(a.group(), a.n(), sa, b.group(), b.n(), sb, l));
}

Bicharacter pull_bicharacter(const Bicharacter& beta, const GroupHom& f) {
  if (f.cod() != beta.group())
    throw MismatchedGroups("pull_bicharacter: codomain does not carry the form");
  const long k = f.dom().k();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          beta.eval_exp(f.gen_images()[static_cast<std::size_t>(i)],
                        f.gen_images()[static_cast<std::size_t>(j)]);
  return Bicharacter(f.dom(), beta.n(), std::move(m));
}

Cocycle pull_cocycle(const Cocycle& xi, const GroupHom& f) {
  if (f.cod() != xi.group())
    throw MismatchedGroups("pull_cocycle: codomain does not carry the cocycle");
  const long k = f.dom().k();
  std::vector<std::vector<long>> s(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          xi.eval_exp(f.gen_images()[static_cast<std::size_t>(i)],
                      f.gen_images()[static_cast<std::size_t>(j)]);
  return Cocycle(f.dom(), xi.n(), std::move(s));
}

Bicharacter push_bicharacter(const Bicharacter& beta, const GroupHom& p, long long budget) {
  if (p.dom() != beta.group())
    throw MismatchedGroups("push_bicharacter: domain does not carry the form");
  const auto rad = beta.radical(budget);
  const auto all = p.dom().elements(budget);
  for (const GroupElem& x : all)
    if (p.apply(x).is_zero() && !std::binary_search(rad.begin(), rad.end(), x))
      throw NotInRadical("push_bicharacter: kernel not contained in the radical");

  const FinAbGroup& q = p.cod();
  // preimage of each generator of the quotient
  std::vector<const GroupElem*> pre(static_cast<std::size_t>(q.k()), nullptr);
  for (const GroupElem& x : all) {
    const GroupElem img = p.apply(x);
    for (long i = 0; i < q.k(); ++i)
      if (!pre[static_cast<std::size_t>(i)] && img == q.generator(i))
        pre[static_cast<std::size_t>(i)] = &x;
  }
  for (long i = 0; i < q.k(); ++i)
    if (!pre[static_cast<std::size_t>(i)])
      throw Error("push_bicharacter: projection is not surjective");

  std::vector<std::vector<long>> m(static_cast<std::size_t>(q.k()),
                                   std::vector<long>(static_cast<std::size_t>(q.k()), 0));
  for (long i = 0; i < q.k(); ++i)
    for (long j = 0; j < q.k(); ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          beta.eval_exp(*pre[static_cast<std::size_t>(i)], *pre[static_cast<std::size_t>(j)]);
  return Bicharacter(q, beta.n(), std::move(m));
}

// ---------------------------------------------------------------------------
// Twisted group algebra.

TwistedGroupAlgebra::TwistedGroupAlgebra(Cocycle xi)
    : xi_(std::make_shared<const Cocycle>(std::move(xi))) {}

const Cocycle& TwistedGroupAlgebra::cocycle() const { return *xi_; }
const FinAbGroup& TwistedGroupAlgebra::group() const { return xi_->group(); }

bool operator==(const TwistedGroupAlgebra& a, const TwistedGroupAlgebra& b) {
  return *a.xi_ == *b.xi_;
}

TGAElement TwistedGroupAlgebra::basis(const GroupElem& g) const {
  if (g.group() != group()) throw MismatchedGroups("TGA::basis: element in wrong group");
  std::map<GroupElem, CycloNum> terms;
  terms.emplace(g, CycloNum::one(xi_->n()));
  return TGAElement(*this, std::move(terms));
}

TGAElement TwistedGroupAlgebra::zero() const { return TGAElement(*this, {}); }

TGAElement TwistedGroupAlgebra::one() const { return basis(group().zero()); }

TGAElement TwistedGroupAlgebra::basis_inverse(const GroupElem& g) const {
  if (g.group() != group()) throw MismatchedGroups("TGA::basis_inverse: wrong group");
  std::map<GroupElem, CycloNum> terms;
  terms.emplace(-g, CycloNum::root(xi_->n(), -xi_->eval_exp(g, -g)));
  return TGAElement(*this, std::move(terms));
}

TGAElement::TGAElement(TwistedGroupAlgebra alg, std::map<GroupElem, CycloNum> terms)
    : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

CycloNum TGAElement::coeff(const GroupElem& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CycloNum::zero(alg_.cocycle().n()) : it->second;
}

namespace {
void require_same_algebra(const TGAElement& a, const TGAElement& b) {
  if (a.algebra() != b.algebra())
    throw MismatchedAlgebras("operation on elements of different twisted group algebras");
}
}  // namespace

TGAElement operator+(const TGAElement& a, const TGAElement& b) {
  require_same_algebra(a, b);
  std::map<GroupElem, CycloNum> terms = a.terms();
  for (const auto& [g, c] : b.terms()) {
    auto it = terms.find(g);
    if (it == terms.end())
      terms.emplace(g, c);
    else
      it->second += c;
  }
  return TGAElement(a.algebra(), std::move(terms));
}

TGAElement operator-(const TGAElement& a, const TGAElement& b) {
  require_same_algebra(a, b);
  std::map<GroupElem, CycloNum> terms = a.terms();
  for (const auto& [g, c] : b.terms()) {
    auto it = terms.find(g);
    if (it == terms.end())
      terms.emplace(g, -c);
    else
      it->second -= c;
  }
  return TGAElement(a.algebra(), std::move(terms));
}

TGAElement operator*(const TGAElement& a, const TGAElement& b) {
  require_same_algebra(a, b);
  const Cocycle& xi = a.algebra().cocycle();
  std::map<GroupElem, CycloNum> terms;
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms()) {
      const GroupElem s = g + h;
      CycloNum v = cg * ch * xi.eval(g, h);
      auto it = terms.find(s);
      if (it == terms.end())
        terms.emplace(s, std::move(v));
      else
        it->second += v;
    }
  return TGAElement(a.algebra(), std::move(terms));
}

TGAElement operator*(const CycloNum& s, const TGAElement& a) {
  std::map<GroupElem, CycloNum> terms;
  for (const auto& [g, c] : a.terms()) terms.emplace(g, s * c);
  return TGAElement(a.algebra(), std::move(terms));
}

bool operator==(const TGAElement& a, const TGAElement& b) {
  require_same_algebra(a, b);
  if (a.terms().size() != b.terms().size()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

Bicharacter extract_bicharacter(
    const FinAbGroup& g, long n,
    const std::function<CycloNum(const GroupElem&, const GroupElem&)>& table,
    long long budget) {
  const auto all = g.elements(budget);
  if (static_cast<long long>(all.size()) * static_cast<long long>(all.size()) > budget)
    throw BudgetExceeded("extract_bicharacter: |G|^2 exceeds budget");

  // gamma(g,h) = 0 would mean the product of two homogeneous basis elements
  // vanishes, contradicting a division grading.
  std::vector<std::vector<CycloNum>> gamma(all.size(),
                                           std::vector<CycloNum>(all.size(), CycloNum::zero(n)));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      gamma[i][j] = table(all[i], all[j]);
      if (gamma[i][j].is_zero())
        throw NotDivision("extract_bicharacter: zero product scalar in the table");
    }

  std::map<GroupElem, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  const long k = g.k();
  std::vector<std::vector<long>> m(static_cast<std::size_t>(k),
                                   std::vector<long>(static_cast<std::size_t>(k), 0));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::size_t a = index.at(g.generator(i));
      const std::size_t b = index.at(g.generator(j));
      const auto e = root_exponent(gamma[a][b] / gamma[b][a], n);
      if (!e)
        throw NotABicharacter("extract_bicharacter: commutator scalar is not in mu_n");
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *e;
    }
  Bicharacter beta(g, n, std::move(m));  // validates alternating/well-defined

  // The candidate came from generator pairs only; confirm the commutator of
  // the full table is this bilinear function.
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (gamma[i][j] / gamma[j][i] != beta.eval(all[i], all[j]))
        throw NotABicharacter("extract_bicharacter: table commutator is not bilinear");
  return beta;
}

bool tga_associative(const TwistedGroupAlgebra& a, long long budget) {
  const auto all = a.group().elements(budget);
  const long long n = static_cast<long long>(all.size());
  if (n * n * n > budget) throw BudgetExceeded("tga_associative: |G|^3 exceeds budget");
  const long long total = n * n * n;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (long long t = 0; t < total; ++t) {
    const GroupElem& x = all[static_cast<std::size_t>(t / (n * n))];
    const GroupElem& y = all[static_cast<std::size_t>((t / n) % n)];
    const GroupElem& z = all[static_cast<std::size_t>(t % n)];
    const TGAElement ux = a.basis(x), uy = a.basis(y), uz = a.basis(z);
    ok = ok && ((ux * uy) * uz == ux * (uy * uz));
  }
  return ok;
}

namespace serial {

bool tga_associative(const TwistedGroupAlgebra& a, long long budget) {
  // Exponent-level route: xi(x,y) + xi(x+y,z) == xi(y,z) + xi(x,y+z) mod n.
  const Cocycle& xi = a.cocycle();
  const auto all = a.group().elements(budget);
  const long long n = static_cast<long long>(all.size());
  if (n * n * n > budget) throw BudgetExceeded("tga_associative: |G|^3 exceeds budget");
  for (const GroupElem& x : all)
    for (const GroupElem& y : all)
      for (const GroupElem& z : all) {
        const long lhs = (xi.eval_exp(x, y) + xi.eval_exp(x + y, z)) % xi.n();
        const long rhs = (xi.eval_exp(y, z) + xi.eval_exp(x, y + z)) % xi.n();
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace serial

}  // namespace skw
