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

#include "skewroot/galgebra.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "skewroot/errors.hpp"

namespace skw {

namespace {

std::size_t st(long i) { return static_cast<std::size_t>(i); }

}  // namespace

GradedAlgebra::GradedAlgebra(SkewRootSystem s, Cocycle xi)
    : sys_(std::move(s)), xi_(std::move(xi)) {
  const auto& roots = sys_.roots();
  const long d = sys_.dim();
  const CycloNum half = CycloNum::rational(Rat(1, 2));
  sum_.assign(st(d), std::vector<long>(st(d), -1));
  c_.assign(st(d), std::vector<CycloNum>(st(d), CycloNum::zero()));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      const GroupElem t = roots[st(i)] + roots[st(j)];
      const auto it = std::lower_bound(roots.begin(), roots.end(), t);
      if (it != roots.end() && *it == t)
        sum_[st(i)][st(j)] = static_cast<long>(it - roots.begin());
      const CycloNum xab = xi_.eval(roots[st(i)], roots[st(j)]);
      const CycloNum xba = xi_.eval(roots[st(j)], roots[st(i)]);
      CycloNum c = sys_.kind() == Kind::Lie ? xab - xba : half * (xab + xba);
      if (!c.is_zero() && sum_[st(i)][st(j)] < 0)
        throw Error("structure constant escapes the root set at " +
                    roots[st(i)].to_string() + ", " + roots[st(j)].to_string());
      c_[st(i)][st(j)] = std::move(c);
    }
  }
}

GradedAlgebra GradedAlgebra::build(const SkewRootSystem& s, const Cocycle& xi) {
  if (xi.group() != s.group()) throw MismatchedGroups("cocycle group differs from the system's");
  if (psi(xi) != s.beta())
    throw CocycleMismatch("psi(cocycle) differs from the system's bicharacter");
  return GradedAlgebra(s, xi);
}

long GradedAlgebra::basis_index(const GroupElem& a) const {
  const auto& roots = sys_.roots();
  const auto it = std::lower_bound(roots.begin(), roots.end(), a);
  if (it == roots.end() || !(*it == a)) return -1;
  return static_cast<long>(it - roots.begin());
}

long GradedAlgebra::sum_index(long i, long j) const { return sum_[st(i)][st(j)]; }

const CycloNum& GradedAlgebra::struct_const(long i, long j) const { return c_[st(i)][st(j)]; }

CycloMatrix GradedAlgebra::mul_matrix(long i) const {
  const long d = dim();
  CycloMatrix m(d, d, xi_.n());
  for (long x = 0; x < d; ++x) {
    const long t = sum_[st(i)][st(x)];
    if (t >= 0 && !c_[st(i)][st(x)].is_zero()) m.set(t, x, c_[st(i)][st(x)]);
  }
  return m;
}

std::vector<CycloNum> GradedAlgebra::product(const std::vector<CycloNum>& x,
                                             const std::vector<CycloNum>& y) const {
  const long d = dim();
  if (static_cast<long>(x.size()) != d || static_cast<long>(y.size()) != d)
    throw MismatchedAlgebras("coordinate vector length differs from dim");
  std::vector<CycloNum> out(st(d), CycloNum::zero());
  for (long i = 0; i < d; ++i) {
    if (x[st(i)].is_zero()) continue;
    for (long j = 0; j < d; ++j) {
      if (y[st(j)].is_zero() || c_[st(i)][st(j)].is_zero()) continue;
      const long t = sum_[st(i)][st(j)];
      out[st(t)] = out[st(t)] + x[st(i)] * y[st(j)] * c_[st(i)][st(j)];
    }
  }
  return out;
}

// kappa(u_i, u_j) = sum over basis x of the (x,x) entry of ad_i ad_j. With
// monomial columns this is c(j,x) c(i, j+x) whenever x -> j+x -> i+j+x comes
// back to x; no vanishing is assumed from gradedness.
CycloMatrix killing_form(const GradedAlgebra& a) {
  if (a.kind() != Kind::Lie) throw KindMismatch("Killing form needs the Lie kind");
  const long d = a.dim();
  CycloMatrix k(d, d, a.cocycle().n());
#pragma omp parallel for schedule(dynamic, 1) if (d > 8)
  for (long p = 0; p < d * d; ++p) {
    const long i = p / d, j = p % d;
    CycloNum acc = CycloNum::zero();
    for (long x = 0; x < d; ++x) {
      const long t = a.sum_index(j, x);
      if (t < 0 || a.struct_const(j, x).is_zero()) continue;
      if (a.sum_index(i, t) != x) continue;
      acc = acc + a.struct_const(j, x) * a.struct_const(i, t);
    }
    if (!acc.is_zero())
#pragma omp critical(skw_killing_set)
      k.set(i, j, acc);
  }
  return k;
}

CycloNum killing_pairing_closed(const GradedAlgebra& a, long i) {
  if (a.kind() != Kind::Lie) throw KindMismatch("Killing form needs the Lie kind");
  const GroupElem& g = a.basis()[st(i)];
  const Bicharacter& beta = a.system().beta();
  const CycloNum two = CycloNum::integer(2);
  CycloNum acc = CycloNum::zero();
  for (const GroupElem& b : a.basis())
    acc = acc + (two - beta.eval(g, b) - beta.eval(b, g));
  return a.cocycle().eval(g, -g) * acc;
}

CycloMatrix trace_form(const GradedAlgebra& a) {
  if (a.kind() != Kind::Jordan) throw KindMismatch("trace form needs the Jordan kind");
  const long d = a.dim();
  // tr L(u_k) first: diagonal entries of the monomial matrix.
  std::vector<CycloNum> trl(st(d), CycloNum::zero());
  for (long k = 0; k < d; ++k) {
    CycloNum acc = CycloNum::zero();
    for (long x = 0; x < d; ++x)
      if (a.sum_index(k, x) == x) acc = acc + a.struct_const(k, x);
    trl[st(k)] = acc;
  }
  CycloMatrix t(d, d, a.cocycle().n());
#pragma omp parallel for schedule(dynamic, 1) if (d > 8)
  for (long p = 0; p < d * d; ++p) {
    const long i = p / d, j = p % d;
    const long s = a.sum_index(i, j);
    if (s < 0 || a.struct_const(i, j).is_zero()) continue;
    const CycloNum v = a.struct_const(i, j) * trl[st(s)];
    if (!v.is_zero())
#pragma omp critical(skw_trace_set)
      t.set(i, j, v);
  }
  return t;
}

CycloNum trace_pairing_closed(const GradedAlgebra& a, long i) {
  if (a.kind() != Kind::Jordan) throw KindMismatch("trace form needs the Jordan kind");
  const GroupElem& g = a.basis()[st(i)];
  return a.cocycle().eval(-g, g) * CycloNum::integer(a.dim());
}

long centroid_dim(const GradedAlgebra& a) {
  const CycloMatrix k = killing_form(a);
  if (mat_det(k).is_zero())
    throw NotSemisimple("Killing form is degenerate; centroid does not count summands");
  const long d = a.dim();
  RowReducer red(d * d, a.cocycle().n());
  std::vector<CycloNum> row(st(d * d), CycloNum::zero());
  for (long i = 0; i < d; ++i) {
    // (ad_i phi - phi ad_i)_{p,q} = 0. Term one pulls the unique x with
    // i + x = p, term two the image of q under ad_i.
    for (long p = 0; p < d; ++p) {
      const long k1 = a.basis_index(a.basis()[st(p)] - a.basis()[st(i)]);
      const bool has1 = k1 >= 0 && !a.struct_const(i, k1).is_zero();
      for (long q = 0; q < d; ++q) {
        const long k2 = a.sum_index(i, q);
        const bool has2 = k2 >= 0 && !a.struct_const(i, q).is_zero();
        if (!has1 && !has2) continue;
        if (has1) row[st(k1 * d + q)] = a.struct_const(i, k1);
        if (has2) row[st(p * d + k2)] = row[st(p * d + k2)] - a.struct_const(i, q);
        red.add_row(row);
        if (has1) row[st(k1 * d + q)] = CycloNum::zero();
        if (has2) row[st(p * d + k2)] = CycloNum::zero();
      }
    }
  }
  return d * d - red.rank();
}

bool graded_simple(const GradedAlgebra& a) {
  const long d = a.dim();
  for (long start = 0; start < d; ++start) {
    std::vector<char> seen(st(d), 0);
    std::vector<long> stack{start};
    seen[st(start)] = 1;
    long count = 1;
    while (!stack.empty()) {
      const long b = stack.back();
      stack.pop_back();
      for (long ap = 0; ap < d; ++ap) {
        if (a.struct_const(ap, b).is_zero()) continue;
        const long t = a.sum_index(ap, b);
        if (!seen[st(t)]) {
          seen[st(t)] = 1;
          ++count;
          stack.push_back(t);
        }
      }
    }
    if (count != d) return false;
  }
  return true;
}

bool homogeneous_semisimple(const GradedAlgebra& a) {
  const long d = a.dim();
  if (a.kind() == Kind::Lie) {
    for (long i = 0; i < d; ++i)
      if (!min_poly_squarefree(a.mul_matrix(i))) return false;
    return true;
  }
  const long zero_idx = a.basis_index(a.system().group().zero());
  if (zero_idx < 0) return false;
  const CycloNum one = CycloNum::one();
  for (long i = 0; i < d; ++i) {
    const GroupElem& g = a.basis()[st(i)];
    const long j = a.basis_index(-g);
    if (j < 0 || a.sum_index(i, j) != zero_idx) return false;
    if (!(a.cocycle().eval(g, g) * a.struct_const(i, j) == one)) return false;
  }
  return true;
}

// Coefficientwise Jacobi: all three cyclic terms land on u_{i+j+k}, so
// their scalar sum must vanish for every basis triple.
bool jacobi_holds(const GradedAlgebra& a) {
  if (a.kind() != Kind::Lie) throw KindMismatch("Jacobi sweep needs the Lie kind");
  const long d = a.dim();
  const long long total = static_cast<long long>(d) * d * d;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : ok)
  for (long long f = 0; f < total; ++f) {
    if (!ok) continue;
    const long i = static_cast<long>(f / (d * d));
    const long j = static_cast<long>((f / d) % d);
    const long k = static_cast<long>(f % d);
    const auto term = [&a](long x, long y, long z) {
      const long t = a.sum_index(x, y);
      if (t < 0 || a.struct_const(x, y).is_zero()) return CycloNum::zero();
      return a.struct_const(x, y) * a.struct_const(t, z);
    };
    const CycloNum s = term(i, j, k) + term(j, k, i) + term(k, i, j);
    if (!s.is_zero()) ok = false;
  }
  return ok;
}

// Linearized Jordan identity sweep: (x^2 o y) o x = x^2 o (y o x) for x a
// one- or two-term sum of basis vectors and y a basis vector, which covers
// the degree-4 multilinearization over basis quadruples.
bool jordan_identity_holds(const GradedAlgebra& a) {
  if (a.kind() != Kind::Jordan) throw KindMismatch("Jordan identity sweep needs the Jordan kind");
  const long d = a.dim();
  const long long pairs = static_cast<long long>(d) * d;
  bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
  for (long long f = 0; f < pairs * d; ++f) {
    if (!ok) continue;
    const long i = static_cast<long>(f / (d * d));
    const long j = static_cast<long>((f / d) % d);
    const long y = static_cast<long>(f % d);
    if (j < i) continue;  // unordered pair; i == j gives the one-term case
    std::vector<CycloNum> xv(st(d), CycloNum::zero());
    std::vector<CycloNum> yv(st(d), CycloNum::zero());
    xv[st(i)] = xv[st(i)] + CycloNum::one();
    xv[st(j)] = xv[st(j)] + CycloNum::one();
    yv[st(y)] = CycloNum::one();
    const auto x2 = a.product(xv, xv);
    const auto lhs = a.product(a.product(x2, yv), xv);
    const auto rhs = a.product(x2, a.product(yv, xv));
    for (long t = 0; t < d && ok; ++t)
      if (!(lhs[st(t)] == rhs[st(t)])) ok = false;
  }
  return ok;
}

ReductionHomReport check_reduction_hom(const GradedAlgebra& a, const GradedAlgebra& abar,
                                       const GroupHom& p) {
  if (a.kind() != abar.kind()) throw KindMismatch("reduction between different kinds");
  const FinAbGroup& g = a.system().group();
  if (p.dom() != g || p.cod() != abar.system().group())
    throw MismatchedGroups("projection endpoints differ from the algebras' groups");
  // Pull-back identity xi(g,h) = xibar(p g, p h); both sides are bilinear,
  // so generator pairs decide it.
  for (long i = 0; i < g.k(); ++i)
    for (long j = 0; j < g.k(); ++j) {
      const GroupElem ei = g.generator(i), ej = g.generator(j);
      if (!(a.cocycle().eval(ei, ej) == abar.cocycle().eval(p.apply(ei), p.apply(ej))))
        throw NotPulledBack("cocycle is not the pull-back along the projection");
    }
  ReductionHomReport rep;
  const long d = a.dim();
  rep.image_index.resize(st(d));
  std::set<long> hit;
  for (long i = 0; i < d; ++i) {
    const long idx = abar.basis_index(p.apply(a.basis()[st(i)]));
    if (idx < 0) throw MismatchedAlgebras("image of a root is not a root downstairs");
    rep.image_index[st(i)] = idx;
    hit.insert(idx);
  }
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      if (!(a.struct_const(i, j) ==
            abar.struct_const(rep.image_index[st(i)], rep.image_index[st(j)])))
        throw MismatchedAlgebras("structure constant does not transfer");
  rep.surjective = static_cast<long>(hit.size()) == abar.dim();
  rep.bijective = rep.surjective && d == abar.dim();
  rep.fiber_excess = d - static_cast<long>(hit.size());
  return rep;
}

void export_structure(const GradedAlgebra& a, std::ostream& os) {
  const long d = a.dim();
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const CycloNum& c = a.struct_const(i, j);
      if (c.is_zero()) continue;
      os << a.basis()[st(i)].to_string() << ' ' << a.basis()[st(j)].to_string() << ' '
         << a.basis()[st(a.sum_index(i, j))].to_string() << ' ' << c.to_string() << '\n';
    }
}

namespace {

struct RescaleSearch {
  const GradedAlgebra& a;
  const GradedAlgebra& b;
  long d;
  long m;  // scale factors searched in mu_m
  std::vector<CycloNum> roots_of_unity;
  std::vector<int> assigned;
  std::vector<CycloNum> lam;
  long long nodes = 0;
  long long budget;

  // lambda_{i+j} * c_a(i,j) = lambda_i lambda_j c_b(i,j); propagate forward
  // from assigned pairs, report contradiction as false.
  bool propagate(std::vector<long>& touched) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (long i = 0; i < d; ++i) {
        if (!assigned[st(i)]) continue;
        for (long j = 0; j < d; ++j) {
          if (!assigned[st(j)]) continue;
          const CycloNum& ca = a.struct_const(i, j);
          if (ca.is_zero()) continue;
          const long t = a.sum_index(i, j);
          const CycloNum want = lam[st(i)] * lam[st(j)] * b.struct_const(i, j) * ca.inv();
          if (assigned[st(t)]) {
            if (!(lam[st(t)] == want)) return false;
          } else {
            lam[st(t)] = want;
            assigned[st(t)] = 1;
            touched.push_back(t);
            progress = true;
          }
        }
      }
    }
    return true;
  }

  bool dfs() {
    if (++nodes > budget) throw BudgetExceeded("rescaling search budget exhausted");
    long next = -1;
    for (long i = 0; i < d; ++i)
      if (!assigned[st(i)]) {
        next = i;
        break;
      }
    if (next < 0) return true;
    for (long t = 0; t < m; ++t) {
      lam[st(next)] = roots_of_unity[st(t)];
      assigned[st(next)] = 1;
      std::vector<long> touched{next};
      if (propagate(touched) && dfs()) return true;
      for (long u : touched) assigned[st(u)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<CycloNum>> rescaling_isomorphism(const GradedAlgebra& a,
                                                           const GradedAlgebra& b,
                                                           long long budget) {
  if (a.kind() != b.kind()) throw KindMismatch("rescaling between different kinds");
  if (a.basis() != b.basis()) throw MismatchedAlgebras("rescaling needs identical root sets");
  if (a.system().beta() != b.system().beta())
    throw CocycleMismatch("rescaling needs cocycles over the same bicharacter");
  const long m = 2 * lcm_long(a.cocycle().n(), b.cocycle().n());
  RescaleSearch s{a, b, a.dim(), m, {}, {}, {}, 0, budget};
  s.roots_of_unity.reserve(st(m));
  for (long t = 0; t < m; ++t) s.roots_of_unity.push_back(CycloNum::root(m, t));
  s.assigned.assign(st(s.d), 0);
  s.lam.assign(st(s.d), CycloNum::one());
  if (s.dfs()) return s.lam;
  return std::nullopt;
}

namespace serial {

CycloMatrix killing_form(const GradedAlgebra& a) {
  if (a.kind() != Kind::Lie) throw KindMismatch("Killing form needs the Lie kind");
  const long d = a.dim();
  std::vector<CycloMatrix> ad;
  ad.reserve(st(d));
  for (long i = 0; i < d; ++i) ad.push_back(a.mul_matrix(i));
  CycloMatrix k(d, d, a.cocycle().n());
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      CycloNum acc = CycloNum::zero();
      for (long r = 0; r < d; ++r)
        for (long c = 0; c < d; ++c) acc = acc + ad[st(i)].at(r, c) * ad[st(j)].at(c, r);
      if (!acc.is_zero()) k.set(i, j, acc);
    }
  return k;
}

CycloMatrix trace_form(const GradedAlgebra& a) {
  if (a.kind() != Kind::Jordan) throw KindMismatch("trace form needs the Jordan kind");
  const long d = a.dim();
  CycloMatrix t(d, d, a.cocycle().n());
  std::vector<std::vector<CycloNum>> unit(st(d));
  for (long i = 0; i < d; ++i) {
    unit[st(i)].assign(st(d), CycloNum::zero());
    unit[st(i)][st(i)] = CycloNum::one();
  }
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const auto w = a.product(unit[st(i)], unit[st(j)]);
      CycloNum acc = CycloNum::zero();
      for (long x = 0; x < d; ++x) {
        const auto col = a.product(w, unit[st(x)]);
        acc = acc + col[st(x)];
      }
      if (!acc.is_zero()) t.set(i, j, acc);
    }
  return t;
}

bool jacobi_holds(const GradedAlgebra& a) {
  if (a.kind() != Kind::Lie) throw KindMismatch("Jacobi sweep needs the Lie kind");
  const long d = a.dim();
  std::vector<std::vector<CycloNum>> unit(st(d));
  for (long i = 0; i < d; ++i) {
    unit[st(i)].assign(st(d), CycloNum::zero());
    unit[st(i)][st(i)] = CycloNum::one();
  }
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k) {
        const auto t1 = a.product(a.product(unit[st(i)], unit[st(j)]), unit[st(k)]);
        const auto t2 = a.product(a.product(unit[st(j)], unit[st(k)]), unit[st(i)]);
        const auto t3 = a.product(a.product(unit[st(k)], unit[st(i)]), unit[st(j)]);
        for (long x = 0; x < d; ++x)
          if (!(t1[st(x)] + t2[st(x)] + t3[st(x)]).is_zero()) return false;
      }
  return true;
}

// Symbolic expansion through a coefficient map keyed by basis index;
// written apart from GradedAlgebra::product so the two routes stay
// independent.
bool jordan_identity_holds(const GradedAlgebra& a) {
  if (a.kind() != Kind::Jordan) throw KindMismatch("Jordan identity sweep needs the Jordan kind");
  const long d = a.dim();
  using Term = std::map<long, CycloNum>;  // basis index -> coefficient
  const auto mul = [&a](const Term& x, const Term& y) {
    Term out;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y) {
        if (a.struct_const(i, j).is_zero()) continue;
        const long t = a.sum_index(i, j);
        const CycloNum v = ci * cj * a.struct_const(i, j);
        auto it = out.find(t);
        if (it == out.end())
          out.emplace(t, v);
        else
          it->second = it->second + v;
      }
    return out;
  };
  const auto equal = [](const Term& x, const Term& y) {
    for (const auto& [i, c] : x) {
      const auto it = y.find(i);
      if (it == y.end()) {
        if (!c.is_zero()) return false;
      } else if (!(c == it->second)) {
        return false;
      }
    }
    for (const auto& [i, c] : y)
      if (x.find(i) == x.end() && !c.is_zero()) return false;
    return true;
  };
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j)
      for (long y = 0; y < d; ++y) {
        Term xv;
        xv.emplace(i, CycloNum::one());
        {
          auto it = xv.find(j);
          if (it == xv.end())
            xv.emplace(j, CycloNum::one());
          else
            it->second = it->second + CycloNum::one();
        }
        Term yv;
        yv.emplace(y, CycloNum::one());
        const Term x2 = mul(xv, xv);
        if (!equal(mul(mul(x2, yv), xv), mul(x2, mul(yv, xv)))) return false;
      }
  return true;
}

}  // namespace serial

}  // namespace skw
