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

#include "skewroot/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "skewroot/errors.hpp"

namespace skw {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  if (n < 1) throw Error("euler_phi: argument must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Dense univariate polynomial over the rationals, p[i] = coeff of x^i.
// Kept trimmed (no leading zeros) between operations.
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  poly_trim(c);
  return c;
}

// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
std::pair<Poly, Poly> poly_divrem(Poly a, const Poly& b) {
  poly_trim(a);
  const int db = poly_deg(b);
  const Rat& lead = b[db];
  Poly q;
  if (poly_deg(a) >= db) q.assign(poly_deg(a) - db + 1, Rat(0));
  while (poly_deg(a) >= db) {
    const int shift = poly_deg(a) - db;
    Rat f = a.back() / lead;
    q[shift] = f;
    for (int i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
  }
  return {std::move(q), std::move(a)};
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Pads a remainder (deg < phi) out to exactly phi coordinates.
std::vector<Rat> pad_to(Poly p, long phi) {
  p.resize(static_cast<std::size_t>(phi), Rat(0));
  return p;
}

}  // namespace

const std::vector<Rat>& cyclotomic_poly(long n) {
  if (n < 1) throw Error("cyclotomic_poly: order must be >= 1");
  static std::mutex mu;
  static std::map<long, Poly> cache;
  std::lock_guard<std::mutex> lock(mu);

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division throughout.
  auto compute = [](auto&& self, long m) -> const Poly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly num(static_cast<std::size_t>(m) + 1, Rat(0));
    num[0] = Rat(-1);
    num[static_cast<std::size_t>(m)] = Rat(1);
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const Poly& phi_d = self(self, d);
      auto qr = poly_divrem(std::move(num), phi_d);
      num = std::move(qr.first);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return compute(compute, n);
}

CycloNum::CycloNum() : order_(1), coeffs_(1, Rat(0)) {}

CycloNum CycloNum::zero(long order) {
  if (order < 1) throw IncompatibleOrders("CycloNum order must be >= 1");
  CycloNum x;
  x.order_ = order;
  x.coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rat(0));
  return x;
}

CycloNum CycloNum::one(long order) {
  CycloNum x = zero(order);
  x.coeffs_[0] = Rat(1);
  return x;
}

CycloNum CycloNum::rational(const Rat& value, long order) {
  CycloNum x = zero(order);
  x.coeffs_[0] = value;
  return x;
}

CycloNum CycloNum::integer(long value, long order) {
  return rational(Rat(static_cast<signed long>(value)), order);
}

CycloNum CycloNum::root(long order, long k) {
  CycloNum x = zero(order);
  long e = k % order;
  if (e < 0) e += order;
  const long phi = static_cast<long>(x.coeffs_.size());
  if (e < phi) {
    x.coeffs_[static_cast<std::size_t>(e)] = Rat(1);
    return x;
  }
  Poly p(static_cast<std::size_t>(e) + 1, Rat(0));
  p[static_cast<std::size_t>(e)] = Rat(1);
  auto qr = poly_divrem(std::move(p), cyclotomic_poly(order));
  x.coeffs_ = pad_to(std::move(qr.second), phi);
  return x;
}

CycloNum CycloNum::from_coeffs(long order, std::vector<Rat> coeffs) {
  CycloNum x = zero(order);
  if (coeffs.size() != x.coeffs_.size())
    throw IncompatibleOrders("from_coeffs: expected phi(order) coordinates");
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool CycloNum::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational(Rat* out) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (out) *out = coeffs_[0];
  return true;
}

CycloNum CycloNum::embedded(long order2) const {
  if (order2 < 1 || order2 % order_ != 0)
    throw IncompatibleOrders("embedded: target order must be a multiple of the source order");
  if (order2 == order_) return *this;
  const long d = order2 / order_;
  Poly p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::size_t e = i * static_cast<std::size_t>(d);
    if (p.size() <= e) p.resize(e + 1, Rat(0));
    p[e] += coeffs_[i];
  }
  auto qr = poly_divrem(std::move(p), cyclotomic_poly(order2));
  CycloNum x = zero(order2);
  x.coeffs_ = pad_to(std::move(qr.second), static_cast<long>(x.coeffs_.size()));
  return x;
}

namespace {

void align(CycloNum& a, CycloNum& b) {
  const long l = lcm_long(a.order(), b.order());
  if (a.order() != l) a = a.embedded(l);
  if (b.order() != l) b = b.embedded(l);
}

}  // namespace

CycloNum CycloNum::operator-() const {
  CycloNum x = *this;
  for (Rat& c : x.coeffs_) c = -c;
  return x;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  CycloNum x = a, y = b;
  align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  CycloNum x = a, y = b;
  align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  CycloNum x = a, y = b;
  align(x, y);
  Poly p = poly_mul(x.coeffs_, y.coeffs_);
  if (static_cast<long>(p.size()) >= static_cast<long>(x.coeffs_.size()) + 1) {
    auto qr = poly_divrem(std::move(p), cyclotomic_poly(x.order_));
    p = std::move(qr.second);
  }
  x.coeffs_ = pad_to(std::move(p), static_cast<long>(x.coeffs_.size()));
  return x;
}

CycloNum CycloNum::inv() const {
  if (is_zero()) throw DivisionByZero("inv: division by zero");
  // Extended Euclid against Phi_order: s*this + t*Phi = gcd, a nonzero
  // constant since Phi is irreducible and deg(this) < deg(Phi).
  Poly r0 = cyclotomic_poly(order_);
  Poly r1 = coeffs_;
  poly_trim(r1);
  Poly s0;            // coefficient of `this` in r0
  Poly s1 = {Rat(1)}; // coefficient of `this` in r1
  while (!r1.empty()) {
    auto qr = poly_divrem(std::move(r0), r1);
    Poly r2 = std::move(qr.second);
    Poly s2 = poly_sub(std::move(s0), poly_mul(qr.first, s1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r2);
    s1 = std::move(s2);
  }
  if (poly_deg(r0) != 0)
    throw DivisionByZero("inv: element is a zero divisor (cache corrupt?)");
  const Rat g = r0[0];
  for (Rat& c : s0) c /= g;
  if (static_cast<long>(s0.size()) > static_cast<long>(coeffs_.size())) {
    auto qr = poly_divrem(std::move(s0), cyclotomic_poly(order_));
    s0 = std::move(qr.second);
  }
  CycloNum x = zero(order_);
  x.coeffs_ = pad_to(std::move(s0), static_cast<long>(x.coeffs_.size()));
  return x;
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  CycloNum x = a, y = b;
  align(x, y);
  return x * y.inv();
}

CycloNum& CycloNum::operator+=(const CycloNum& b) { return *this = *this + b; }
CycloNum& CycloNum::operator-=(const CycloNum& b) { return *this = *this - b; }
CycloNum& CycloNum::operator*=(const CycloNum& b) { return *this = *this * b; }

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNum acc = one(order_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  CycloNum x = a, y = b;
  align(x, y);
  return x.coeffs_ == y.coeffs_;
}

bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_parse(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) throw ParseError("rational: empty string");
  std::string num, den = "1";
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(trim(s));
  } else {
    num = std::string(trim(s.substr(0, slash)));
    den = std::string(trim(s.substr(slash + 1)));
  }
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(num) || !valid(den))
    throw ParseError("rational: expected p or p/q, got '" + std::string(s) + "'");
  Rat r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) throw ParseError("rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  os << order_ << ":[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(coeffs_[i]);
  }
  os << "]";
  return os.str();
}

CycloNum CycloNum::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("cyclo: expected N:[...] form");
  long order = 0;
  try {
    std::size_t used = 0;
    order = std::stol(std::string(text.substr(0, colon)), &used);
    if (used != colon) throw ParseError("cyclo: bad order");
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cyclo: bad order in '" + std::string(text) + "'");
  }
  if (order < 1) throw ParseError("cyclo: order must be >= 1");
  std::string_view body = text.substr(colon + 1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("cyclo: expected [c0,c1,...]");
  body = body.substr(1, body.size() - 2);
  std::vector<Rat> coeffs;
  if (!body.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const std::string_view piece =
          comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
      coeffs.push_back(rat_parse(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (static_cast<long>(coeffs.size()) != euler_phi(order))
    throw ParseError("cyclo: expected phi(N) coefficients");
  return from_coeffs(order, std::move(coeffs));
}

std::optional<long> root_exponent(const CycloNum& v, long order) {
  const long l = lcm_long(v.order(), order);
  const CycloNum lifted = v.embedded(l);
  const long step = l / order;
  CycloNum cur = CycloNum::one(l);
  const CycloNum z = CycloNum::root(l, step);
  for (long k = 0; k < order; ++k) {
    if (lifted == cur) return k;
    cur = cur * z;
  }
  return std::nullopt;
}

}  // namespace skw
