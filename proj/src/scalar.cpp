#include "suq2/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace suq2 {

GaussRat GaussRat::inverse() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw ScalarError("zero-divisor");
  return {re / n, -im / n};
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(const GaussRat& c, int qe, int qbe) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{qe, qbe}, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0} && terms_.begin()->second.is_one();
}

void LaurentPoly::add_term(const Exponent& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c.conj());
  return r;
}

LaurentPoly LaurentPoly::shifted(int dq, int dqb) const {
  if (dq == 0 && dqb == 0) return *this;
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exponent{e.first + dq, e.second + dqb}, c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  int a = terms_.begin()->first.first;
  int b = terms_.begin()->first.second;
  for (const auto& [e, c] : terms_) {
    a = std::min(a, e.first);
    b = std::min(b, e.second);
  }
  return {a, b};
}

namespace {

std::complex<double> ipow(std::complex<double> z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  std::complex<double> r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

}  // namespace

std::complex<double> LaurentPoly::evaluate(std::complex<double> q) const {
  std::complex<double> qb = std::conj(q);
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * ipow(q, e.first) * ipow(qb, e.second);
  return sum;
}

double LaurentPoly::magnitude(std::complex<double> q) const {
  double a = std::abs(q);
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += std::abs(c.to_complex()) * std::pow(a, e.first + e.second);
  return sum;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

namespace {

// Which coefficients render with a leading minus sign.
bool renders_negative(const GaussRat& c) {
  if (sgn(c.im) == 0) return sgn(c.re) < 0;
  if (sgn(c.re) == 0) return sgn(c.im) < 0;
  return false;
}

std::string coefficient_string(const GaussRat& c) {
  // c is assumed "non-negative" in the sense of renders_negative.
  if (sgn(c.im) == 0) return c.re.get_str();
  if (sgn(c.re) == 0) {
    if (c.im == 1) return "i";
    return c.im.get_str() + "*i";
  }
  std::string s = "(" + c.re.get_str();
  if (sgn(c.im) < 0) {
    mpq_class m = -c.im;
    s += " - " + (m == 1 ? std::string("i") : m.get_str() + "*i");
  } else {
    s += " + " + (c.im == 1 ? std::string("i") : c.im.get_str() + "*i");
  }
  return s + ")";
}

std::string monomial_string(const Exponent& e, bool unicode) {
  std::string s;
  auto part = [&](const char* name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (k != 1) s += "^" + std::to_string(k);
  };
  part("q", e.first);
  part(unicode ? "q̄" : "qb", e.second);
  return s;
}

}  // namespace

std::string LaurentPoly::to_string(bool unicode) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, GaussRat>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = x.first.first + x.first.second;
    int dy = y.first.first + y.first.second;
    if (dx != dy) return dx < dy;
    return x.first.first > y.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c0] : ordered) {
    bool neg = renders_negative(c0);
    GaussRat c = neg ? -c0 : c0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(e, unicode);
    if (mono.empty()) {
      out += coefficient_string(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += coefficient_string(c) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial GCD in Q(i)[x][y], x = q, y = qb. Univariate polynomials are
// dense coefficient vectors (index = degree), always trimmed.

namespace {

using UPoly = std::vector<GaussRat>;
using BPoly = std::vector<UPoly>;  // index = y-degree

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  trim(r);
  return r;
}

// Division with remainder over the field Q(i).
std::pair<UPoly, UPoly> up_divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw ScalarError("zero-divisor");
  UPoly quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, GaussRat());
  GaussRat inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    GaussRat t = a.back() * inv;
    quo[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - t * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quo);
  return {quo, a};
}

UPoly up_monic(UPoly a) {
  if (a.empty()) return a;
  GaussRat inv = a.back().inverse();
  for (auto& c : a) c = c * inv;
  return a;
}

UPoly up_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = up_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return up_monic(a);
}

UPoly up_exact_div(const UPoly& a, const UPoly& b) {
  auto [quo, rem] = up_divmod(a, b);
  if (!rem.empty()) throw ScalarError("inexact polynomial division");
  return quo;
}

BPoly to_bpoly(const LaurentPoly& p) {
  BPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e.first < 0 || e.second < 0) throw ScalarError("polynomial expected, found negative exponent");
    if (r.size() <= static_cast<std::size_t>(e.second)) r.resize(e.second + 1);
    UPoly& u = r[e.second];
    if (u.size() <= static_cast<std::size_t>(e.first)) u.resize(e.first + 1);
    u[e.first] = c;
  }
  return r;
}

LaurentPoly from_bpoly(const BPoly& p) {
  LaurentPoly r;
  for (std::size_t y = 0; y < p.size(); ++y)
    for (std::size_t x = 0; x < p[y].size(); ++x)
      r.add_term({static_cast<int>(x), static_cast<int>(y)}, p[y][x]);
  return r;
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? up_monic(c) : up_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

BPoly primitive_part(const BPoly& p) {
  UPoly c = content(p);
  if (c.empty() || c.size() == 1) {
    if (c.empty()) return p;
    BPoly r = p;
    for (auto& u : r)
      for (auto& v : u) v = v / c[0];
    return r;
  }
  BPoly r;
  r.reserve(p.size());
  for (const auto& u : p) r.push_back(u.empty() ? UPoly{} : up_exact_div(u, c));
  return r;
}

// Pseudo-remainder of a by b with respect to y.
BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const UPoly& lc = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly t = a.back();
    for (auto& u : a) u = up_mul(u, lc);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = up_sub(a[i + shift], up_mul(t, b[i]));
    trim(a);
  }
  return a;
}

}  // namespace

namespace {

// 0: constant, 1: only q, 2: only qb, 3: both.
int variables(const LaurentPoly& p) {
  int v = 0;
  for (const auto& [e, c] : p.terms()) v |= (e.first != 0 ? 1 : 0) | (e.second != 0 ? 2 : 0);
  return v;
}

UPoly to_upoly(const LaurentPoly& p, bool in_qb) {
  UPoly u;
  for (const auto& [e, c] : p.terms()) {
    std::size_t k = static_cast<std::size_t>(in_qb ? e.second : e.first);
    if (u.size() <= k) u.resize(k + 1);
    u[k] = c;
  }
  return u;
}

LaurentPoly from_upoly(const UPoly& u, bool in_qb) {
  LaurentPoly r;
  for (std::size_t k = 0; k < u.size(); ++k)
    r.add_term(in_qb ? Exponent{0, static_cast<int>(k)} : Exponent{static_cast<int>(k), 0}, u[k]);
  return r;
}

// gcd(a, b) for b involving a single variable: it divides every coefficient
// of a taken as a polynomial in the other variable.
LaurentPoly gcd_with_univariate(const LaurentPoly& a, const LaurentPoly& b, bool in_qb) {
  std::map<int, LaurentPoly> slices;
  for (const auto& [e, c] : a.terms()) {
    int other = in_qb ? e.first : e.second;
    slices[other].add_term(in_qb ? Exponent{0, e.second} : Exponent{e.first, 0}, c);
  }
  UPoly g = to_upoly(b, in_qb);
  for (const auto& [k, sl] : slices) {
    g = up_gcd(g, to_upoly(sl, in_qb));
    if (g.size() == 1) break;
  }
  return from_upoly(up_monic(g), in_qb);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a0, const LaurentPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return {};
  if (a0.is_zero() || b0.is_zero()) {
    const LaurentPoly& n = a0.is_zero() ? b0 : a0;
    return n.scaled(n.terms().rbegin()->second.inverse());
  }
  const int va = variables(a0), vb = variables(b0);
  if (va == 0 || vb == 0) return LaurentPoly(GaussRat(1));
  if (vb != 3) return gcd_with_univariate(a0, b0, vb == 2);
  if (va != 3) return gcd_with_univariate(b0, a0, va == 2);
  BPoly a = to_bpoly(a0);
  BPoly b = to_bpoly(b0);
  UPoly ca = content(a);
  UPoly cb = content(b);
  UPoly c = ca.empty() ? cb : (cb.empty() ? ca : up_gcd(ca, cb));
  a = a.empty() ? a : primitive_part(a);
  b = b.empty() ? b : primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive_part(r);
  }
  BPoly g = primitive_part(a);
  for (auto& u : g) u = up_mul(u, c);
  LaurentPoly result = from_bpoly(g);
  if (result.is_zero()) return result;
  return result.scaled(result.terms().rbegin()->second.inverse());
}

LaurentPoly poly_exact_div(const LaurentPoly& a0, const LaurentPoly& b) {
  if (b.is_zero()) throw ScalarError("zero-divisor");
  LaurentPoly a = a0;
  LaurentPoly quo;
  const auto& [fb, db] = *b.terms().rbegin();
  GaussRat inv = db.inverse();
  while (!a.is_zero()) {
    const auto& [ea, ca] = *a.terms().rbegin();
    int dq = ea.first - fb.first;
    int dqb = ea.second - fb.second;
    if (dq < 0 || dqb < 0) throw ScalarError("inexact polynomial division");
    LaurentPoly t = LaurentPoly::monomial(ca * inv, dq, dqb);
    quo = quo + t;
    a = a - t * b;
  }
  return quo;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long v) : num_(GaussRat(v)) {}
Scalar::Scalar(const GaussRat& c) : num_(c) {}
Scalar::Scalar(LaurentPoly p) : num_(std::move(p)) {}
Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

Scalar Scalar::q() { return Scalar(LaurentPoly::monomial(GaussRat(1), 1, 0)); }
Scalar Scalar::qbar() { return Scalar(LaurentPoly::monomial(GaussRat(1), 0, 1)); }
Scalar Scalar::i() { return Scalar(GaussRat::i()); }
Scalar Scalar::zeta() { return Scalar(LaurentPoly::monomial(GaussRat(1), 1, -1)); }
Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ScalarError("zero-divisor");
  mpq_class r(num, den);
  r.canonicalize();
  return Scalar(GaussRat(r));
}

void Scalar::canonicalize(bool coprime) {
  if (den_.is_zero()) throw ScalarError("zero-divisor");
  if (num_.is_zero()) {
    den_ = LaurentPoly(GaussRat(1));
    return;
  }
  if (den_.size() == 1) {
    const auto& [e, c] = *den_.terms().begin();
    num_ = num_.shifted(-e.first, -e.second).scaled(c.inverse());
    den_ = LaurentPoly(GaussRat(1));
    return;
  }
  auto [na, nb] = num_.min_exponents();
  auto [da, db] = den_.min_exponents();
  LaurentPoly n0 = num_.shifted(-na, -nb);
  LaurentPoly d0 = den_.shifted(-da, -db);
  LaurentPoly g = coprime ? LaurentPoly(GaussRat(1)) : poly_gcd(n0, d0);
  if (!g.is_one()) {
    n0 = poly_exact_div(n0, g);
    d0 = poly_exact_div(d0, g);
  }
  GaussRat inv = d0.terms().rbegin()->second.inverse();
  n0 = n0.scaled(inv);
  d0 = d0.scaled(inv);
  if (d0.size() == 1) {
    // gcd removed everything but a constant.
    num_ = n0.shifted(na - da, nb - db);
    den_ = LaurentPoly(GaussRat(1));
    return;
  }
  num_ = n0.shifted(na - da, nb - db);
  den_ = std::move(d0);
}

Scalar Scalar::conjugate() const {
  if (is_laurent()) return Scalar(num_.conj());
  return from_coprime(num_.conj(), den_.conj());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("zero-divisor");
  return from_coprime(den_, num_);
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::complex<double> Scalar::evaluate(std::complex<double> qval) const {
  if (qval == std::complex<double>(0.0, 0.0)) throw ScalarError("q must be nonzero");
  std::complex<double> d = den_.evaluate(qval);
  if (std::abs(d) <= 1e-12 * den_.magnitude(qval)) throw ScalarError("pole-at-q");
  return num_.evaluate(qval) / d;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_laurent() && b.is_laurent()) return Scalar(a.num_ + b.num_);
  // A Laurent summand cannot introduce a common factor with the other denominator.
  if (a.is_laurent()) return Scalar::from_coprime(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_laurent()) return Scalar::from_coprime(a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  // Reduced inputs: only factors of g = gcd(da, db) can cancel, and the
  // cancelled part is gcd(num, g).
  LaurentPoly g = poly_gcd(a.den_, b.den_);
  LaurentPoly da = poly_exact_div(a.den_, g);
  LaurentPoly db = poly_exact_div(b.den_, g);
  LaurentPoly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return Scalar(0);
  if (g.size() < 2) return Scalar::from_coprime(std::move(num), a.den_ * db);
  Exponent shift = num.min_exponents();
  LaurentPoly pn = num.shifted(-shift.first, -shift.second);
  LaurentPoly h = poly_gcd(pn, g);
  if (h.size() < 2) return Scalar::from_coprime(std::move(num), da * b.den_);
  return Scalar::from_coprime(poly_exact_div(pn, h).shifted(shift.first, shift.second),
                              da * poly_exact_div(b.den_, h));
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  r.num_ = -a.num_;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

namespace {

// Polynomial part of a Laurent polynomial and the monomial shift removed.
LaurentPoly strip(const LaurentPoly& p, Exponent& shift) {
  shift = p.min_exponents();
  return p.shifted(-shift.first, -shift.second);
}

// Removes from n and d their common polynomial factor.
void cancel(LaurentPoly& n, LaurentPoly& d) {
  if (n.size() < 2 || d.size() < 2) return;
  Exponent sn, sd;
  LaurentPoly pn = strip(n, sn), pd = strip(d, sd);
  LaurentPoly g = poly_gcd(pn, pd);
  if (g.is_one() || g.size() < 2) return;
  n = poly_exact_div(pn, g).shifted(sn.first, sn.second);
  d = poly_exact_div(pd, g).shifted(sd.first, sd.second);
}

}  // namespace

Scalar Scalar::from_coprime(LaurentPoly num, LaurentPoly den) {
  Scalar r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.canonicalize(true);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_laurent() && b.is_laurent()) return Scalar(a.num_ * b.num_);
  // Both operands are reduced, so only cross factors can cancel.
  LaurentPoly na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
  cancel(na, db);
  cancel(nb, da);
  return Scalar::from_coprime(na * nb, da * db);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  return a * b.inverse();
}

bool Scalar::needs_parens() const {
  if (!is_laurent()) return true;
  if (num_.size() > 1) return true;
  return false;
}

std::string Scalar::to_string(bool unicode) const {
  if (is_laurent()) return num_.to_string(unicode);
  std::string n = num_.to_string(unicode);
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string(unicode) + ")";
}

}  // namespace suq2
