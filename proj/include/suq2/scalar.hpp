#pragma once

// Exact coefficient field: rational functions in two commuting indeterminates
// q and qb (the formal conjugate of q) over the Gaussian rationals Q(i).

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace suq2 {

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Q(i), stored as a pair of GMP rationals.
struct GaussRat {
  mpq_class re{0};
  mpq_class im{0};

  GaussRat() = default;
  GaussRat(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }
  GaussRat inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

  static GaussRat i() { return {0, 1}; }
};

/// Exponent pair (power of q, power of qb).
using Exponent = std::pair<int, int>;

/// Laurent polynomial in q, qb with Q(i) coefficients. Terms with zero
/// coefficient are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, GaussRat>;

  LaurentPoly() = default;
  explicit LaurentPoly(const GaussRat& c);
  static LaurentPoly monomial(const GaussRat& c, int qe, int qbe);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponent& e, const GaussRat& c);

  LaurentPoly conj() const;
  LaurentPoly shifted(int dq, int dqb) const;
  LaurentPoly scaled(const GaussRat& c) const;
  Exponent min_exponents() const;

  std::complex<double> evaluate(std::complex<double> q) const;
  /// Sum of |c| |q^a qb^b| over all terms; scale for pole detection.
  double magnitude(std::complex<double> q) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(bool unicode = false) const;

 private:
  TermMap terms_;
};

/// Greatest common divisor of two ordinary polynomials (all exponents
/// non-negative) in Q(i)[q, qb]; normalized so that its lexicographically
/// leading coefficient is 1. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b of ordinary polynomials; throws if b does not divide a.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Rational function num/den in q, qb. Always kept canonical: den is an
/// ordinary polynomial divisible by neither q nor qb, gcd(num, den) = 1, and
/// the lexicographically leading coefficient of den is 1. Equality of Scalars
/// is therefore equality of representations.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(LaurentPoly p);
  Scalar(LaurentPoly num, LaurentPoly den);

  static Scalar q();
  static Scalar qbar();
  static Scalar i();
  /// zeta = q / qb
  static Scalar zeta();
  static Scalar rational(long num, long den = 1);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1 (the Scalar is a Laurent polynomial).
  bool is_laurent() const { return den_.is_one(); }

  Scalar conjugate() const;
  Scalar inverse() const;
  Scalar pow(int n) const;

  /// Numerical specialization q -> qval, qb -> conj(qval). Throws
  /// ScalarError("pole-at-q") when the denominator vanishes there.
  std::complex<double> evaluate(std::complex<double> qval) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// ASCII rendering, e.g. "(q^2 - qb)/(1 - q*qb)"; parseable by the CLI
  /// scalar grammar. With unicode=true uses q̄ and superscript-free "^".
  std::string to_string(bool unicode = false) const;
  /// True when to_string() needs parentheses before being used as a factor.
  bool needs_parens() const;

 private:
  // `coprime` skips the gcd step when the caller already knows num and den
  // share no polynomial factor.
  void canonicalize(bool coprime = false);
  static Scalar from_coprime(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(GaussRat(1));
};

}  // namespace suq2
