// Exact scalars: Laurent polynomials in v = q^{1/4} over Z, the fraction
// field Q(v), and specialization at v = 1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qskein {

class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  explicit Laurent(const mpz_class& c);

  static Laurent monomial(int exp, const mpz_class& c = 1);
  static Laurent v(int exp = 1) { return monomial(exp); }
  static Laurent q(int exp = 1) { return monomial(4 * exp); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return lo_ == 0 && c_.size() == 1 && c_[0] == 1; }
  // nonzero multiple of a single power of v
  bool is_monomial() const { return c_.size() == 1; }
  bool is_unit() const { return is_monomial() && abs(c_[0]) == 1; }

  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::size_t num_terms() const;
  mpz_class coeff(int exp) const;
  const mpz_class& lead() const { return c_.back(); }
  const mpz_class& trail() const { return c_.front(); }

  Laurent shifted(int k) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // total order used only for canonical sorting
  bool operator<(const Laurent& o) const;

  // adds c*v^exp in place
  void add_term(int exp, const mpz_class& c);
  // this += a*b without a temporary
  void add_product(const Laurent& a, const Laurent& b);

  mpz_class content() const;  // gcd of coefficients, 0 for zero
  // exact division by an integer; throws if not exact
  Laurent divexact(const mpz_class& d) const;

  mpz_class at_one() const;
  std::string str() const;
  static Laurent parse(std::string_view text);

  const std::vector<mpz_class>& coeffs() const { return c_; }

 private:
  void trim();
  int lo_ = 0;
  std::vector<mpz_class> c_;
};

// Polynomial helpers on Laurent values whose low() >= 0, i.e. elements of Z[v].
namespace zpoly {
Laurent primitive_part(const Laurent& p);
// remainder of p by q after scaling p by lead(q)^k
Laurent pseudo_rem(const Laurent& p, const Laurent& q);
// primitive gcd, positive leading coefficient; gcd(0,0) = 0
Laurent gcd(const Laurent& a, const Laurent& b);
// exact quotient a / b over Z[v]; throws if b does not divide a
Laurent divexact(const Laurent& a, const Laurent& b);
}  // namespace zpoly

// gcd in Z[v^{+-1}] up to units, normalized to a polynomial with nonzero
// constant term and positive leading coefficient
Laurent laurent_gcd(const Laurent& a, const Laurent& b);
Laurent laurent_divexact(const Laurent& a, const Laurent& b);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Laurent& x);              // NOLINT(google-explicit-constructor)
  Rational(const Laurent& num, const Laurent& den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_monomial(); }
  Laurent to_laurent() const;  // throws unless the denominator is a unit

  Rational inverse() const;
  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend Rational frac_normalize(const Laurent& num, const Laurent& den);
  struct Raw {};
  Rational(Raw, Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {}
  Laurent num_, den_;
};

// Reduced fraction num/den: both in Z[v], gcd a unit over Q, overall content
// removed, positive leading coefficient in the denominator.
Rational frac_normalize(const Laurent& num, const Laurent& den);

struct SpecPoint {
  enum class Kind { Integers, PrimeField };
  Kind kind = Kind::Integers;
  long p = 0;
  static SpecPoint integers() { return {}; }
  static SpecPoint prime_field(long p);
};

bool is_prime(long n);

// v -> 1; reduced into [0, p) for a prime field
mpz_class specialize(const Laurent& x, const SpecPoint& at);
long specialize_mod(const Laurent& x, long p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace qskein
