#include "qskein/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace qskein {

Laurent::Laurent(long c) {
  if (c != 0) c_.emplace_back(c);
}

Laurent::Laurent(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

Laurent Laurent::monomial(int exp, const mpz_class& c) {
  Laurent r;
  if (c != 0) {
    r.lo_ = exp;
    r.c_.push_back(c);
  }
  return r;
}

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  if (c_.empty()) lo_ = 0;
}

std::size_t Laurent::num_terms() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const mpz_class& x) { return x != 0; }));
}

mpz_class Laurent::coeff(int exp) const {
  if (c_.empty() || exp < lo_ || exp > high()) return 0;
  return c_[static_cast<std::size_t>(exp - lo_)];
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.c_.empty()) r.lo_ += k;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

void Laurent::add_term(int exp, const mpz_class& c) {
  if (c == 0) return;
  if (c_.empty()) {
    lo_ = exp;
    c_.push_back(c);
    return;
  }
  if (exp < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - exp), mpz_class(0));
    lo_ = exp;
  } else if (exp > high()) {
    c_.resize(static_cast<std::size_t>(exp - lo_ + 1), mpz_class(0));
  }
  c_[static_cast<std::size_t>(exp - lo_)] += c;
  trim();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::max(high(), o.high());
  if (nlo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), mpz_class(0));
  lo_ = nlo;
  c_.resize(static_cast<std::size_t>(nhi - nlo + 1), mpz_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.lo_ - lo_) + i] += o.c_[i];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

void Laurent::add_product(const Laurent& a, const Laurent& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (c_.empty()) {
    *this = a * b;
    return;
  }
  int plo = a.lo_ + b.lo_;
  int phi = a.high() + b.high();
  int nlo = std::min(lo_, plo);
  int nhi = std::max(high(), phi);
  if (nlo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), mpz_class(0));
  lo_ = nlo;
  c_.resize(static_cast<std::size_t>(nhi - nlo + 1), mpz_class(0));
  std::size_t off = static_cast<std::size_t>(plo - lo_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(c_[off + i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  trim();
}

bool Laurent::operator<(const Laurent& o) const {
  if (lo_ != o.lo_) return lo_ < o.lo_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

mpz_class Laurent::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Laurent Laurent::divexact(const mpz_class& d) const {
  Laurent r = *this;
  for (auto& x : r.c_) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) throw std::domain_error("Laurent::divexact: not divisible");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

mpz_class Laurent::at_one() const {
  mpz_class s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int e = high(); e >= lo_; --e) {
    const mpz_class& x = c_[static_cast<std::size_t>(e - lo_)];
    if (x == 0) continue;
    if (!out.empty()) out += " + ";
    out += x.get_str();
    if (e == 1) {
      out += "*v";
    } else if (e != 0) {
      out += "*v^" + std::to_string(e);
    }
  }
  return out;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct ScalarParser {
  std::string_view s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char ch) {
    ws();
    if (i < s.size() && s[i] == ch) {
      ++i;
      return true;
    }
    return false;
  }
  long integer() {
    ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    ws();
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) throw ParseError("expected integer exponent", i);
    long x = std::stol(std::string(s.substr(st, i - st)));
    return neg ? -x : x;
  }
  Laurent expr() {
    Laurent acc;
    bool first = true;
    for (;;) {
      ws();
      int sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      Laurent t = term();
      acc += sign > 0 ? t : -t;
      first = false;
    }
    return acc;
  }
  Laurent term() {
    Laurent acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  Laurent power() {
    Laurent base = atom();
    if (eat('^')) {
      ws();
      if (i < s.size() && s[i] == '(') {
        // fractional exponent of a variable: A^(5/2) = v^5, q^(1/4) = v
        ++i;
        const std::size_t at = i;
        long num = integer(), den = 1;
        if (eat('/')) den = integer();
        if (!eat(')')) throw ParseError("expected ')' after exponent", i);
        if (den <= 0) throw ParseError("exponent denominator must be positive", at);
        if (!(base.is_monomial() && base.lead() == 1 && base.low() != 0))
          throw ParseError("fractional exponent needs a variable base", at);
        if ((base.low() * num) % den != 0) throw ParseError("exponent is not a multiple of 1/4 in q", at);
        return Laurent::monomial(static_cast<int>(base.low() * num / den));
      }
      long e = integer();
      if (base.is_monomial() && abs(base.lead()) == 1 && base.low() != 0) {
        // v^e, q^e, A^e
        mpz_class c = base.lead();
        if (c < 0 && (e % 2 != 0)) return Laurent::monomial(static_cast<int>(base.low() * e), -1);
        return Laurent::monomial(static_cast<int>(base.low() * e));
      }
      if (e < 0) throw ParseError("negative power of a non-monomial", i);
      Laurent r(1);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }
  Laurent atom() {
    ws();
    if (i >= s.size()) throw ParseError("unexpected end of scalar", i);
    char ch = s[i];
    if (ch == '(') {
      ++i;
      Laurent r = expr();
      if (!eat(')')) throw ParseError("expected ')'", i);
      return r;
    }
    if (ch == '-') {
      ++i;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      return Laurent(mpz_class(std::string(s.substr(st, i - st))));
    }
    ++i;
    if (ch == 'v') return Laurent::v(1);
    if (ch == 'q') return Laurent::v(4);
    if (ch == 'A') return Laurent::v(2);
    throw ParseError(std::string("unexpected character '") + ch + "'", i - 1);
  }
};

}  // namespace

Laurent Laurent::parse(std::string_view text) {
  ScalarParser p{text};
  Laurent r = p.expr();
  p.ws();
  if (p.i != text.size()) throw ParseError("trailing input in scalar", p.i);
  return r;
}

// ---- Z[v] helpers ----------------------------------------------------------

namespace zpoly {

Laurent primitive_part(const Laurent& p) {
  if (p.is_zero()) return p;
  mpz_class g = p.content();
  if (p.lead() < 0) g = -g;
  return p.divexact(g);
}

Laurent pseudo_rem(const Laurent& p, const Laurent& q) {
  // both treated as polynomials in v with exponents starting at 0
  if (q.is_zero()) throw std::domain_error("pseudo_rem by zero");
  Laurent r = p;
  const int dq = q.high();
  const mpz_class lq = q.lead();
  while (!r.is_zero() && r.high() >= dq) {
    int shift = r.high() - dq;
    mpz_class lr = r.lead();
    mpz_class g = gcd(lr, lq);
    mpz_class a = lq / g, b = lr / g;
    // r <- a*r - b*v^shift*q
    r = r * Laurent(a) - q.shifted(shift) * Laurent(b);
  }
  return r;
}

Laurent gcd(const Laurent& a0, const Laurent& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  Laurent a = primitive_part(a0), b = primitive_part(b0);
  if (a.high() < b.high()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.high() == 0) return Laurent(1);
    Laurent r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

Laurent divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Laurent r = a, quo;
  const int db = b.high();
  while (!r.is_zero()) {
    if (r.high() < db) throw std::domain_error("zpoly::divexact: not divisible");
    mpz_class qc;
    if (!mpz_divisible_p(r.lead().get_mpz_t(), b.lead().get_mpz_t())) throw std::domain_error("zpoly::divexact: not divisible");
    qc = r.lead() / b.lead();
    int shift = r.high() - db;
    Laurent t = Laurent::monomial(shift, qc);
    quo += t;
    r -= b * t;
  }
  return quo;
}

}  // namespace zpoly

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  Laurent pa = a.is_zero() ? a : a.shifted(-a.low());
  Laurent pb = b.is_zero() ? b : b.shifted(-b.low());
  return zpoly::gcd(pa, pb);
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return a;
  int sa = a.low(), sb = b.low();
  return zpoly::divexact(a.shifted(-sa), b.shifted(-sb)).shifted(sa - sb);
}

// ---- Q(v) ------------------------------------------------------------------

Rational frac_normalize(const Laurent& num0, const Laurent& den0) {
  if (den0.is_zero()) throw std::domain_error("frac_normalize: zero denominator");
  if (num0.is_zero()) return Rational(0);
  int s = std::min(num0.low(), den0.low());
  Laurent num = num0.shifted(-s), den = den0.shifted(-s);
  Laurent g = zpoly::gcd(num, den);
  if (!(g.is_one())) {
    num = zpoly::divexact(num, g);
    den = zpoly::divexact(den, g);
  }
  mpz_class c = gcd(num.content(), den.content());
  if (den.lead() < 0) c = -c;
  if (c != 1) {
    num = num.divexact(c);
    den = den.divexact(c);
  }
  return Rational(Rational::Raw{}, std::move(num), std::move(den));
}

Rational::Rational(const Laurent& x) {
  if (x.is_zero()) {
    num_ = 0;
    den_ = 1;
  } else if (x.low() >= 0) {
    num_ = x;
    den_ = 1;
  } else {
    num_ = x.shifted(-x.low());
    den_ = Laurent::v(-x.low());
  }
}

Rational::Rational(const Laurent& num, const Laurent& den) { *this = frac_normalize(num, den); }

Laurent Rational::to_laurent() const {
  if (!den_.is_monomial() || abs(den_.lead()) != 1) throw std::domain_error("Rational::to_laurent: denominator is not a unit");
  Laurent r = num_.shifted(-den_.low());
  return den_.lead() < 0 ? -r : r;
}

Rational Rational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("Rational::inverse of zero");
  return frac_normalize(den_, num_);
}

Rational Rational::operator-() const { return Rational(Raw{}, -num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return frac_normalize(a.num_ + b.num_, a.den_);
  return frac_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  return frac_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---- specialization --------------------------------------------------------

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

SpecPoint SpecPoint::prime_field(long p) {
  if (!is_prime(p)) throw std::invalid_argument("SpecPoint: " + std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

mpz_class specialize(const Laurent& x, const SpecPoint& at) {
  mpz_class s = x.at_one();
  if (at.kind == SpecPoint::Kind::PrimeField) {
    mpz_class p = at.p;
    mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
  }
  return s;
}

long specialize_mod(const Laurent& x, long p) {
  mpz_class s = x.at_one();
  return static_cast<long>(mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace qskein
