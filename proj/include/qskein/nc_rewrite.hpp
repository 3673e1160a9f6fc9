// Free noncommutative polynomials over Z[v^{+-1}] and reduction to normal
// form against a fixed, order-decreasing rule set.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qskein/scalar.hpp"

namespace qskein {

// A word stores alphabet indices as chars. The empty word is the unit.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);

// degree-lexicographic order
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class Poly {
 public:
  using Terms = std::map<Word, Laurent, DegLex>;

  Poly() = default;
  Poly(const Laurent& c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  static Poly word(const Word& w, const Laurent& c = 1);

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  Laurent coeff(const Word& w) const;
  std::size_t degree() const { return t_.empty() ? 0 : t_.rbegin()->first.size(); }

  void add(const Word& w, const Laurent& c);
  void add_scaled(const Poly& p, const Laurent& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Laurent& c, const Poly& p);
  // free (concatenation) product
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  Terms t_;
};

struct Rule {
  Word lead;
  Poly rhs;
};

class RewriteSystem {
 public:
  // throws std::invalid_argument when a replacement is not strictly smaller
  // than its leading word
  RewriteSystem(std::vector<std::string> alphabet, std::vector<Rule> rules);
  RewriteSystem(const RewriteSystem& o) : alphabet_(o.alphabet_), rules_(o.rules_) {}

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int letter(const std::string& name) const;  // -1 when unknown

  bool is_normal(const Word& w) const;
  Poly normal_form(const Poly& p) const;
  Poly normal_form(const Word& w) const;
  // normal form of the concatenation of two polynomials
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mul(const Word& a, const Word& b) const { return normal_form(a + b); }

  // normal words of length exactly d, increasing in the monomial order
  std::vector<Word> graded_basis(int d) const;

  std::string word_str(const Word& w) const;
  std::string str(const Poly& p) const;
  Word parse_word(const std::string& text) const;
  Poly parse(const std::string& text) const;

 private:
  // index into rules_ of the rule to apply and the position, or nullopt
  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const;

  std::vector<std::string> alphabet_;
  std::vector<Rule> rules_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, Poly> memo_;
};

struct ProbeReport {
  int trials = 0;
  int mismatches = 0;
  std::optional<Poly> witness;
  Poly first, second;  // the two disagreeing normal forms of the witness
  bool ok() const { return mismatches == 0; }
};

// Reduces random polynomials with two independent randomized strategies and
// compares the results.
ProbeReport confluence_probe(const RewriteSystem& R, int degree, int trials, std::uint64_t seed = 1);

// number of degree-d monomials in Z[a,b,c,d]/(ad - bc), counted over
// commutative monomials not divisible by the leading monomial bc
long commutative_hilbert(int d);

}  // namespace qskein
