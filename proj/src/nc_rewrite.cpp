#include "qskein/nc_rewrite.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qskein {

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int x : letters) w.push_back(static_cast<char>(x));
  return w;
}

// ---- Poly ------------------------------------------------------------------

Poly Poly::word(const Word& w, const Laurent& c) {
  Poly p;
  p.add(w, c);
  return p;
}

Laurent Poly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Laurent() : it->second;
}

void Poly::add(const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void Poly::add_scaled(const Poly& p, const Laurent& c) {
  if (c.is_zero()) return;
  for (const auto& [w, x] : p.t_) add(w, c.is_one() ? x : x * c);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, x] : o.t_) add(w, x);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, x] : o.t_) add(w, -x);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [w, x] : r.t_) x = -x;
  return r;
}

Poly operator*(const Laurent& c, const Poly& p) {
  Poly r;
  r.add_scaled(p, c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [u, x] : a.t_)
    for (const auto& [w, y] : b.t_) r.add(u + w, x * y);
  return r;
}

// ---- RewriteSystem ---------------------------------------------------------

RewriteSystem::RewriteSystem(std::vector<std::string> alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  DegLex lt;
  for (const auto& r : rules_) {
    if (r.lead.empty()) throw std::invalid_argument("rule with empty leading word");
    for (const auto& [w, c] : r.rhs.terms())
      if (!lt(w, r.lead))
        throw std::invalid_argument("replacement term " + word_str(w) + " is not smaller than " + word_str(r.lead));
  }
}

int RewriteSystem::letter(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return static_cast<int>(i);
  return -1;
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_redex(const Word& w) const {
  // largest applicable leading word, leftmost occurrence
  DegLex lt;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    std::size_t pos = w.find(rules_[k].lead);
    if (pos == Word::npos) continue;
    if (!best || lt(rules_[best->first].lead, rules_[k].lead)) best = {k, pos};
  }
  return best;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (const auto& r : rules_)
    if (w.find(r.lead) != Word::npos) return false;
  return true;
}

Poly RewriteSystem::normal_form(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  Poly out;
  auto redex = find_redex(w);
  if (!redex) {
    out.add(w, 1);
  } else {
    const Rule& r = rules_[redex->first];
    Word left = w.substr(0, redex->second);
    Word right = w.substr(redex->second + r.lead.size());
    for (const auto& [m, c] : r.rhs.terms()) out.add_scaled(normal_form(left + m + right), c);
  }
  std::lock_guard<std::mutex> lk(mu_);
  memo_.emplace(w, out);
  return out;
}

Poly RewriteSystem::normal_form(const Poly& p) const {
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    if (is_normal(w)) {
      out.add(w, c);
    } else {
      out.add_scaled(normal_form(w), c);
    }
  }
  return out;
}

Poly RewriteSystem::mul(const Poly& a, const Poly& b) const {
  Poly out;
  for (const auto& [u, x] : a.terms())
    for (const auto& [w, y] : b.terms()) out.add_scaled(normal_form(u + w), x * y);
  return out;
}

std::vector<Word> RewriteSystem::graded_basis(int d) const {
  std::vector<Word> out;
  if (d < 0) return out;
  const int k = static_cast<int>(alphabet_.size());
  Word cur;
  // depth-first in lexicographic order, pruning as soon as a suffix is a
  // leading word
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < k; ++x) {
      cur.push_back(static_cast<char>(x));
      bool bad = false;
      for (const auto& r : rules_) {
        if (r.lead.size() <= cur.size() && cur.compare(cur.size() - r.lead.size(), r.lead.size(), r.lead) == 0) {
          bad = true;
          break;
        }
      }
      if (!bad) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::string RewriteSystem::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    auto x = static_cast<std::size_t>(static_cast<unsigned char>(w[i]));
    s += x < alphabet_.size() ? alphabet_[x] : "?";
  }
  return s;
}

std::string RewriteSystem::str(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    const Laurent& c = it->second;
    if (c.num_terms() > 1) {
      out += "(" + c.str() + ")";
    } else {
      out += c.str();
    }
    out += " * " + word_str(it->first);
  }
  return out;
}

Word RewriteSystem::parse_word(const std::string& text0) const {
  std::string text;
  for (char ch : text0)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text == "1") return {};
  Word w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    int x = letter(tok);
    if (x < 0) throw ParseError("unknown generator '" + tok + "'", 0);
    w.push_back(static_cast<char>(x));
  }
  if (w.empty()) throw ParseError("empty word", 0);
  return w;
}

Poly RewriteSystem::parse(const std::string& text) const {
  // split at top-level '+'
  std::vector<std::pair<std::string, std::size_t>> pieces;
  int depth = 0;
  std::size_t st = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == '+' && depth == 0)) {
      pieces.emplace_back(text.substr(st, i - st), st);
      st = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  Poly out;
  for (const auto& [piece, off] : pieces) {
    if (piece.find_first_not_of(" \t") == std::string::npos) {
      if (pieces.size() == 1) return out;
      throw ParseError("empty term", off);
    }
    // the word is after the last top-level '*'
    std::size_t star = std::string::npos;
    depth = 0;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (piece[i] == '(') ++depth;
      if (piece[i] == ')') --depth;
      if (piece[i] == '*' && depth == 0) star = i;
    }
    std::string wpart = star == std::string::npos ? piece : piece.substr(star + 1);
    std::string cpart = star == std::string::npos ? "1" : piece.substr(0, star);
    Word w;
    try {
      w = parse_word(wpart);
    } catch (const ParseError&) {
      // no word: the whole piece is a scalar multiple of the unit
      out.add(Word{}, Laurent::parse(piece));
      continue;
    }
    try {
      out.add(w, Laurent::parse(cpart));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad coefficient: ") + e.what(), off);
    }
  }
  return out;
}

// ---- confluence probe ------------------------------------------------------

namespace {

Poly random_reduce(const RewriteSystem& R, Poly p, std::mt19937_64& rng) {
  for (;;) {
    std::vector<const Word*> open;
    for (const auto& [w, c] : p.terms())
      if (!R.is_normal(w)) open.push_back(&w);
    if (open.empty()) return p;
    const Word w = *open[rng() % open.size()];
    std::vector<std::pair<std::size_t, std::size_t>> redexes;
    for (std::size_t k = 0; k < R.rules().size(); ++k) {
      const Word& lead = R.rules()[k].lead;
      for (std::size_t pos = w.find(lead); pos != Word::npos; pos = w.find(lead, pos + 1)) redexes.emplace_back(k, pos);
    }
    auto [k, pos] = redexes[rng() % redexes.size()];
    const Rule& r = R.rules()[k];
    Laurent c = p.coeff(w);
    p.add(w, -c);
    Word left = w.substr(0, pos), right = w.substr(pos + r.lead.size());
    for (const auto& [m, x] : r.rhs.terms()) p.add(left + m + right, c * x);
  }
}

}  // namespace

ProbeReport confluence_probe(const RewriteSystem& R, int degree, int trials, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("confluence_probe: degree must be >= 1");
  ProbeReport rep;
  std::mt19937_64 gen(seed), s1(seed * 2 + 1), s2(seed * 3 + 7);
  const int k = static_cast<int>(R.alphabet().size());
  for (int t = 0; t < trials; ++t) {
    Poly p;
    int nterms = 1 + static_cast<int>(gen() % 3);
    for (int j = 0; j < nterms; ++j) {
      int len = 1 + static_cast<int>(gen() % static_cast<unsigned>(degree));
      Word w;
      for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(gen() % static_cast<unsigned>(k)));
      long c = static_cast<long>(gen() % 5) - 2;
      if (c == 0) c = 1;
      p.add(w, Laurent::monomial(static_cast<int>(gen() % 5) - 2, c));
    }
    ++rep.trials;
    Poly a = random_reduce(R, p, s1), b = random_reduce(R, p, s2);
    if (a != b) {
      ++rep.mismatches;
      if (!rep.witness) {
        rep.witness = p;
        rep.first = a;
        rep.second = b;
      }
    }
  }
  return rep;
}

long commutative_hilbert(int d) {
  long n = 0;
  for (int j = 0; j <= d; ++j)
    for (int k = 0; j + k <= d; ++k) {
      if (j > 0 && k > 0) continue;
      n += d - j - k + 1;  // splits of the rest between a and d
    }
  return n;
}

}  // namespace qskein
