// Finite linear combinations of n-tuples of words.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qskein/nc_rewrite.hpp"

namespace qskein {

using TKey = std::vector<Word>;

class Tensor {
 public:
  using Terms = std::map<TKey, Laurent>;

  Tensor() = default;
  explicit Tensor(int arity) : n_(arity) {}
  static Tensor unit(int arity) {
    Tensor t(arity);
    t.add(TKey(static_cast<std::size_t>(arity)), 1);
    return t;
  }
  static Tensor pure(const TKey& k, const Laurent& c = 1) {
    Tensor t(static_cast<int>(k.size()));
    t.add(k, c);
    return t;
  }

  int arity() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const Terms& terms() const { return t_; }
  Laurent coeff(const TKey& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Laurent() : it->second;
  }
  // sum of word lengths of the longest term
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [k, c] : t_) {
      std::size_t s = 0;
      for (const auto& w : k) s += w.size();
      d = std::max(d, s);
    }
    return d;
  }

  void add(const TKey& k, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add(TKey&& k, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  void add_scaled(const Tensor& o, const Laurent& c) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : o.t_) add(k, c.is_one() ? x : x * c);
  }
  Tensor& operator+=(const Tensor& o) {
    add_scaled(o, 1);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Laurent& c, const Tensor& t) {
    Tensor r(t.n_);
    r.add_scaled(t, c);
    return r;
  }
  bool operator==(const Tensor& o) const { return t_ == o.t_; }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string str(const RewriteSystem& R) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
      if (!out.empty()) out += " + ";
      out += c.num_terms() > 1 ? "(" + c.str() + ")" : c.str();
      out += " * ";
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) out += " (x) ";
        out += R.word_str(k[i]);
      }
    }
    return out;
  }

 private:
  int n_ = 0;
  Terms t_;
};

}  // namespace qskein
