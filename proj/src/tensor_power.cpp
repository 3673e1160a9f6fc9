#include "qskein/tensor_power.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qskein {

std::string BraidWord::str() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(l.index);
    if (l.inverse) s += "^-1";
  }
  return s;
}

std::string key_string(const TKey& k) {
  std::string s;
  for (const auto& w : k) {
    s += w;
    s.push_back('|');
  }
  return s;
}

TensorPower::TensorPower(const BqContext& B, int n, BraidModel model, bool mirror)
    : B_(B), n_(n), model_(model), mirror_(mirror) {
  if (n < 1) throw std::invalid_argument("tensor power arity must be >= 1");
}

namespace {

// expands sum over products of per-slot polynomials
void add_product_of_polys(Tensor& out, const std::vector<Poly>& slots, const Laurent& c) {
  std::vector<std::pair<TKey, Laurent>> acc{{TKey{}, c}};
  for (const auto& p : slots) {
    std::vector<std::pair<TKey, Laurent>> next;
    for (const auto& [k, x] : acc)
      for (const auto& [w, y] : p.terms()) {
        TKey k2 = k;
        k2.push_back(w);
        next.emplace_back(std::move(k2), x * y);
      }
    acc = std::move(next);
  }
  for (auto& [k, x] : acc) out.add(std::move(k), x);
}

void check_arity(const Tensor& x, int n) {
  if (!x.is_zero() && x.arity() != n)
    throw std::invalid_argument("arity mismatch: expected " + std::to_string(n) + ", got " + std::to_string(x.arity()));
}

}  // namespace

Tensor TensorPower::normalize(const Tensor& x) const {
  Tensor out(n_);
  for (const auto& [k, c] : x.terms()) {
    std::vector<Poly> slots;
    for (const auto& w : k) slots.push_back(B_.rules().normal_form(w));
    add_product_of_polys(out, slots, c);
  }
  return out;
}

Tensor TensorPower::embed(const Poly& p, int slot) const {
  Tensor out(n_);
  for (const auto& [w, c] : p.terms()) {
    TKey k(static_cast<std::size_t>(n_));
    k[static_cast<std::size_t>(slot)] = w;
    out.add(std::move(k), c);
  }
  return out;
}

Tensor TensorPower::mul_pure(const TKey& x, const TKey& y) const {
  const std::size_t n = x.size();
  if (n == 1) {
    Tensor out(1);
    Poly p = B_.rules().normal_form(x[0] + y[0]);
    for (const auto& [w, c] : p.terms()) out.add(TKey{w}, c);
    return out;
  }
  std::string key = key_string(x) + "#" + key_string(y);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
  }
  Tensor out(static_cast<int>(n));
  // (x1 (x) X')(y1 (x) Y') = sum x1 y1_0 (x) (X'_0 Y') r(X'_1 (x) y1_1)
  TKey xt(x.begin() + 1, x.end()), yt(y.begin() + 1, y.end());
  TensorPower sub(B_, static_cast<int>(n - 1), model_, mirror_);
  auto all_empty = [](const TKey& k) { return std::all_of(k.begin(), k.end(), [](const Word& w) { return w.empty(); }); };
  if (y[0].empty() || all_empty(xt)) {
    // the crossing term is trivial when y1 = 1 or X' = 1
    Poly head = B_.rules().normal_form(x[0] + y[0]);
    Tensor tail = sub.mul_pure(xt, yt);
    for (const auto& [hw, hc] : head.terms())
      for (const auto& [tk, tc] : tail.terms()) {
        TKey k;
        k.reserve(n);
        k.push_back(hw);
        k.insert(k.end(), tk.begin(), tk.end());
        out.add(std::move(k), hc * tc);
      }
    return out;
  }
  Tensor txp = sub.total_coaction(Tensor::pure(xt));
  Tensor ay = B_.adjoint_coaction(y[0]);
  const OqContext& O = B_.oq();
  for (const auto& [xk, xc] : txp.terms()) {
    TKey xpk(xk.begin(), xk.end() - 1);
    const Word& xo = xk.back();
    for (const auto& [yk, yc] : ay.terms()) {
      Laurent rv = O.r(xo, yk[1]);
      if (rv.is_zero()) continue;
      Laurent coef = xc * yc * rv;
      Poly head = B_.rules().normal_form(x[0] + yk[0]);
      Tensor tail = sub.mul_pure(xpk, yt);
      for (const auto& [hw, hc] : head.terms())
        for (const auto& [tk, tc] : tail.terms()) {
          TKey k;
          k.reserve(n);
          k.push_back(hw);
          k.insert(k.end(), tk.begin(), tk.end());
          out.add(std::move(k), coef * hc * tc);
        }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  mul_memo_.emplace(key, out);
  return out;
}

Tensor TensorPower::mul(const Tensor& x, const Tensor& y) const {
  check_arity(x, n_);
  check_arity(y, n_);
  Tensor out(n_);
  for (const auto& [xk, xc] : x.terms())
    for (const auto& [yk, yc] : y.terms()) out.add_scaled(mul_pure(xk, yk), xc * yc);
  return out;
}

Tensor TensorPower::total_coaction(const Tensor& x) const {
  check_arity(x, n_);
  Tensor out(n_ + 1);
  const RewriteSystem& OR = B_.oq().rules();
  for (const auto& [k, c] : x.terms()) {
    // running list of (B-legs, O-word product) pairs
    std::vector<std::pair<TKey, Poly>> acc{{TKey{}, Poly(1)}};
    for (const auto& w : k) {
      Tensor ad = B_.adjoint_coaction(w);
      std::vector<std::pair<TKey, Poly>> next;
      for (const auto& [bk, o] : acc)
        for (const auto& [ak, ac] : ad.terms()) {
          TKey k2 = bk;
          k2.push_back(ak[0]);
          next.emplace_back(std::move(k2), ac * (o * Poly::word(ak[1])));
        }
      acc = std::move(next);
    }
    for (auto& [bk, o] : acc) {
      Poly on = OR.normal_form(o);
      for (const auto& [ow, oc] : on.terms()) {
        TKey k2 = bk;
        k2.push_back(ow);
        out.add(std::move(k2), c * oc);
      }
    }
  }
  return out;
}

Tensor TensorPower::braided_total_coaction(const Tensor& x) const {
  check_arity(x, n_);
  // delta(x (x) X') = sum x0 (x) c(x1 (x) X'0) (x) X'1, coacting legs multiplied in B
  Tensor out(n_ + 1);
  for (const auto& [k, c] : x.terms()) {
    Tensor adb = B_.braided_adjoint(k[0]);
    if (n_ == 1) {
      for (const auto& [ak, ac] : adb.terms()) out.add(ak, c * ac);
      continue;
    }
    TensorPower sub(B_, n_ - 1, model_, mirror_);
    Tensor rest = sub.braided_total_coaction(Tensor::pure(TKey(k.begin() + 1, k.end())));
    for (const auto& [ak, ac] : adb.terms()) {
      // move the coacting leg ak[1] past the B-legs of rest
      for (const auto& [rk, rc] : rest.terms()) {
        // Psi0 moves ak[1] past rk[0..n-2] one factor at a time
        std::vector<std::tuple<TKey, Word, Laurent>> state{{TKey{}, ak[1], ac * rc}};
        for (std::size_t j = 0; j + 1 < rk.size(); ++j) {
          std::vector<std::tuple<TKey, Word, Laurent>> next;
          for (const auto& [pre, moving, coef] : state) {
            Tensor br = B_.braiding(moving, rk[j]);
            for (const auto& [bk, bc] : br.terms()) {
              TKey p2 = pre;
              p2.push_back(bk[0]);
              next.emplace_back(std::move(p2), bk[1], coef * bc);
            }
          }
          state = std::move(next);
        }
        for (const auto& [pre, moving, coef] : state) {
          Poly last = B_.rules().mul(moving, rk.back());
          for (const auto& [lw, lc] : last.terms()) {
            TKey k2;
            k2.push_back(ak[0]);
            k2.insert(k2.end(), pre.begin(), pre.end());
            k2.push_back(lw);
            out.add(std::move(k2), coef * lc);
          }
        }
      }
    }
  }
  return out;
}

Tensor TensorPower::psi0(const Tensor& x, int i, bool inverse) const {
  check_arity(x, n_);
  if (i < 0 || i + 1 >= n_) throw std::invalid_argument("psi0: factor index out of range");
  Tensor out(n_);
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& [k, c] : x.terms()) {
    Tensor br = inverse ? B_.braiding_inv(k[ui], k[ui + 1]) : B_.braiding(k[ui], k[ui + 1]);
    for (const auto& [bk, bc] : br.terms()) {
      TKey k2 = k;
      k2[ui] = bk[0];
      k2[ui + 1] = bk[1];
      out.add(std::move(k2), c * bc);
    }
  }
  return out;
}

// (p (x) q)(r (x) s) = p Psi0(q (x) r) s in the braided square
Tensor TensorPower::square_mul(const Tensor& x, const Tensor& y) const {
  Tensor out(2);
  for (const auto& [xk, xc] : x.terms())
    for (const auto& [yk, yc] : y.terms()) {
      const Tensor br = B_.braiding(xk[1], yk[0]);
      for (const auto& [bk, bc] : br.terms()) {
        const Poly left = B_.rules().mul(xk[0], bk[0]), right = B_.rules().mul(bk[1], yk[1]);
        const Laurent c = xc * yc * bc;
        for (const auto& [lw, lc] : left.terms())
          for (const auto& [rw, rc] : right.terms()) out.add(TKey{lw, rw}, c * lc * rc);
      }
    }
  return out;
}

Tensor TensorPower::crossing_pure(const Word& x, const Word& y, bool inverse) const {
  std::string key = x + "|" + y + (inverse ? "-" : "+");
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cross_memo_.find(key);
    if (it != cross_memo_.end()) return it->second;
  }
  Tensor out(2);
  if (model_ == BraidModel::YetterDrinfeld && inverse && x.size() + y.size() > 1) {
    // the inverse crossing is an algebra automorphism of the braided square, so
    // x (x) y = (x_1 (x) 1)...(x_k (x) 1)(1 (x) y_1)...(1 (x) y_m) maps letterwise;
    // this avoids the braided antipode of long words
    out = Tensor::unit(2);
    for (char l : x) out = square_mul(out, crossing_pure(Word(1, l), Word{}, inverse));
    for (char l : y) out = square_mul(out, crossing_pure(Word{}, Word(1, l), inverse));
  } else if (model_ == BraidModel::Psi0) {
    out = inverse ? B_.braiding_inv(x, y) : B_.braiding(x, y);
  } else if (!inverse) {
    // sum Psi0(x (x) y0) (1 (x) y1)
    Tensor adb = B_.braided_adjoint(y);
    for (const auto& [ak, ac] : adb.terms()) {
      Tensor br = B_.braiding(x, ak[0]);
      for (const auto& [bk, bc] : br.terms()) {
        Poly right = B_.rules().mul(bk[1], ak[1]);
        for (const auto& [rw, rc] : right.terms()) out.add(TKey{bk[0], rw}, ac * bc * rc);
      }
    }
  } else {
    // sum Psi0(x0 (x) S(x1) y) with Ad^B(x) = x0 (x) x1, S the braided antipode
    Tensor adb = B_.braided_adjoint(x);
    for (const auto& [ak, ac] : adb.terms()) {
      Poly prod = B_.mul(B_.transmuted_antipode(Poly::word(ak[1])), Poly::word(y));
      for (const auto& [pw, pc] : prod.terms()) out.add_scaled(B_.braiding(ak[0], pw), ac * pc);
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  cross_memo_.emplace(key, out);
  return out;
}

Tensor TensorPower::crossing(const Tensor& x, int i, bool inverse) const {
  check_arity(x, n_);
  if (i < 0 || i + 1 >= n_) throw std::invalid_argument("crossing: factor index out of range");
  Tensor out(n_);
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& [k, c] : x.terms()) {
    Tensor br = crossing_pure(k[ui], k[ui + 1], inverse);
    for (const auto& [bk, bc] : br.terms()) {
      TKey k2 = k;
      k2[ui] = bk[0];
      k2[ui + 1] = bk[1];
      out.add(std::move(k2), c * bc);
    }
  }
  return out;
}

Tensor TensorPower::braid_act(const BraidWord& w, const Tensor& x) const {
  if (w.strands != n_) throw std::invalid_argument("braid_act: braid on " + std::to_string(w.strands) + " strands, tensor arity " + std::to_string(n_));
  Tensor cur = x;
  // beta_* is applied letter by letter from the right
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = crossing(cur, it->index - 1, it->inverse != mirror_);
  return cur;
}

Tensor TensorPower::twist(const Tensor& x, bool inverse) const {
  const Functional& th = inverse ? B_.oq().theta_inv() : B_.oq().theta();
  Tensor out(n_);
  Tensor tx = total_coaction(x);
  for (const auto& [k, c] : tx.terms()) {
    Laurent v = th(k.back());
    if (v.is_zero()) continue;
    out.add(TKey(k.begin(), k.end() - 1), c * v);
  }
  return out;
}

Tensor TensorPower::braid_product(const Tensor& x, const Tensor& y) const {
  Tensor tx = total_coaction(x), ty = total_coaction(y);
  Tensor out(n_);
  const OqContext& O = B_.oq();
  for (const auto& [xk, xc] : tx.terms())
    for (const auto& [yk, yc] : ty.terms()) {
      Laurent rv = O.r(xk.back(), yk.back());
      if (rv.is_zero()) continue;
      out.add_scaled(mul_pure(TKey(yk.begin(), yk.end() - 1), TKey(xk.begin(), xk.end() - 1)), xc * yc * rv);
    }
  return out;
}

Tensor TensorPower::twisted_opposite_mul(const Tensor& x, const Tensor& y) const {
  check_arity(x, n_);
  check_arity(y, n_);
  return braid_product(twist(x), y);
}

}  // namespace qskein
