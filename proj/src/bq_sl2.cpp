#include "qskein/bq_sl2.hpp"

#include <stdexcept>

#include "qskein/linalg.hpp"

namespace qskein {

RewriteSystem bq_rules() {
  const Laurent q2 = Laurent::q(2), qm2 = Laurent::q(-2), qm4 = Laurent::q(-4);
  auto W = [](std::initializer_list<int> l) { return make_word(l); };
  std::vector<Rule> rules;
  rules.push_back({W({GB, GA}), Poly::word(W({GA, GB}), q2)});
  rules.push_back({W({GC, GA}), Poly::word(W({GA, GC}), qm2)});
  rules.push_back({W({GD, GA}), Poly::word(W({GA, GD}))});
  rules.push_back({W({GD, GB}), Poly::word(W({GB, GD})) + Poly::word(W({GA, GB}), 1 - qm2)});
  rules.push_back({W({GD, GC}), Poly::word(W({GC, GD})) + Poly::word(W({GA, GC}), qm4 - qm2)});
  rules.push_back({W({GC, GB}), Poly::word(W({GA, GD}), qm2) + Poly::word(Word{}, -qm2)});
  rules.push_back({W({GB, GC}), Poly::word(W({GA, GD})) + Poly::word(W({GA, GA}), qm2 - 1) + Poly::word(Word{}, -qm2)});
  return RewriteSystem({"a", "b", "c", "d"}, std::move(rules));
}

const std::array<ArcLabel, 4>& BqContext::dictionary() {
  // (a b; c d) -> (0 -A^{5/2}; A^{1/2} 0) (beta_{++} beta_{+-}; beta_{-+} beta_{--})
  static const std::array<ArcLabel, 4> d = {ArcLabel{-Laurent::v(5), "-+"}, ArcLabel{-Laurent::v(5), "--"},
                                            ArcLabel{Laurent::v(1), "++"}, ArcLabel{Laurent::v(1), "+-"}};
  return d;
}

BqContext::BqContext(const OqContext& O) : O_(O), rules_(std::make_shared<RewriteSystem>(bq_rules())) {}

namespace {
std::string pair_key(const Word& a, const Word& b) {
  std::string k = a;
  k.push_back('|');
  k += b;
  return k;
}
}  // namespace

// ---- O-coordinates ---------------------------------------------------------

Poly BqContext::transmuted_mul_o(const Word& u, const Word& w) const {
  const std::string key = pair_key(u, w);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = tmul_memo_.find(key);
    if (it != tmul_memo_.end()) return it->second;
  }
  const RewriteSystem& R = O_.rules();
  // sum x2 y2 r(S(x1) x3 (x) S(y1))
  std::vector<std::pair<Poly, Word>> ys;
  for (const auto& t : O_.coproduct_terms(w, 2)) ys.emplace_back(O_.antipode(t[0]), t[1]);
  Poly raw;
  for (const auto& t : O_.coproduct_terms(u, 3)) {
    Poly left = O_.antipode(t[0]) * Poly::word(t[2]);
    for (const auto& [sy, y2] : ys) {
      Laurent c = O_.r(left, sy);
      if (!c.is_zero()) raw.add(t[1] + y2, c);
    }
  }
  Poly out = R.normal_form(raw);
  std::lock_guard<std::mutex> lk(mu_);
  tmul_memo_.emplace(key, out);
  return out;
}

Poly BqContext::transmuted_mul_o(const Poly& x, const Poly& y) const {
  Poly out;
  for (const auto& [u, a] : x.terms())
    for (const auto& [w, b] : y.terms()) out.add_scaled(transmuted_mul_o(u, w), a * b);
  return out;
}

Poly BqContext::transmuted_antipode_o(const Poly& x) const {
  // sum S(x2) r(S^2(x3) S(x1) (x) x4)
  Poly out;
  for (const auto& [w, c] : x.terms())
    for (const auto& t : O_.coproduct_terms(w, 4)) {
      Poly left = O_.antipode(O_.antipode(t[2])) * O_.antipode(t[0]);
      Laurent rv = O_.r(left, Poly::word(t[3]));
      if (rv.is_zero()) continue;
      out.add_scaled(O_.antipode(t[1]), c * rv);
    }
  return out;
}

Tensor BqContext::adjoint_coaction_o(const Poly& x) const {
  Tensor out(2);
  const RewriteSystem& R = O_.rules();
  for (const auto& [w, c] : x.terms())
    for (const auto& t : O_.coproduct_terms(w, 3)) {
      Poly left = R.normal_form(t[1]);
      Poly right = R.normal_form(O_.antipode(t[0]) * Poly::word(t[2]));
      for (const auto& [u, a] : left.terms())
        for (const auto& [v, b] : right.terms()) out.add(TKey{u, v}, c * a * b);
    }
  return out;
}

Poly BqContext::to_o(const Word& w) const {
  if (w.size() <= 1) return Poly::word(w);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = to_o_memo_.find(w);
    if (it != to_o_memo_.end()) return it->second;
  }
  Poly head = to_o(w.substr(0, w.size() - 1));
  Poly out = transmuted_mul_o(head, Poly::word(w.substr(w.size() - 1)));
  std::lock_guard<std::mutex> lk(mu_);
  to_o_memo_.emplace(w, out);
  return out;
}

Poly BqContext::to_o(const Poly& x) const {
  Poly out;
  for (const auto& [w, c] : x.terms()) out.add_scaled(to_o(w), c);
  return out;
}

Poly BqContext::from_o(const Poly& p0) const {
  Poly p = p0, out;
  while (!p.is_zero()) {
    const Word w = p.terms().rbegin()->first;
    const Laurent c = p.terms().rbegin()->second;
    Poly img = to_o(w);
    if (img.is_zero() || img.terms().rbegin()->first != w || !img.terms().rbegin()->second.is_unit())
      throw std::logic_error("from_o: leading term of the image of " + rules_->word_str(w) + " is not a unit multiple of it");
    const Laurent& u = img.terms().rbegin()->second;
    // u = +-v^k, so c / u is exact
    Laurent f = (u.lead() > 0 ? c : -c).shifted(-u.low());
    out.add(w, f);
    p.add_scaled(img, -f);
  }
  return out;
}

// ---- B-coordinates ---------------------------------------------------------

Poly BqContext::transmuted_mul(const Poly& x, const Poly& y) const { return from_o(transmuted_mul_o(to_o(x), to_o(y))); }

Poly BqContext::transmuted_antipode(const Poly& x) const { return from_o(transmuted_antipode_o(to_o(x))); }

Tensor BqContext::coproduct(const Poly& x, int k) const {
  Tensor t = O_.coproduct(to_o(x), k);
  Tensor out(k);
  for (const auto& [key, c] : t.terms()) {
    std::vector<std::pair<TKey, Laurent>> acc{{TKey{}, c}};
    for (const auto& leg : key) {
      Poly b = from_o(Poly::word(leg));
      std::vector<std::pair<TKey, Laurent>> next;
      for (const auto& [k2, coef] : acc)
        for (const auto& [u, y] : b.terms()) {
          TKey k3 = k2;
          k3.push_back(u);
          next.emplace_back(std::move(k3), coef * y);
        }
      acc = std::move(next);
    }
    for (auto& [k2, coef] : acc) out.add(std::move(k2), coef);
  }
  return out;
}

Tensor BqContext::adjoint_coaction(const Word& w) const {
  if (w.empty()) return Tensor::pure(TKey{Word{}, Word{}});
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = ad_memo_.find(w);
    if (it != ad_memo_.end()) return it->second;
  }
  Tensor out(2);
  if (w.size() == 1) {
    // Ad(x_ij) = sum_{k,l} x_kl (x) S(x_ik) x_lj
    const int x = static_cast<unsigned char>(w[0]);
    const int i = x >> 1, j = x & 1;
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) {
        Poly right = O_.rules().normal_form(O_.antipode(make_word({2 * i + k})) * Poly::word(make_word({2 * l + j})));
        for (const auto& [u, c] : right.terms()) out.add(TKey{make_word({2 * k + l}), u}, c);
      }
  } else {
    // multiplicative: B-leg in B, O-leg in O
    Tensor head = adjoint_coaction(w.substr(0, w.size() - 1));
    Tensor last = adjoint_coaction(w.substr(w.size() - 1));
    for (const auto& [k1, c1] : head.terms())
      for (const auto& [k2, c2] : last.terms()) {
        Poly b = rules_->normal_form(k1[0] + k2[0]);
        Poly o = O_.rules().normal_form(k1[1] + k2[1]);
        Laurent c = c1 * c2;
        for (const auto& [u, x] : b.terms())
          for (const auto& [v, y] : o.terms()) out.add(TKey{u, v}, c * x * y);
      }
  }
  std::lock_guard<std::mutex> lk(mu_);
  ad_memo_.emplace(w, out);
  return out;
}

Tensor BqContext::adjoint_coaction(const Poly& x) const {
  Tensor out(2);
  for (const auto& [w, c] : x.terms()) out.add_scaled(adjoint_coaction(w), c);
  return out;
}

Tensor BqContext::braiding_direct(const Word& x, const Word& y) const {
  Tensor out(2);
  Tensor ax = adjoint_coaction(x), ay = adjoint_coaction(y);
  for (const auto& [kx, cx] : ax.terms())
    for (const auto& [ky, cy] : ay.terms()) {
      Laurent rv = O_.r(kx[1], ky[1]);
      if (rv.is_zero()) continue;
      out.add(TKey{ky[0], kx[0]}, cx * cy * rv);
    }
  return out;
}

Tensor BqContext::braiding_inv_direct(const Word& w, const Word& v) const {
  // Psi0^{-1}(w (x) v) = v0 (x) w0 rbar(v1 (x) w1)
  Tensor out(2);
  Tensor aw = adjoint_coaction(w), av = adjoint_coaction(v);
  for (const auto& [kw, cw] : aw.terms())
    for (const auto& [kv, cv] : av.terms()) {
      Laurent rv = O_.rbar(kv[1], kw[1]);
      if (rv.is_zero()) continue;
      out.add(TKey{kv[0], kw[0]}, cw * cv * rv);
    }
  return out;
}

// Longer words go through naturality of the braiding with respect to the
// product, one letter at a time:
//   Psi(x_h x_t (x) y) = (id (x) mu)(Psi (x) id)(id (x) Psi)(x_h (x) x_t (x) y)
//   Psi(x (x) y_h y_t) = (mu (x) id)(id (x) Psi)(Psi (x) id)(x (x) y_h (x) y_t)
// and the same for the inverse braiding.
Tensor BqContext::braiding_rec(const Word& x, const Word& y, bool inverse) const {
  auto& memo = inverse ? psi_inv_memo_ : psi_memo_;
  const std::string key = pair_key(x, y);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Tensor out(2);
  if (x.size() <= 1 && y.size() <= 1) {
    out = inverse ? braiding_inv_direct(x, y) : braiding_direct(x, y);
  } else if (x.size() > 1) {
    const Tensor first = braiding_rec(x.substr(1), y, inverse);
    for (const auto& [k, c] : first.terms()) {
      const Tensor second = braiding_rec(x.substr(0, 1), k[0], inverse);
      for (const auto& [k2, c2] : second.terms()) {
        const Poly p = rules_->mul(k2[1], k[1]);
        for (const auto& [w, cw] : p.terms()) out.add(TKey{k2[0], w}, c * c2 * cw);
      }
    }
  } else {
    const Tensor first = braiding_rec(x, y.substr(0, 1), inverse);
    for (const auto& [k, c] : first.terms()) {
      const Tensor second = braiding_rec(k[1], y.substr(1), inverse);
      for (const auto& [k2, c2] : second.terms()) {
        const Poly p = rules_->mul(k[0], k2[0]);
        for (const auto& [w, cw] : p.terms()) out.add(TKey{w, k2[1]}, c * c2 * cw);
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  memo.emplace(key, out);
  return out;
}

Tensor BqContext::braiding(const Word& x, const Word& y) const { return braiding_rec(x, y, false); }

Tensor BqContext::braiding_inv(const Word& w, const Word& v) const { return braiding_rec(w, v, true); }

Tensor BqContext::braided_adjoint_direct(const Word& w) const {
  Tensor out(2);
  Tensor cop = coproduct(Poly::word(w), 3);
  for (const auto& [k, c] : cop.terms()) {
    Poly s = transmuted_antipode(Poly::word(k[0]));
    for (const auto& [sw, sc] : s.terms()) {
      Tensor br = braiding(sw, k[1]);
      for (const auto& [bk, bc] : br.terms()) {
        Poly right = rules_->mul(bk[1], k[2]);
        Laurent coef = c * sc * bc;
        for (const auto& [u, x] : right.terms()) out.add(TKey{bk[0], u}, coef * x);
      }
    }
  }
  return out;
}

Tensor BqContext::braided_adjoint(const Word& w) const {
  if (w.empty()) return Tensor::pure(TKey{Word{}, Word{}});
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = adb_memo_.find(w);
    if (it != adb_memo_.end()) return it->second;
  }
  Tensor out(2);
  if (w.size() == 1) {
    out = braided_adjoint_direct(w);
  } else {
    // algebra map into B (x) B with the braided product:
    // (x0 (x) x1)(y0 (x) y1) = x0 y0' (x) x1' y1, Psi0(x1 (x) y0) = y0' (x) x1'
    Tensor ax = braided_adjoint(w.substr(0, 1));
    Tensor ay = braided_adjoint(w.substr(1));
    for (const auto& [xk, xc] : ax.terms())
      for (const auto& [yk, yc] : ay.terms()) {
        Tensor br = braiding(xk[1], yk[0]);
        for (const auto& [bk, bc] : br.terms()) {
          Poly l = rules_->mul(Poly::word(xk[0]), Poly::word(bk[0]));
          Poly r = rules_->mul(Poly::word(bk[1]), Poly::word(yk[1]));
          for (const auto& [lw, lc] : l.terms())
            for (const auto& [rw, rc] : r.terms()) out.add(TKey{lw, rw}, xc * yc * bc * lc * rc);
        }
      }
  }
  std::lock_guard<std::mutex> lk(mu_);
  adb_memo_.emplace(w, out);
  return out;
}

Tensor BqContext::braided_adjoint(const Poly& x) const {
  Tensor out(2);
  for (const auto& [w, c] : x.terms()) out.add_scaled(braided_adjoint(w), c);
  return out;
}

std::vector<Laurent> clear_denominators(const std::vector<Rational>& x) {
  Laurent l(1);
  for (const auto& e : x) {
    if (e.is_zero()) continue;
    Laurent g = laurent_gcd(l, e.den());
    l = laurent_divexact(l * e.den(), g);
  }
  SparseRow row;
  std::vector<Laurent> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out[i] = laurent_divexact(x[i].num() * l, x[i].den());
    row[static_cast<int>(i)] = out[i];
  }
  strip_content(row);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = row.count(static_cast<int>(i)) ? row[static_cast<int>(i)] : Laurent();
  return out;
}

std::vector<Poly> BqContext::quantum_trace(int degree) const {
  std::vector<Word> basis;
  for (int d = 0; d <= degree; ++d)
    for (auto& w : rules_->graded_basis(d)) basis.push_back(w);
  // columns: basis words; rows: tensor keys of Ad(x) - x (x) 1
  std::map<TKey, std::size_t> rowidx;
  std::vector<Tensor> cols;
  for (const auto& w : basis) {
    Tensor t = adjoint_coaction(w);
    t.add(TKey{w, Word{}}, -1);
    for (const auto& [k, c] : t.terms()) rowidx.try_emplace(k, rowidx.size());
    cols.push_back(std::move(t));
  }
  RMatrix M(rowidx.size(), std::vector<Rational>(basis.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : cols[j].terms()) M[rowidx[k]][j] = Rational(c);
  std::vector<Poly> out;
  if (rowidx.empty()) {
    for (const auto& w : basis) out.push_back(Poly::word(w));
    return out;
  }
  for (const auto& v : nullspace(std::move(M))) {
    auto lv = clear_denominators(v);
    Poly p;
    for (std::size_t j = 0; j < basis.size(); ++j) p.add(basis[j], lv[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace qskein
