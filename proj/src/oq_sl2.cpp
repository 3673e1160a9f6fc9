#include "qskein/oq_sl2.hpp"

#include <stdexcept>

#include "qskein/linalg.hpp"

namespace qskein {

const char* to_string(RConvention c) { return c == RConvention::Standard ? "standard" : "swapped"; }

RConvention parse_rconvention(const std::string& s) {
  if (s == "standard") return RConvention::Standard;
  if (s == "swapped") return RConvention::Swapped;
  throw std::invalid_argument("unknown r-convention '" + s + "' (expected standard or swapped)");
}

RewriteSystem oq_rules() {
  const Laurent q = Laurent::q(1), q2 = Laurent::q(2);
  auto W = [](std::initializer_list<int> l) { return make_word(l); };
  std::vector<Rule> rules;
  rules.push_back({W({GB, GA}), Poly::word(W({GA, GB}), q)});
  rules.push_back({W({GC, GA}), Poly::word(W({GA, GC}), q)});
  rules.push_back({W({GC, GB}), Poly::word(W({GB, GC}))});
  rules.push_back({W({GD, GB}), Poly::word(W({GB, GD}), q)});
  rules.push_back({W({GD, GC}), Poly::word(W({GC, GD}), q)});
  rules.push_back({W({GB, GC}), Poly::word(W({GA, GD}), q) + Poly::word(Word{}, -q)});
  rules.push_back({W({GD, GA}), Poly::word(W({GA, GD}), q2) + Poly::word(Word{}, 1 - q2)});
  return RewriteSystem({"a", "b", "c", "d"}, std::move(rules));
}

std::pair<std::size_t, std::size_t> word_indices(const Word& w) {
  std::size_t I = 0, J = 0;
  for (char ch : w) {
    int x = static_cast<unsigned char>(ch);
    I = 2 * I + static_cast<std::size_t>(x >> 1);
    J = 2 * J + static_cast<std::size_t>(x & 1);
  }
  return {I, J};
}

Word word_from_indices(std::size_t I, std::size_t J, int m) {
  Word w(static_cast<std::size_t>(m), '\0');
  for (int p = m - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<char>(2 * (I & 1) + (J & 1));
    I >>= 1;
    J >>= 1;
  }
  return w;
}

// ---- Functional ------------------------------------------------------------

const FMatrix& Functional::matrix(int m) const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    auto it = state_->cache.find(m);
    if (it != state_->cache.end()) return *it->second;
  }
  auto built = std::make_shared<const FMatrix>(state_->build(m));
  std::lock_guard<std::mutex> lk(state_->mu);
  auto [it, fresh] = state_->cache.emplace(m, built);
  return *it->second;
}

Laurent Functional::operator()(const Word& w) const {
  auto [I, J] = word_indices(w);
  return matrix(static_cast<int>(w.size())).at(I, J);
}

Laurent Functional::operator()(const Poly& p) const {
  Laurent s;
  for (const auto& [w, c] : p.terms()) s.add_product(c, (*this)(w));
  return s;
}

Functional convolve(const Functional& f, const Functional& g) {
  return Functional([f, g](int m) {
    const FMatrix& F = f.matrix(m);
    const FMatrix& G = g.matrix(m);
    FMatrix out{m, std::vector<Laurent>(F.a.size())};
    const std::size_t n = F.n();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (F.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) out.at(i, j).add_product(F.at(i, k), G.at(k, j));
      }
    return out;
  });
}

Functional conv_inverse(const Functional& f, int degree) {
  if (f.matrix(0).at(0, 0).is_zero()) throw std::domain_error("conv_inverse: f(1) is not invertible");
  Functional g([f](int m) {
    const FMatrix& F = f.matrix(m);
    const std::size_t n = F.n();
    RMatrix M(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M[i][j] = Rational(F.at(i, j));
    auto inv = invert(std::move(M));
    if (!inv) throw std::domain_error("conv_inverse: singular in degree " + std::to_string(m));
    FMatrix out{m, std::vector<Laurent>(n * n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = (*inv)[i][j].to_laurent();
    return out;
  });
  for (int m = 0; m <= degree; ++m) g.matrix(m);
  return g;
}

// ---- OqContext -------------------------------------------------------------

OqContext::OqContext(RConvention conv)
    : conv_(conv),
      rules_(std::make_shared<RewriteSystem>(oq_rules())),
      t_([this](int m) { return build_t(m); }),
      t_inv_(conv_inverse(t_)),
      theta_(convolve(t_, t_)),
      theta_inv_(conv_inverse(theta_)) {}

std::vector<std::vector<Word>> OqContext::coproduct_terms(const Word& w, int k) const {
  const int m = static_cast<int>(w.size());
  auto [I, J] = word_indices(w);
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::vector<Word>> out;
  std::vector<std::size_t> mid(static_cast<std::size_t>(k - 1), 0);
  for (;;) {
    std::vector<Word> legs;
    legs.reserve(static_cast<std::size_t>(k));
    std::size_t prev = I;
    for (int s = 0; s < k; ++s) {
      std::size_t next = s + 1 < k ? mid[static_cast<std::size_t>(s)] : J;
      legs.push_back(word_from_indices(prev, next, m));
      prev = next;
    }
    out.push_back(std::move(legs));
    int p = k - 2;
    while (p >= 0 && ++mid[static_cast<std::size_t>(p)] == n) mid[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return out;
}

Tensor OqContext::coproduct(const Poly& x, int k) const {
  Tensor out(k);
  for (const auto& [w, c] : x.terms()) {
    for (const auto& legs : coproduct_terms(w, k)) {
      // expand the product of the normalized legs
      std::vector<std::pair<TKey, Laurent>> acc{{TKey{}, c}};
      for (const auto& leg : legs) {
        Poly nf = rules_->normal_form(leg);
        std::vector<std::pair<TKey, Laurent>> next;
        for (const auto& [key, coef] : acc)
          for (const auto& [u, y] : nf.terms()) {
            TKey k2 = key;
            k2.push_back(u);
            next.emplace_back(std::move(k2), coef * y);
          }
        acc = std::move(next);
      }
      for (auto& [key, coef] : acc) out.add(std::move(key), coef);
    }
  }
  return out;
}

Laurent OqContext::counit(const Word& w) const {
  for (char ch : w)
    if (ch == GB || ch == GC) return Laurent();
  return Laurent(1);
}

Laurent OqContext::counit(const Poly& x) const {
  Laurent s;
  for (const auto& [w, c] : x.terms())
    if (!counit(w).is_zero()) s += c;
  return s;
}

Poly OqContext::antipode(const Word& w) const {
  static const Poly S[4] = {Poly::word(make_word({GD})), Poly::word(make_word({GB}), -Laurent::q(1)),
                            Poly::word(make_word({GC}), -Laurent::q(-1)), Poly::word(make_word({GA}))};
  Poly out(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = out * S[static_cast<unsigned char>(*it)];
  return rules_->normal_form(out);
}

Poly OqContext::antipode(const Poly& x) const {
  Poly out;
  for (const auto& [w, c] : x.terms()) out.add_scaled(antipode(w), c);
  return out;
}

const std::array<std::array<Laurent, 4>, 4>& OqContext::r_matrix() {
  static const std::array<std::array<Laurent, 4>, 4> R = [] {
    const Laurent v2 = Laurent::v(2), vm2 = Laurent::v(-2);
    std::array<std::array<Laurent, 4>, 4> m{};
    m[0][0] = v2;
    m[1][2] = vm2;
    m[2][1] = vm2;
    m[2][2] = v2 - Laurent::v(-6);
    m[3][3] = v2;
    return m;
  }();
  return R;
}

Laurent OqContext::r_generator(int x, int y) const {
  const int i = x >> 1, j = x & 1, k = y >> 1, l = y & 1;
  const auto& R = r_matrix();
  if (conv_ == RConvention::Standard) return R[static_cast<std::size_t>(2 * k + i)][static_cast<std::size_t>(2 * j + l)];
  return R[static_cast<std::size_t>(2 * i + k)][static_cast<std::size_t>(2 * l + j)];
}

Laurent OqContext::r(const Word& u, const Word& w) const {
  if (u.empty()) return counit(w);
  if (w.empty()) return counit(u);
  if (u.size() == 1 && w.size() == 1) return r_generator(static_cast<unsigned char>(u[0]), static_cast<unsigned char>(w[0]));
  std::string key = u;
  key.push_back('|');
  key += w;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = rmemo_.find(key);
    if (it != rmemo_.end()) return it->second;
  }
  const bool swapped = conv_ == RConvention::Swapped;
  Laurent res;
  if (u.size() > 1) {
    Word head = u.substr(0, u.size() - 1), last = u.substr(u.size() - 1);
    for (const auto& t : coproduct_terms(w, 2)) {
      const Word& w1 = swapped ? t[1] : t[0];
      const Word& w2 = swapped ? t[0] : t[1];
      Laurent a = r(head, w1);
      if (a.is_zero()) continue;
      res.add_product(a, r(last, w2));
    }
  } else {
    Word first = w.substr(0, 1), tail = w.substr(1);
    for (const auto& t : coproduct_terms(u, 2)) {
      Laurent a = swapped ? r(t[0], first) : r(t[0], tail);
      if (a.is_zero()) continue;
      res.add_product(a, swapped ? r(t[1], tail) : r(t[1], first));
    }
  }
  std::lock_guard<std::mutex> lk(mu_);
  rmemo_.emplace(std::move(key), res);
  return res;
}

Laurent OqContext::r(const Poly& x, const Poly& y) const {
  Laurent s;
  for (const auto& [u, a] : x.terms())
    for (const auto& [w, b] : y.terms()) {
      Laurent v = r(u, w);
      if (!v.is_zero()) s.add_product(a * b, v);
    }
  return s;
}

Laurent OqContext::rbar(const Word& u, const Word& w) const { return r(antipode(u), Poly::word(w)); }

Laurent OqContext::rbar(const Poly& x, const Poly& y) const { return r(antipode(x), y); }

const std::array<Laurent, 4>& OqContext::t_table() {
  static const std::array<Laurent, 4> t = {Laurent(), -Laurent::v(5), Laurent::v(1), Laurent()};
  return t;
}

FMatrix OqContext::build_t(int m) const {
  FMatrix T{m, std::vector<Laurent>(std::size_t{1} << (2 * m))};
  if (m == 0) {
    T.at(0, 0) = 1;
    return T;
  }
  const auto& tt = t_table();
  if (m == 1) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) T.at(i, j) = tt[2 * i + j];
    return T;
  }
  // t(x w) = sum t(x1) t(w1) r(x2 (x) w2) with x a generator
  const FMatrix& Tp = t_.matrix(m - 1);
  const std::size_t np = Tp.n();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      const Laurent& t1 = tt[2 * i + k];
      if (t1.is_zero()) continue;
      for (std::size_t Ip = 0; Ip < np; ++Ip)
        for (std::size_t Kp = 0; Kp < np; ++Kp) {
          const Laurent& t2 = Tp.at(Ip, Kp);
          if (t2.is_zero()) continue;
          Laurent c = t1 * t2;
          for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t Jp = 0; Jp < np; ++Jp) {
              Laurent rv = r(make_word({static_cast<int>(2 * k + j)}), word_from_indices(Kp, Jp, m - 1));
              if (rv.is_zero()) continue;
              T.at(i * np + Ip, j * np + Jp).add_product(c, rv);
            }
        }
    }
  return T;
}

Functional OqContext::counit_functional() const {
  return Functional([](int m) {
    FMatrix E{m, std::vector<Laurent>(std::size_t{1} << (2 * m))};
    for (std::size_t i = 0; i < E.n(); ++i) E.at(i, i) = 1;
    return E;
  });
}

Poly OqContext::C_t(const Poly& x) const {
  Poly out;
  for (const auto& [w, c] : x.terms())
    for (const auto& legs : coproduct_terms(w, 3)) {
      Laurent a = t_(legs[0]);
      if (a.is_zero()) continue;
      Laurent b = t_inv_(legs[2]);
      if (b.is_zero()) continue;
      out.add_scaled(rules_->normal_form(legs[1]), c * a * b);
    }
  return out;
}

}  // namespace qskein
