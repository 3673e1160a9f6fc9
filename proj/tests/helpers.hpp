// Shared helpers for the test binaries.
#pragma once

#include <random>

#include "qskein/bq_sl2.hpp"
#include "qskein/tensor_power.hpp"

namespace qtest {

using namespace qskein;

inline Poly W(std::initializer_list<int> l, const Laurent& c = 1) { return Poly::word(make_word(l), c); }

inline std::vector<Poly> generators() {
  std::vector<Poly> g;
  for (int i = 0; i < 4; ++i) g.push_back(Poly::word(make_word({i})));
  return g;
}

// 1-3 terms, normal words of length <= degree, small integer coefficients
inline Poly random_element(const RewriteSystem& R, std::mt19937_64& rng, int degree) {
  std::vector<Word> pool;
  for (int d = 0; d <= degree; ++d)
    for (auto& w : R.graded_basis(d)) pool.push_back(w);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> c(1, 3), n(1, 3), sign(0, 1);
  Poly p;
  for (int i = n(rng); i > 0; --i) p.add(pool[pick(rng)], sign(rng) ? c(rng) : -c(rng));
  if (p.is_zero()) p = Poly(1);
  return p;
}

// componentwise product in a tensor product of algebras with the given rules
inline Tensor tensor_mul(const RewriteSystem& R, const Tensor& x, const Tensor& y) {
  Tensor out(x.arity());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      std::vector<std::pair<TKey, Laurent>> acc{{TKey{}, cx * cy}};
      for (std::size_t i = 0; i < kx.size(); ++i) {
        Poly p = R.mul(kx[i], ky[i]);
        std::vector<std::pair<TKey, Laurent>> next;
        for (auto& [k, c] : acc)
          for (const auto& [w, a] : p.terms()) {
            TKey k2 = k;
            k2.push_back(w);
            next.emplace_back(std::move(k2), c * a);
          }
        acc = std::move(next);
      }
      for (auto& [k, c] : acc) out.add(k, c);
    }
  return out;
}

inline Tensor one_leg(const Poly& p) {
  Tensor t(1);
  for (const auto& [w, c] : p.terms()) t.add(TKey{w}, c);
  return t;
}

// element of T^n: product of random elements placed in every slot
inline Tensor random_tensor(const TensorPower& T, std::mt19937_64& rng, int degree) {
  Tensor x = Tensor::unit(T.arity());
  for (int s = 0; s < T.arity(); ++s) x = T.mul(x, T.embed(random_element(T.bq().rules(), rng, degree), s));
  return x;
}

}  // namespace qtest
