// Braided tensor powers of B_q(SL2): multiplication, total coaction, twist,
// the twisted opposite product and the braid group action.
#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qskein/bq_sl2.hpp"

namespace qskein {

struct BraidLetter {
  int index;  // 1-based generator index
  bool inverse;
};

struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;
  std::string str() const;
};

// How a crossing acts on two adjacent factors.
//   YetterDrinfeld: s(x (x) y) = sum Psi0(x (x) y0)(1 (x) y1) with Ad^B(y) = y0 (x) y1,
//     inverse s^-1(x (x) y) = sum Psi0(x0 (x) S(x1) y). An algebra automorphism;
//     at v = 1 it is the pullback of the Artin generator inverse.
//   Psi0: the bare braiding of the comodule category. Satisfies the braid
//     relation but is not multiplicative, and is the flip at v = 1.
enum class BraidModel { YetterDrinfeld, Psi0 };

class TensorPower {
 public:
  TensorPower(const BqContext& B, int n, BraidModel model = BraidModel::YetterDrinfeld, bool mirror = false);
  TensorPower(const TensorPower&) = delete;
  TensorPower& operator=(const TensorPower&) = delete;

  int arity() const { return n_; }
  const BqContext& bq() const { return B_; }
  bool mirror() const { return mirror_; }
  BraidModel model() const { return model_; }

  // normalizes each factor in B
  Tensor normalize(const Tensor& x) const;

  Tensor mul(const Tensor& x, const Tensor& y) const;
  // arity n+1: the last leg is the O-leg
  Tensor total_coaction(const Tensor& x) const;
  // braided coaction: arity n+1, last leg a B-word; built from Ad^B of each
  // factor, with the coacting legs multiplied in the braided tensor product
  Tensor braided_total_coaction(const Tensor& x) const;

  // Psi0 on factors (i, i+1), 0-based
  Tensor psi0(const Tensor& x, int i, bool inverse = false) const;
  // crossing action on factors (i, i+1) in the chosen model, before mirroring
  Tensor crossing(const Tensor& x, int i, bool inverse) const;
  Tensor braid_act(const BraidWord& w, const Tensor& x) const;

  Tensor twist(const Tensor& x, bool inverse = false) const;
  // psi(X (x) Y) = Y0 (x) X0 r(X1 (x) Y1), returned as the product Y0 X0
  Tensor braid_product(const Tensor& x, const Tensor& y) const;
  // mu^top(x, y) = mu(psi(theta(x) (x) y))
  Tensor twisted_opposite_mul(const Tensor& x, const Tensor& y) const;

  // factor embedding: word w in slot i, units elsewhere
  Tensor embed(const Poly& p, int slot) const;

 private:
  Tensor mul_pure(const TKey& x, const TKey& y) const;
  Tensor crossing_pure(const Word& x, const Word& y, bool inverse) const;
  Tensor square_mul(const Tensor& x, const Tensor& y) const;

  const BqContext& B_;
  int n_;
  BraidModel model_;
  bool mirror_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, Tensor> mul_memo_;
  mutable std::unordered_map<std::string, Tensor> cross_memo_;
};

std::string key_string(const TKey& k);

}  // namespace qskein
