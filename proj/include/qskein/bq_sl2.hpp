// The braided quantum group B_q(SL2): transmuted product and antipode, the
// presented rewrite system, adjoint and braided adjoint coactions.
//
// B_q(SL2) and O_q(SL2) share the underlying coalgebra. Elements of B_q are
// written in "B-coordinates": linear combinations of B-normal words, where a
// word w stands for the transmuted product of its letters. to_o / from_o
// convert to and from the underlying O_q element.
#pragma once

#include <array>
#include <mutex>
#include <string>
#include <unordered_map>

#include "qskein/oq_sl2.hpp"

namespace qskein {

RewriteSystem bq_rules();

struct ArcLabel {
  Laurent scale;
  std::string state;  // stated arc beta_{state}, e.g. "-+"
};

class BqContext {
 public:
  explicit BqContext(const OqContext& O);
  BqContext(const BqContext&) = delete;
  BqContext& operator=(const BqContext&) = delete;

  const OqContext& oq() const { return O_; }
  const RewriteSystem& rules() const { return *rules_; }

  // --- O-coordinates ---
  Poly transmuted_mul_o(const Poly& x, const Poly& y) const;
  Poly transmuted_antipode_o(const Poly& x) const;
  // Ad(x) = x2 (x) S(x1) x3, both legs O-normal
  Tensor adjoint_coaction_o(const Poly& x) const;

  Poly to_o(const Word& w) const;
  Poly to_o(const Poly& x) const;
  // throws std::logic_error if the leading term of some to_o(w) is not a unit
  // multiple of w
  Poly from_o(const Poly& p) const;

  // --- B-coordinates ---
  Poly mul(const Poly& x, const Poly& y) const { return rules_->mul(x, y); }
  // product through the transmutation formula, as a cross-check of mul
  Poly transmuted_mul(const Poly& x, const Poly& y) const;
  Poly transmuted_antipode(const Poly& x) const;
  Laurent counit(const Poly& x) const { return O_.counit(x); }
  Tensor coproduct(const Poly& x, int k = 2) const;

  // arity-2 tensor: B-leg (B-normal) and O-leg (O-normal)
  Tensor adjoint_coaction(const Word& w) const;
  Tensor adjoint_coaction(const Poly& x) const;

  // Psi0(x (x) y) = y0 (x) x0 r(x1 (x) y1) on B (x) B
  Tensor braiding(const Word& x, const Word& y) const;
  Tensor braiding_inv(const Word& x, const Word& y) const;
  // the defining formulas, without the letter-by-letter recursion
  Tensor braiding_direct(const Word& x, const Word& y) const;
  Tensor braiding_inv_direct(const Word& x, const Word& y) const;

  // Ad^B(x) = (id (x) mu)(Psi0 (x) id)(S(x1) (x) x2 (x) x3), in B (x) B
  Tensor braided_adjoint(const Word& w) const;
  Tensor braided_adjoint(const Poly& x) const;
  // the defining formula, without the multiplicative shortcut
  Tensor braided_adjoint_direct(const Word& w) const;

  // basis of Ad-coinvariants among B-words of length <= degree
  std::vector<Poly> quantum_trace(int degree) const;

  static const std::array<ArcLabel, 4>& dictionary();

 private:
  Poly transmuted_mul_o(const Word& u, const Word& w) const;
  Tensor braiding_rec(const Word& x, const Word& y, bool inverse) const;

  const OqContext& O_;
  std::shared_ptr<RewriteSystem> rules_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, Poly> to_o_memo_;
  mutable std::unordered_map<Word, Tensor> ad_memo_;
  mutable std::unordered_map<std::string, Tensor> psi_memo_, psi_inv_memo_;
  mutable std::unordered_map<Word, Tensor> adb_memo_;
  mutable std::unordered_map<std::string, Poly> tmul_memo_;
};

// Converts a Q(v) vector to a primitive Z[v^{+-1}] vector spanning the same line.
std::vector<Laurent> clear_denominators(const std::vector<Rational>& x);

}  // namespace qskein
