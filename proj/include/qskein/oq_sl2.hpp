// The half-coribbon Hopf algebra O_q(SL2) on generators a, b, c, d
// (x11, x12, x21, x22; letter index 2i+j with i, j in {0, 1}).
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "qskein/nc_rewrite.hpp"
#include "qskein/tensor.hpp"

namespace qskein {

enum Gen : int { GA = 0, GB = 1, GC = 2, GD = 3 };

// How the 4x4 matrix R is read as a pairing of generators, together with the
// order of the two product laws.
//   Standard: r(x_ij (x) x_kl) = R[(k,i)][(j,l)],
//             r(uv (x) w) = r(u (x) w1) r(v (x) w2), r(u (x) vw) = r(u1 (x) w) r(u2 (x) v)
//   Swapped:  r(x_ij (x) x_kl) = R[(i,k)][(l,j)], both laws with legs exchanged
enum class RConvention { Standard, Swapped };

const char* to_string(RConvention c);
RConvention parse_rconvention(const std::string& s);

RewriteSystem oq_rules();

// 2^m x 2^m matrix indexed by row multi-index I and column multi-index J;
// entry (I, J) is the value on the word x_{i1 j1} ... x_{im jm}.
struct FMatrix {
  int m = 0;
  std::vector<Laurent> a;
  std::size_t n() const { return std::size_t{1} << m; }
  Laurent& at(std::size_t i, std::size_t j) { return a[i * n() + j]; }
  const Laurent& at(std::size_t i, std::size_t j) const { return a[i * n() + j]; }
};

// row and column multi-index of a word
std::pair<std::size_t, std::size_t> word_indices(const Word& w);
Word word_from_indices(std::size_t I, std::size_t J, int m);

// A linear functional on the free algebra over {a,b,c,d}, stored degree by
// degree. Convolution is matrix multiplication in each degree.
class Functional {
 public:
  using Builder = std::function<FMatrix(int m)>;
  explicit Functional(Builder b) : state_(std::make_shared<State>(std::move(b))) {}

  Laurent operator()(const Word& w) const;
  Laurent operator()(const Poly& p) const;
  const FMatrix& matrix(int m) const;

 private:
  struct State {
    explicit State(Builder b) : build(std::move(b)) {}
    Builder build;
    std::mutex mu;
    std::unordered_map<int, std::shared_ptr<const FMatrix>> cache;
  };
  std::shared_ptr<State> state_;
};

Functional convolve(const Functional& f, const Functional& g);
// throws std::domain_error if f(1) is not invertible or an inverse entry is
// not in Z[v^{+-1}]
Functional conv_inverse(const Functional& f, int degree = 0);

class OqContext {
 public:
  explicit OqContext(RConvention conv = RConvention::Standard);
  OqContext(const OqContext&) = delete;
  OqContext& operator=(const OqContext&) = delete;

  const RewriteSystem& rules() const { return *rules_; }
  RConvention convention() const { return conv_; }

  // k-fold coproduct of a word as unreduced tuples (2^{m(k-1)} of them)
  std::vector<std::vector<Word>> coproduct_terms(const Word& w, int k = 2) const;
  Tensor coproduct(const Poly& x, int k = 2) const;

  Laurent counit(const Word& w) const;
  Laurent counit(const Poly& x) const;
  Poly antipode(const Word& w) const;
  Poly antipode(const Poly& x) const;

  static const std::array<std::array<Laurent, 4>, 4>& r_matrix();
  Laurent r_generator(int x, int y) const;
  // r on arbitrary words (relations evaluate to zero)
  Laurent r(const Word& u, const Word& w) const;
  Laurent r(const Poly& x, const Poly& y) const;
  Laurent rbar(const Word& u, const Word& w) const;
  Laurent rbar(const Poly& x, const Poly& y) const;

  static const std::array<Laurent, 4>& t_table();
  const Functional& t() const { return t_; }
  const Functional& t_inv() const { return t_inv_; }
  const Functional& theta() const { return theta_; }
  const Functional& theta_inv() const { return theta_inv_; }
  Functional counit_functional() const;

  Laurent half_twist(const Poly& x) const { return t_(x); }
  Laurent cotwist(const Poly& x) const { return theta_(x); }

  Poly C_t(const Poly& x) const;
  // S after C_t; this order reproduces rot(b) = c, rot(c) = b
  Poly rot(const Poly& x) const { return antipode(C_t(x)); }

 private:
  FMatrix build_t(int m) const;

  RConvention conv_;
  std::shared_ptr<RewriteSystem> rules_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, Laurent> rmemo_;
  Functional t_, t_inv_, theta_, theta_inv_;
};

}  // namespace qskein
