#include <doctest.h>

#include <algorithm>
#include <array>

#include "helpers.hpp"

using namespace qskein;
using qtest::W;

namespace {
struct Ctx {
  OqContext O;
  BqContext B{O};
  TensorPower T1{B, 1}, T2{B, 2}, T3{B, 3};
  TensorPower P3{B, 3, BraidModel::Psi0};
};
const Ctx& ctx() {
  static Ctx c;
  return c;
}

BraidWord braid(int n, std::initializer_list<int> letters) {
  BraidWord b;
  b.strands = n;
  for (int l : letters) b.letters.push_back({std::abs(l), l < 0});
  return b;
}

Tensor pure(std::initializer_list<Word> legs) { return Tensor::pure(TKey(legs)); }
Word L(int g) { return make_word({g}); }

// (delta (x) id) delta and (id (x) Delta) delta for the total coaction
Tensor coaction_twice(const TensorPower& T, const Tensor& x) {
  const int n = T.arity();
  Tensor out(n + 2);
  for (const Tensor d = T.total_coaction(x); const auto& [k, c] : d.terms()) {
    TKey head(k.begin(), k.begin() + n);
    for (const Tensor d2 = T.total_coaction(Tensor::pure(head)); const auto& [k2, c2] : d2.terms()) {
      TKey nk = k2;
      nk.push_back(k[static_cast<std::size_t>(n)]);
      out.add(nk, c * c2);
    }
  }
  return out;
}
Tensor coaction_then_coproduct(const TensorPower& T, const Tensor& x) {
  const int n = T.arity();
  const auto& O = T.bq().oq();
  Tensor out(n + 2);
  for (const Tensor d = T.total_coaction(x); const auto& [k, c] : d.terms()) {
    for (const Tensor d2 = O.coproduct(Poly::word(k[static_cast<std::size_t>(n)])); const auto& [k2, c2] : d2.terms()) {
      TKey nk(k.begin(), k.begin() + n);
      nk.push_back(k2[0]);
      nk.push_back(k2[1]);
      out.add(nk, c * c2);
    }
  }
  return out;
}

// every tensor of single letters (or units) at arity n
std::vector<Tensor> letter_tensors(int n, bool with_unit) {
  std::vector<Tensor> out{Tensor::unit(n)};
  const int lo = with_unit ? -1 : 0;
  std::vector<int> idx(static_cast<std::size_t>(n), lo);
  out.clear();
  for (;;) {
    TKey k;
    for (int i : idx) k.push_back(i < 0 ? Word{} : L(i));
    out.push_back(Tensor::pure(k));
    int s = n - 1;
    while (s >= 0 && ++idx[static_cast<std::size_t>(s)] == 4) idx[static_cast<std::size_t>(s--)] = lo;
    if (s < 0) return out;
  }
}

using Mat = std::array<long, 4>;
long md(long x, long p) { return ((x % p) + p) % p; }
Mat mm(const Mat& x, const Mat& y, long p) {
  return {md(x[0] * y[0] + x[1] * y[2], p), md(x[0] * y[1] + x[1] * y[3], p), md(x[2] * y[0] + x[3] * y[2], p),
          md(x[2] * y[1] + x[3] * y[3], p)};
}
Mat minv(const Mat& x, long p) { return {x[3], md(-x[1], p), md(-x[2], p), x[0]}; }
// generator matrix C gamma with C = (0 -1; 1 0)
Mat chart(const Mat& g, long p) { return {md(-g[2], p), md(-g[3], p), g[0], g[1]}; }

// value at v = 1 of a tensor read as a commutative polynomial in the entries
long eval_at(const Tensor& t, const std::vector<Mat>& X, long p) {
  long s = 0;
  for (const auto& [k, c] : t.terms()) {
    long m = specialize_mod(c, p);
    for (std::size_t f = 0; f < k.size(); ++f)
      for (char g : k[f]) m = m * X[f][static_cast<std::size_t>(g)] % p;
    s += m;
  }
  return md(s, p);
}
}  // namespace

TEST_CASE("Psi0 on unit legs and inverse") {
  const auto& T = ctx().T2;
  const auto& B = ctx().B;
  for (int g = 0; g < 4; ++g) {
    CHECK(T.psi0(pure({Word{}, L(g)}), 0) == pure({L(g), Word{}}));
    CHECK(T.psi0(pure({L(g), Word{}}), 0) == pure({Word{}, L(g)}));
  }
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Tensor x = T.mul(T.embed(qtest::random_element(B.rules(), rng, 1), 0), T.embed(qtest::random_element(B.rules(), rng, 1), 1));
    CHECK(T.psi0(T.psi0(x, 0), 0, true) == x);
    CHECK(T.psi0(T.psi0(x, 0, true), 0) == x);
  }
}

TEST_CASE("braided tensor product") {
  const auto& T = ctx().T2;
  CHECK(T.mul(pure({L(GA), Word{}}), pure({Word{}, L(GB)})) == pure({L(GA), L(GB)}));
  CHECK(T.mul(pure({Word{}, L(GB)}), pure({L(GA), Word{}})) == T.psi0(pure({L(GB), L(GA)}), 0));
  CHECK_THROWS_AS(T.mul(Tensor::unit(2), Tensor::unit(3)), std::invalid_argument);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    Tensor x = qtest::random_tensor(T, rng, 1), y = qtest::random_tensor(T, rng, 1), z = qtest::random_tensor(T, rng, 1);
    CHECK(T.mul(T.mul(x, y), z) == T.mul(x, T.mul(y, z)));
  }
}

TEST_CASE("twist") {
  const auto& c = ctx();
  for (const TensorPower* T : {&c.T1, &c.T2}) CHECK(T->twist(Tensor::unit(T->arity())) == Tensor::unit(T->arity()));
  // theta(a) at n = 1 from Ad(a) and the cotwist table
  Tensor expect(1);
  for (const Tensor ad = c.B.adjoint_coaction(W({GA})); const auto& [k, x] : ad.terms())
    expect.add({k[0]}, x * c.O.cotwist(Poly::word(k[1])));
  CHECK(c.T1.twist(pure({L(GA)})) == expect);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    Tensor x = qtest::random_tensor(c.T2, rng, 1);
    CHECK(c.T2.twist(c.T2.twist(x), true) == x);
    CHECK(c.T2.twist(c.T2.twist(x, true)) == x);
  }
}

TEST_CASE("twisted opposite product unit laws") {
  const auto& c = ctx();
  std::mt19937_64 rng(24);
  for (const TensorPower* T : {&c.T1, &c.T2}) {
    const Tensor one = Tensor::unit(T->arity());
    for (int i = 0; i < 20; ++i) {
      Tensor x = qtest::random_tensor(*T, rng, 1);
      CHECK(T->twisted_opposite_mul(one, x) == x);
      CHECK(T->twisted_opposite_mul(x, one) == T->twist(x));
    }
  }
  CHECK_THROWS_AS(c.T1.twisted_opposite_mul(Tensor::unit(1), Tensor::unit(2)), std::invalid_argument);
}

TEST_CASE("braid product at n = 1 agrees with Psi0 followed by the product") {
  const auto& c = ctx();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      Tensor s = c.T2.psi0(pure({L(x), L(y)}), 0);
      Tensor prod(1);
      for (const auto& [k, v] : s.terms()) prod.add_scaled(qtest::one_leg(c.B.mul(Poly::word(k[0]), Poly::word(k[1]))), v);
      CHECK(c.T1.braid_product(pure({L(x)}), pure({L(y)})) == prod);
    }
}

TEST_CASE("total coaction") {
  const auto& c = ctx();
  CHECK(c.T2.total_coaction(Tensor::unit(2)) == Tensor::unit(3));
  for (int g = 0; g < 4; ++g) CHECK(c.T1.total_coaction(pure({L(g)})) == c.B.adjoint_coaction(W({g})));
  std::mt19937_64 rng(25);
  for (int i = 0; i < 15; ++i) {
    Tensor x = qtest::random_tensor(c.T2, rng, 1);
    CHECK(coaction_twice(c.T2, x) == coaction_then_coproduct(c.T2, x));
  }
}

TEST_CASE("braid action") {
  const auto& c = ctx();
  std::mt19937_64 rng(26);
  for (int i = 0; i < 20; ++i) {
    Tensor x = qtest::random_tensor(c.T2, rng, 1);
    CHECK(c.T2.braid_act(braid(2, {1, -1}), x) == x);
    CHECK(c.T2.braid_act(braid(2, {-1, 1}), x) == x);
  }
  CHECK_THROWS_AS(c.T2.braid_act(braid(3, {1}), Tensor::unit(2)), std::invalid_argument);
  for (const TensorPower* T : {&c.T3, &c.P3}) {
    for (const auto& x : letter_tensors(3, false))
      CHECK(T->braid_act(braid(3, {1, 2, 1}), x) == T->braid_act(braid(3, {2, 1, 2}), x));
    for (int i = 0; i < 10; ++i) {
      Tensor x = qtest::random_tensor(*T, rng, 1);
      CHECK(T->braid_act(braid(3, {1, 2, 1}), x) == T->braid_act(braid(3, {2, 1, 2}), x));
    }
  }
  // the Yetter-Drinfeld crossing is an algebra automorphism
  for (int i = 0; i < 20; ++i) {
    Tensor x = qtest::random_tensor(c.T2, rng, 1), y = qtest::random_tensor(c.T2, rng, 1);
    const auto s = braid(2, {1});
    CHECK(c.T2.braid_act(s, c.T2.mul(x, y)) == c.T2.mul(c.T2.braid_act(s, x), c.T2.braid_act(s, y)));
  }
}

TEST_CASE("twist is natural for the braid action") {
  const auto& c = ctx();
  std::mt19937_64 rng(27);
  for (int gen : {1, -1}) {
    const auto s = braid(2, {gen});
    for (int i = 0; i < 10; ++i) {
      Tensor x = qtest::random_tensor(c.T2, rng, 1);
      CHECK(c.T2.twist(c.T2.braid_act(s, x)) == c.T2.braid_act(s, c.T2.twist(x)));
    }
  }
}

TEST_CASE("mirror swaps the crossings") {
  const auto& c = ctx();
  TensorPower M(c.B, 2, BraidModel::YetterDrinfeld, true);
  for (const auto& x : letter_tensors(2, true)) {
    CHECK(M.braid_act(braid(2, {1}), x) == c.T2.braid_act(braid(2, {-1}), x));
    CHECK(M.braid_act(braid(2, {-1}), x) == c.T2.braid_act(braid(2, {1}), x));
  }
}

TEST_CASE("degree bookkeeping") {
  const auto& c = ctx();
  std::mt19937_64 rng(28);
  for (int i = 0; i < 20; ++i) {
    Tensor x = qtest::random_tensor(c.T2, rng, 1), y = qtest::random_tensor(c.T2, rng, 1);
    CHECK(c.T2.mul(x, y).degree() <= x.degree() + y.degree());
    CHECK(c.T2.psi0(x, 0).degree() <= x.degree());
    CHECK(c.T2.twist(x).degree() <= x.degree());
    CHECK(c.T2.twisted_opposite_mul(x, y).degree() <= x.degree() + y.degree());
  }
}

TEST_CASE("at v = 1 the crossing is the pullback of the Artin generator inverse") {
  const auto& c = ctx();
  const long p = 5;
  std::mt19937_64 rng(29);
  std::vector<Mat> els;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long cc = 0; cc < p; ++cc)
        for (long d = 0; d < p; ++d)
          if (md(a * d - b * cc, p) == 1) els.push_back({a, b, cc, d});
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Mat g1 = els[pick(rng)], g2 = els[pick(rng)];
    const std::vector<Mat> X{chart(g1, p), chart(g2, p)};
    // sigma_1^-1 on the free group, x1 -> x2, x2 -> x2^-1 x1 x2, applied to the generator matrices
    const std::vector<Mat> Y{X[1], mm(mm(minv(X[1], p), X[0], p), X[1], p)};
    for (int slot = 0; slot < 2; ++slot)
      for (int e = 0; e < 4; ++e) {
        Tensor img = c.T2.braid_act(braid(2, {1}), c.T2.embed(W({e}), slot));
        CHECK(eval_at(img, X, p) == Y[static_cast<std::size_t>(slot)][static_cast<std::size_t>(e)]);
      }
  }
}

TEST_CASE("crossing agrees with its defining formula") {
  const auto& c = ctx();
  const auto& B = c.B;
  std::vector<Word> words;
  for (int d = 0; d <= 2; ++d)
    for (const auto& w : B.rules().graded_basis(d)) words.push_back(w);
  std::mt19937_64 rng(30);
  std::shuffle(words.begin(), words.end(), rng);
  words.resize(12);
  for (const auto& x : words)
    for (const auto& y : words) {
      // sigma(x (x) y) = sum Psi0(x (x) y0)(1 (x) y1) with Ad^B(y) = y0 (x) y1
      Tensor fwd(2);
      for (const Tensor adb = B.braided_adjoint(y); const auto& [ak, ac] : adb.terms())
        for (const Tensor br = B.braiding(x, ak[0]); const auto& [bk, bc] : br.terms())
          for (const Poly right = B.mul(Poly::word(bk[1]), Poly::word(ak[1])); const auto& [rw, rc] : right.terms())
            fwd.add({bk[0], rw}, ac * bc * rc);
      CHECK(c.T2.crossing(Tensor::pure({x, y}), 0, false) == fwd);
      // sigma^-1(x (x) y) = sum Psi0(x0 (x) S(x1) y) with the braided antipode;
      // the antipode of long words is slow, so x stays short here
      if (x.size() > 1) continue;
      Tensor inv(2);
      for (const Tensor adb = B.braided_adjoint(x); const auto& [ak, ac] : adb.terms())
        for (const Poly prod = B.mul(B.transmuted_antipode(Poly::word(ak[1])), Poly::word(y));
             const auto& [pw, pc] : prod.terms())
          inv.add_scaled(B.braiding(ak[0], pw), ac * pc);
      CHECK(c.T2.crossing(Tensor::pure({x, y}), 0, true) == inv);
    }
}
