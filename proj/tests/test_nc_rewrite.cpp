#include <doctest.h>

#include <random>

#include "qskein/bq_sl2.hpp"
#include "qskein/oq_sl2.hpp"

using namespace qskein;

namespace {
Poly random_poly(const RewriteSystem& R, std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> len(0, degree), letter(0, 3), c(-3, 3), n(1, 3);
  Poly p;
  for (int i = n(rng); i > 0; --i) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(letter(rng)));
    p.add(w, c(rng));
  }
  return R.normal_form(p);
}
}  // namespace

TEST_CASE("O_q normal forms") {
  RewriteSystem R = oq_rules();
  const Laurent q = Laurent::q(1);
  CHECK(R.normal_form(make_word({GB, GA})) == Poly::word(make_word({GA, GB}), q));
  // bc -> q ad - q
  CHECK(R.normal_form(make_word({GB, GC})) == Poly::word(make_word({GA, GD}), q) - Poly(q));
  CHECK(R.normal_form(Word{}) == Poly(1));
  CHECK(R.normal_form(Poly()).is_zero());
}

TEST_CASE("text format") {
  RewriteSystem R = oq_rules();
  Poly p = Poly::word(make_word({GA, GB}), Laurent::q(1)) - Poly(Laurent::q(1));
  CHECK(R.str(p) == "1*v^4 * a.b + -1*v^4 * 1");
  CHECK(R.parse(R.str(p)) == p);
}

TEST_CASE("graded basis and Hilbert series") {
  for (const RewriteSystem& R : {oq_rules(), bq_rules()}) {
    CHECK(R.graded_basis(0) == std::vector<Word>{Word{}});
    CHECK(R.graded_basis(1).size() == 4);
    CHECK(R.graded_basis(2).size() == 9);
    for (int d = 0; d <= 6; ++d) {
      CHECK(static_cast<long>(R.graded_basis(d).size()) == (d + 1) * (d + 1));
      CHECK(static_cast<long>(R.graded_basis(d).size()) == commutative_hilbert(d));
    }
  }
}

TEST_CASE("confluence probe") {
  CHECK(confluence_probe(oq_rules(), 3, 200, 1).ok());
  CHECK(confluence_probe(bq_rules(), 3, 200, 1).ok());
  RewriteSystem single({"a", "b"}, {Rule{make_word({1, 0}), Poly::word(make_word({0, 1}), Laurent::q(1))}});
  CHECK(confluence_probe(single, 2, 50, 1).ok());
  RewriteSystem broken({"a", "b"}, {Rule{make_word({1, 0}), Poly::word(make_word({0, 1}))},
                                    Rule{make_word({1, 0}), Poly::word(make_word({0, 1}), 2)}});
  ProbeReport rep = confluence_probe(broken, 2, 50, 1);
  CHECK_FALSE(rep.ok());
  CHECK(rep.witness.has_value());
}

TEST_CASE("decreasing rules are enforced") {
  CHECK_THROWS_AS(RewriteSystem({"a", "b"}, {Rule{make_word({0, 1}), Poly::word(make_word({1, 0}))}}),
                  std::invalid_argument);
}

TEST_CASE("normal form properties") {
  std::mt19937_64 rng(5);
  for (const RewriteSystem& R : {oq_rules(), bq_rules()}) {
    for (int i = 0; i < 100; ++i) {
      Poly x = random_poly(R, rng, 2), y = random_poly(R, rng, 2), z = random_poly(R, rng, 2);
      CHECK(R.normal_form(x) == x);
      CHECK(R.normal_form(x + y) == R.normal_form(x) + R.normal_form(y));
      CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
    }
    for (int i = 0; i < 50; ++i) {
      Poly x = random_poly(R, rng, 3), y = random_poly(R, rng, 3);
      CHECK(R.normal_form(x * y) == R.mul(R.normal_form(x), R.normal_form(y)));
    }
  }
}
