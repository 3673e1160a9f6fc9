#include <doctest.h>

#include "helpers.hpp"
#include "qskein/axiom_suite.hpp"

using namespace qskein;

namespace {
struct Ctx {
  OqContext O;
  BqContext B{O};
  AxiomSuite suite{B};
};
Ctx& ctx() {
  static Ctx c;
  return c;
}
}  // namespace

TEST_CASE("registry matches the relation counts") {
  const auto& s = ctx().suite;
  CHECK(s.count("hopf") == AxiomSuite::kHopfRow);
  CHECK(s.count("cotwist") == AxiomSuite::kCotwistRow);
  CHECK(s.count("bp") == AxiomSuite::kBpRow);
  CHECK(AxiomSuite::kHopfRow + AxiomSuite::kCotwistRow + AxiomSuite::kBpRow == 25);
  CHECK(s.count("half-twist") == 2);
  CHECK(s.count("braided-commutativity") == 1);
  CHECK(s.count("yang-baxter") == 1);
  CHECK(s.count("dual-quasitriangular") == 1);
  CHECK(s.count("mu-top") == 6);
  CHECK(s.count("transmutation") == 1);
  CHECK(s.count("no-such-group") == 0);
  for (const auto& a : s.registry())
    if (!a.is_custom()) {
      CHECK(a.left().src == a.right().src);
      CHECK(a.left().tgt == a.right().tgt);
    }
}

TEST_CASE("pipeline arity mismatch is rejected") {
  CHECK_THROWS_AS(AxiomCheck("bad", "test", Space::B, identity_map(1), identity_map(2)), std::invalid_argument);
  CHECK_THROWS_AS(chain({identity_map(2), identity_map(1)}), std::invalid_argument);
  CHECK_THROWS_AS(identity_map(2)(Tensor::unit(1)), std::invalid_argument);
  CHECK_NOTHROW(AxiomCheck("ok", "test", Space::B, identity_map(2), tensor({identity_map(1), identity_map(1)})));
}

TEST_CASE("antipode axiom on b") {
  auto& c = ctx();
  Primitives P(c.B);
  const Tensor b = Tensor::pure({make_word({GB})});
  const LinearMap lhs = chain({P.delta, tensor({P.S, identity_map(1)}), P.mu});
  const LinearMap rhs = chain({P.eps, P.eta});
  CHECK(lhs(b).is_zero());
  CHECK(rhs(b).is_zero());
  // t * t = Theta on all normal words of degree <= 3
  const auto& O = c.O;
  for (int d = 0; d <= 3; ++d)
    for (const auto& w : O.rules().graded_basis(d)) CHECK(convolve(O.t(), O.t())(w) == O.theta()(w));
}

TEST_CASE("degree 0 passes on the unit") {
  auto rep = ctx().suite.run_all(0, 0, 42);
  for (const auto& r : rep.results) {
    INFO(r.group << " / " << r.name << ": " << r.witness);
    CHECK(r.passed);
  }
}

TEST_CASE("same seed gives the same report") {
  const std::vector<std::string> groups{"hopf", "bp", "transmutation"};
  auto r1 = ctx().suite.run(groups, 1, 4, 7);
  auto r2 = ctx().suite.run(groups, 1, 4, 7);
  CHECK(r1.table() == r2.table());
  REQUIRE(r1.results.size() == r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].name == r2.results[i].name);
    CHECK(r1.results[i].inputs == r2.results[i].inputs);
    CHECK(r1.results[i].passed == r2.results[i].passed);
  }
  CHECK(r1.all_passed());
}

TEST_CASE("flipped r convention breaks the transmutation check") {
  OqContext O(RConvention::Swapped);
  BqContext B(O);
  AxiomSuite s(B);
  auto rep = s.run({"transmutation"}, 1, 2, 42);
  REQUIRE(rep.results.size() == 1);
  CHECK_FALSE(rep.results[0].passed);
  CHECK(!rep.results[0].witness.empty());
}
