#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qskein/cli.hpp"

using namespace qskein;
using qtest::W;

namespace {
struct Ctx {
  OqContext O;
  BqContext B{O};
  QuotientEngine E{B};
  QuotientEngine M{B, [] {
    EngineOptions o;
    o.variant = Variant::Mvdv;
    return o;
  }()};
  TensorPower T1{B, 1}, T2{B, 2};
};
const Ctx& ctx() {
  static Ctx c;
  return c;
}

int max_degree(const std::vector<Tensor>& ts) {
  std::size_t d = 0;
  for (const auto& t : ts) d = std::max(d, t.degree());
  return static_cast<int>(d);
}

bool in_span(const std::vector<Tensor>& gens, const Tensor& x, int arity) {
  MonomialBasis basis(ctx().B.rules(), arity, std::max(max_degree(gens), static_cast<int>(x.degree())));
  Echelon e;
  for (const auto& g : gens) e.insert(basis.row(g));
  return e.in_span(basis.row(x));
}

std::size_t full_count(int arity, int d) {
  // (k+1)^2 monomials of degree k in one factor
  if (arity == 1) return static_cast<std::size_t>((d + 1) * (d + 1));
  std::size_t s = 0;
  for (int i = 0; i <= d; ++i) s += full_count(1, i) * full_count(arity - 1, d - i);
  return s;
}
}  // namespace

TEST_CASE("relation generators") {
  const auto& c = ctx();
  const BraidWord id1 = parse_braid("", 1);
  auto gens = c.E.relation_generators(id1, 2);
  for (const auto& g : gens) CHECK(!g.is_zero());
  // (a, b) for the identity braid: mu^top(a, b) - a b
  const Tensor a = Tensor::pure({make_word({GA})}), b = Tensor::pure({make_word({GB})});
  Tensor r = c.T1.twisted_opposite_mul(a, b) - c.T1.mul(a, b);
  CHECK(!r.is_zero());
  CHECK(in_span(gens, r, 1));
  // (a (x) 1, 1 (x) 1) for sigma_1: theta(a (x) 1) - sigma_1(a (x) 1)
  const BraidWord s1 = parse_braid("s1", 2);
  const Tensor a1 = Tensor::pure({make_word({GA}), Word{}});
  Tensor r2 = c.T2.twist(a1) - c.T2.braid_act(s1, a1);
  CHECK(in_span(c.E.relation_generators(s1, 1), r2, 2));
  // the mvdv family uses the plain product
  Tensor r3 = c.T1.mul(a, b) - c.T1.mul(a, b);
  CHECK(r3.is_zero());
  for (const auto& g : c.M.relation_generators(id1, 2)) CHECK(!g.is_zero());
}

TEST_CASE("echelon rank is independent of the generator order") {
  const auto& c = ctx();
  const BraidWord beta = parse_braid("s1 s1 s1", 2);
  auto gens = c.E.relation_generators(beta, 1);
  MonomialBasis basis(c.B.rules(), 2, max_degree(gens));
  std::vector<SparseRow> rows;
  for (const auto& g : gens) rows.push_back(basis.row(g));
  Echelon ref;
  for (const auto& r : rows) ref.insert(r);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    CHECK(e.rank() == ref.rank());
    for (const auto& [col, row] : ref.rows()) CHECK(e.in_span(row));
  }
  CHECK(QuotientEngine::dense_rank_of(rows, basis.size()) == ref.rank());
}

TEST_CASE("unknot quotient") {
  const auto& c = ctx();
  const BraidWord id1 = parse_braid("", 1);
  FilteredQuotient q = c.E.link_quotient(id1, 2, 2);
  CHECK(q.graded_dims.size() == 3);
  CHECK(std::all_of(q.stabilized.begin(), q.stabilized.end(), [](bool b) { return b; }));
  for (int d = 0; d <= 2; ++d) {
    std::size_t pivots = 0;
    for (const auto& [col, row] : q.echelon.rows()) pivots += q.basis->degree(col) == d;
    CHECK(q.graded_dims[static_cast<std::size_t>(d)] == q.basis->count(d) - pivots);
    CHECK(q.quotient_basis(d).size() == q.graded_dims[static_cast<std::size_t>(d)]);
  }
  for (const auto& [col, row] : q.echelon.rows()) CHECK(q.echelon.in_span(row));
  // dims do not grow with the working degree
  std::vector<std::size_t> prev;
  for (int slack = 0; slack <= 2; ++slack) {
    auto dims = c.E.link_quotient(id1, 2, slack).graded_dims;
    if (!prev.empty())
      for (std::size_t d = 0; d < dims.size(); ++d) CHECK(dims[d] <= prev[d]);
    prev = dims;
  }
}

TEST_CASE("empty relation family leaves the full tensor power") {
  const auto& c = ctx();
  for (int n : {1, 2}) {
    FilteredQuotient q = c.E.quotient(n, 2, 1, [](int) { return std::vector<Tensor>{}; });
    for (int d = 0; d <= 2; ++d) CHECK(q.graded_dims[static_cast<std::size_t>(d)] == full_count(n, d));
  }
  CHECK_THROWS_AS(c.E.quotient(1, -1, 0, [](int) { return std::vector<Tensor>{}; }), std::invalid_argument);
}

TEST_CASE("mapping torus") {
  const auto& c = ctx();
  const BraidWord id1 = parse_braid("", 1);
  for (const auto& g : c.E.mapping_torus_generators(id1, 1)) CHECK(!g.is_zero());
  FilteredQuotient q = c.E.mapping_torus_quotient(id1, 1, 1);
  CHECK(q.arity == 2);
  REQUIRE(q.graded_dims.size() == 2);
  for (int d = 0; d <= 1; ++d) CHECK(q.graded_dims[static_cast<std::size_t>(d)] <= full_count(2, d));
}

TEST_CASE("coinvariants") {
  const auto& c = ctx();
  auto c0 = c.E.coinvariants(1, 0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0] == Tensor::unit(1));
  auto c1 = c.E.coinvariants(1, 1, CoactionKind::Total);
  auto b1 = c.E.coinvariants(1, 1, CoactionKind::Braided);
  CHECK(c1.size() == 2);
  CHECK(c1.size() == c.B.quantum_trace(1).size());
  REQUIRE(b1.size() == c1.size());
  // equal spans
  std::vector<Tensor> both = c1;
  both.insert(both.end(), b1.begin(), b1.end());
  MonomialBasis basis(c.B.rules(), 1, 1);
  Echelon e;
  for (const auto& t : both) e.insert(basis.row(t));
  CHECK(e.rank() == c1.size());
  for (const auto& t : c1) {
    Tensor expect(2);
    for (const auto& [k, x] : t.terms()) expect.add({k[0], Word{}}, x);
    CHECK(c.T1.total_coaction(t) == expect);
  }
}

TEST_CASE("classical points") {
  const auto& c = ctx();
  CHECK(sl2_order(3) == 24);
  const BraidWord unknot1 = parse_braid("", 1), unknot2 = parse_braid("s1", 2);
  const BraidWord trefoil = parse_braid("s1 s1 s1", 2), trefoil3 = parse_braid("s1 s1 s1 s2", 3);
  auto u1 = c.E.classical_points(unknot1, 3);
  CHECK(u1.count == 24);
  CHECK(u1.oracle_count == 24);
  auto u2 = c.E.classical_points(unknot2, 3);
  CHECK(u2.count == 24);
  CHECK(u2.oracle_count == 24);
  auto t = c.E.classical_points(trefoil, 3);
  CHECK(t.oracle_count == artin_oracle_count(trefoil, 3));
  CHECK(t.count == t.oracle_count);
  // stabilization by an extra strand
  auto t3 = c.E.classical_points(trefoil3, 3);
  CHECK(t3.match());
  CHECK(t3.count == t.count);
  CHECK(u2.count == u1.count);
  // both crossing signs and the mirror
  for (const char* w : {"s1^-1", "s1^-1 s1^-1 s1^-1", "s1 s1"}) {
    auto pc = c.E.classical_points(parse_braid(w, 2), 5);
    CHECK(pc.match());
  }
  EngineOptions mo;
  mo.mirror = true;
  QuotientEngine mirror(c.B, mo);
  CHECK(mirror.classical_points(trefoil, 3).count == t.count);
}

TEST_CASE("classical point limits") {
  const auto& c = ctx();
  CHECK_THROWS_AS(c.E.classical_points(parse_braid("s1", 2), 4), std::invalid_argument);
  CHECK_THROWS_AS(c.E.classical_points(parse_braid("s1", 2), 11), ResourceError);
  CHECK_THROWS_AS(c.E.classical_points(parse_braid("s1 s2 s3", 4), 3), ResourceError);
}
