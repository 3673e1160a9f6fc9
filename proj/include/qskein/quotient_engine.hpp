// Degree-truncated quotients of braided tensor powers: link exteriors,
// mapping tori, coinvariants, and the classical point count at v = 1.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qskein/linalg.hpp"
#include "qskein/tensor_power.hpp"

namespace qskein {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// paper-mu-top: mu^top(x, y) - beta(x) y;  mvdv: x y - beta(x) y
enum class Variant { MuTop, Mvdv };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

enum class CoactionKind { Total, Braided };

struct EngineOptions {
  Variant variant = Variant::MuTop;
  BraidModel model = BraidModel::YetterDrinfeld;
  bool mirror = false;
  unsigned threads = 0;              // 0: hardware concurrency
  std::size_t max_columns = 6000;    // monomial basis size limit
  std::uint64_t max_tuples = 5000000;  // classical enumeration limit
};

// Tensor monomials of total degree <= max_degree, ordered by degree then
// key, so the largest column of a row is its deg-lex leading monomial.
class MonomialBasis {
 public:
  MonomialBasis(const RewriteSystem& R, int arity, int max_degree);
  int arity() const { return n_; }
  int max_degree() const { return maxdeg_; }
  std::size_t size() const { return keys_.size(); }
  const TKey& key(int col) const { return keys_[static_cast<std::size_t>(col)]; }
  int degree(int col) const { return deg_[static_cast<std::size_t>(col)]; }
  // -1 if absent (degree too high)
  int index(const TKey& k) const;
  std::size_t count(int d) const;
  SparseRow row(const Tensor& t) const;  // throws if a term is out of range
  Tensor tensor(const SparseRow& r) const;

 private:
  int n_, maxdeg_;
  std::vector<TKey> keys_;
  std::vector<int> deg_;
  std::map<TKey, int> index_;
};

struct FilteredQuotient {
  int arity = 1;
  int degree = 0;
  int working_degree = 0;
  std::shared_ptr<const MonomialBasis> basis;
  Echelon echelon;
  std::size_t generator_count = 0;
  std::vector<std::size_t> graded_dims;  // degrees 0..degree
  std::vector<bool> stabilized;

  // monomials of degree d that are not pivots
  std::vector<TKey> quotient_basis(int d) const;
  // canonical representative of x modulo the relation span, over Q(v)
  std::map<int, Rational> normal_form(const Tensor& x) const;
};

struct PointCount {
  unsigned p = 0;
  std::uint64_t count = 0;
  std::uint64_t oracle_count = 0;
  bool match() const { return count == oracle_count; }
};

class QuotientEngine {
 public:
  QuotientEngine(const BqContext& B, EngineOptions opts = {});

  const EngineOptions& options() const { return opts_; }

  // r_{x,y} = mu^top(x, y) - beta(x) y over monomial pairs with
  // deg x + deg y <= D (mvdv: x y - beta(x) y); zero relations dropped.
  // With max_degree >= 0 only relations of degree <= max_degree are kept,
  // and pairs that cannot produce one are skipped before expansion.
  std::vector<Tensor> relation_generators(const BraidWord& beta, int D, int max_degree = -1) const;
  // r_{x,y} = (beta(x) (x) 1) y - mu^top(Ad_Sigma(x), y) on arity n+1
  std::vector<Tensor> mapping_torus_generators(const BraidWord& beta, int D, int max_degree = -1) const;
  // degree of beta applied to each letter, indexed 4 * slot + letter
  std::vector<int> letter_image_degrees(const BraidWord& beta) const;

  FilteredQuotient link_quotient(const BraidWord& beta, int D, int slack) const;
  FilteredQuotient mapping_torus_quotient(const BraidWord& beta, int D, int slack) const;
  // quotient by a caller-supplied family (generated per working degree)
  template <class Gen>
  FilteredQuotient quotient(int arity, int D, int slack, Gen&& gens) const {
    if (D < 0 || slack < 0) throw std::invalid_argument("degree and slack must be >= 0");
    const int wd = D + slack;
    auto basis = make_basis(arity, wd);
    FilteredQuotient prev;
    bool have_prev = wd >= 1;
    if (have_prev) prev = close(arity, D, wd - 1, basis, gens(wd - 1));
    FilteredQuotient q = close(arity, D, wd, basis, gens(wd));
    finish(q, have_prev ? &prev : nullptr);
    return q;
  }

  // basis of the degree <= D solutions of coaction(x) = x (x) 1
  std::vector<Tensor> coinvariants(int arity, int D, CoactionKind kind = CoactionKind::Total) const;
  std::vector<Tensor> coinvariants(const FilteredQuotient& q, int D, CoactionKind kind = CoactionKind::Total) const;

  PointCount classical_points(const BraidWord& beta, unsigned p, int degree = 1) const;

  // dense Q(v) rank of the given rows, for cross-checking the echelon
  static std::size_t dense_rank_of(const std::vector<SparseRow>& rows, std::size_t columns);

 private:
  std::shared_ptr<const MonomialBasis> make_basis(int arity, int wd) const;
  FilteredQuotient close(int arity, int D, int wd, std::shared_ptr<const MonomialBasis> basis,
                         const std::vector<Tensor>& gens) const;
  void finish(FilteredQuotient& q, const FilteredQuotient* prev) const;
  const TensorPower& power(int n) const;

  const BqContext& B_;
  EngineOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<TensorPower>> powers_;
};

// Artin-presentation oracle: tuples in SL2(F_p)^n with A_i = rho(beta(x_i))
std::uint64_t artin_oracle_count(const BraidWord& beta, unsigned p);
// |SL2(F_p)|
std::uint64_t sl2_order(unsigned p);

}  // namespace qskein
