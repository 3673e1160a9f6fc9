// Executable axiom checks. Each check is a pair of linear maps between
// tensor powers, built from primitive operations and compared exactly on
// generator inputs and seeded random inputs.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qskein/bq_sl2.hpp"
#include "qskein/tensor_power.hpp"

namespace qskein {

// A Z[v^{+-1}]-linear map from arity src to arity tgt, given on pure keys.
// Arity 0 is the ground ring (the single key with no legs).
struct LinearMap {
  std::string name;
  int src = 1, tgt = 1;
  std::function<Tensor(const TKey&)> on_key;

  Tensor operator()(const Tensor& x) const;
};

LinearMap identity_map(int arity = 1);
// applied left to right; throws std::invalid_argument on arity mismatch
LinearMap chain(const std::vector<LinearMap>& maps);
LinearMap tensor(const std::vector<LinearMap>& maps);
// permutes legs: output leg i is input leg perm[i]
LinearMap permute(const std::vector<int>& perm, const std::string& name);

enum class Space { B, O };

// The primitive operations on B_q (and a few on O_q).
class Primitives {
 public:
  explicit Primitives(const BqContext& B);

  const BqContext& bq() const { return B_; }

  // B_q
  LinearMap mu, eta, delta, eps, S, braid, braid_inv, ad;
  // B-words in, O-coordinates out
  LinearMap transmuted_mu, presented_mu;
  // functionals through the shared coalgebra
  LinearMap theta, theta_inv, t, t_inv;
  // B = theta (theta^-1 (x) mu (x) theta^-1)(Delta (x) Delta)
  // B^- = theta^-1 (theta (x) mu o Psi0 (x) theta)(Delta (x) Delta)
  LinearMap pairing, pairing_minus;
  // O_q
  LinearMap mu_o, delta_o, r_o;

  // arity 2n -> n product and mu^top on (B_q)^{(x)bar n}
  LinearMap power_mu(const TensorPower& T) const;
  LinearMap power_mu_top(const TensorPower& T) const;

 private:
  const BqContext& B_;
};

struct SamplePlan {
  bool generators = true;   // all tuples of words of length <= 1
  int all_words_degree = -1;  // if >= 0: every tuple of normal words with total degree <= this
  int degree = -1;          // random element degree; -1: the suite degree
  int trials = -1;          // -1: the suite trial count
};

struct CheckResult {
  std::string name;
  std::string group;
  std::size_t inputs = 0;
  bool passed = true;
  std::string witness;  // first failing input and the difference
};

class AxiomCheck {
 public:
  // throws std::invalid_argument if the two sides differ in arity
  AxiomCheck(std::string name, std::string group, Space space, LinearMap left, LinearMap right,
             SamplePlan plan = {});
  // a check that is not a pair of pipelines (matrix identities)
  AxiomCheck(std::string name, std::string group, std::function<CheckResult()> custom);

  const std::string& name() const { return name_; }
  const std::string& group() const { return group_; }
  Space space() const { return space_; }
  const LinearMap& left() const { return left_; }
  const LinearMap& right() const { return right_; }
  const SamplePlan& plan() const { return plan_; }
  bool is_custom() const { return static_cast<bool>(custom_); }
  CheckResult run_custom() const { return custom_(); }

 private:
  std::string name_, group_;
  Space space_ = Space::B;
  LinearMap left_, right_;
  SamplePlan plan_;
  std::function<CheckResult()> custom_;
};

struct SuiteReport {
  int degree = 0, trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> results;
  bool all_passed() const;
  std::size_t failures() const;
  std::string table() const;
};

class AxiomSuite {
 public:
  // relations in the dual BP Hopf algebra table (rows: Hopf, cotwist and
  // pairing, BP), as registered below
  static constexpr std::size_t kHopfRow = 13;
  static constexpr std::size_t kCotwistRow = 10;
  static constexpr std::size_t kBpRow = 2;

  explicit AxiomSuite(const BqContext& B, unsigned threads = 0);

  const std::vector<AxiomCheck>& registry() const { return checks_; }
  std::size_t count(const std::string& group) const;

  CheckResult check(const AxiomCheck& a, int degree, int trials, std::uint64_t seed) const;
  SuiteReport run_all(int degree, int trials, std::uint64_t seed) const;
  // only the checks whose group is listed
  SuiteReport run(const std::vector<std::string>& groups, int degree, int trials, std::uint64_t seed) const;

 private:
  void register_all();
  std::vector<Tensor> inputs(const AxiomCheck& a, int degree, int trials, std::uint64_t seed) const;

  const BqContext& B_;
  Primitives P_;
  unsigned threads_;
  std::vector<std::unique_ptr<TensorPower>> powers_;
  std::vector<AxiomCheck> checks_;
};

}  // namespace qskein
