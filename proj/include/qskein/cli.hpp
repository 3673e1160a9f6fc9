// Job configuration, braid parsing and report rendering behind the qskein tool.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qskein/oq_sl2.hpp"
#include "qskein/quotient_engine.hpp"
#include "qskein/tensor_power.hpp"

namespace qskein {

inline constexpr const char* kEngineVersion = "0.1.0";

using Report = nlohmann::ordered_json;

// position is the 1-based token index (0 when the error is not about a token)
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& what, std::size_t position)
      : std::invalid_argument(position ? what + " at token " + std::to_string(position) : what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// grammar: whitespace separated tokens s<i> or s<i>^-1, 1 <= i < strands
BraidWord parse_braid(const std::string& text, int strands);

enum class ExitCode : int { Ok = 0, Validation = 1, Mismatch = 2, Resource = 3 };

struct JobConfig {
  std::string command;  // quotient, mapping-torus, coinvariants, classical-points, axioms
  std::string braid;
  int strands = 1;
  int degree = 1;
  int slack = 1;
  Variant variant = Variant::MuTop;
  bool mirror = false;
  BraidModel model = BraidModel::YetterDrinfeld;
  RConvention convention = RConvention::Standard;
  CoactionKind coaction = CoactionKind::Total;
  std::vector<unsigned> primes;
  bool coinvariants = true;  // quotient / mapping-torus: also solve for coinvariants
  std::uint64_t seed = 42;
  int trials = 50;
  std::vector<std::string> groups;  // axioms: restrict to these groups
  unsigned threads = 0;
};

// throws InputError on invalid values
void validate(const JobConfig& cfg);

struct JobResult {
  Report report;
  ExitCode code = ExitCode::Ok;
};

// ResourceError and InputError propagate to the caller
JobResult run_job(const JobConfig& cfg);

std::string render_json(const Report& r);
std::string render_table(const Report& r);

std::string to_string(BraidModel m);
BraidModel parse_braid_model(const std::string& s);
std::string to_string(CoactionKind k);
CoactionKind parse_coaction_kind(const std::string& s);

}  // namespace qskein
