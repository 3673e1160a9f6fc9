#include "qskein/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qskein/axiom_suite.hpp"

namespace qskein {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

Report flags_of(const JobConfig& cfg) {
  Report f;
  f["r_convention"] = to_string(cfg.convention);
  f["variant"] = to_string(cfg.variant);
  f["mirror"] = cfg.mirror;
  f["braid_model"] = to_string(cfg.model);
  f["coaction"] = to_string(cfg.coaction);
  return f;
}

Report points_report(const std::vector<PointCount>& pts) {
  Report a = Report::array();
  for (const auto& p : pts) {
    Report e;
    e["p"] = p.p;
    e["count"] = p.count;
    e["oracle_count"] = p.oracle_count;
    e["match"] = p.match();
    a.push_back(e);
  }
  return a;
}

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string to_string(BraidModel m) { return m == BraidModel::YetterDrinfeld ? "yetter-drinfeld" : "psi0"; }
BraidModel parse_braid_model(const std::string& s) {
  if (s == "yetter-drinfeld") return BraidModel::YetterDrinfeld;
  if (s == "psi0") return BraidModel::Psi0;
  throw InputError("unknown braid model '" + s + "' (expected yetter-drinfeld or psi0)", 0);
}
std::string to_string(CoactionKind k) { return k == CoactionKind::Total ? "total" : "braided"; }
CoactionKind parse_coaction_kind(const std::string& s) {
  if (s == "total") return CoactionKind::Total;
  if (s == "braided") return CoactionKind::Braided;
  throw InputError("unknown coaction '" + s + "' (expected total or braided)", 0);
}

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw InputError("strands must be >= 1, got " + std::to_string(strands), 0);
  BraidWord b;
  b.strands = strands;
  const auto toks = tokens_of(text);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    const std::size_t pos = i + 1;
    if (t.size() < 2 || t[0] != 's') throw InputError("malformed token '" + t + "' (expected s<i> or s<i>^-1)", pos);
    std::size_t end = 1;
    while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
    if (end == 1) throw InputError("malformed token '" + t + "' (missing generator index)", pos);
    const std::string rest = t.substr(end);
    if (!rest.empty() && rest != "^-1") throw InputError("malformed token '" + t + "' (unexpected '" + rest + "')", pos);
    if (end - 1 > 6) throw InputError("generator index in '" + t + "' is too large", pos);
    const int idx = std::stoi(t.substr(1, end - 1));
    if (idx < 1) throw InputError("generator index must be >= 1 in '" + t + "'", pos);
    if (idx > strands - 1)
      throw InputError("generator index " + std::to_string(idx) + " exceeds strands-1=" + std::to_string(strands - 1),
                       pos);
    b.letters.push_back({idx, !rest.empty()});
  }
  return b;
}

void validate(const JobConfig& cfg) {
  static const std::vector<std::string> commands{"quotient", "mapping-torus", "coinvariants", "classical-points",
                                                 "axioms"};
  if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
    throw InputError("unknown command '" + cfg.command + "'", 0);
  if (cfg.strands < 1) throw InputError("strands must be >= 1", 0);
  if (cfg.degree < 0) throw InputError("degree must be >= 0", 0);
  if (cfg.slack < 0) throw InputError("slack must be >= 0", 0);
  if (cfg.trials < 0) throw InputError("trials must be >= 0", 0);
  for (unsigned p : cfg.primes)
    if (!is_prime(static_cast<long>(p))) throw InputError(std::to_string(p) + " is not prime", 0);
  if (cfg.command == "classical-points" && cfg.primes.empty()) throw InputError("classical-points needs --prime", 0);
}

JobResult run_job(const JobConfig& cfg) {
  validate(cfg);
  OqContext O(cfg.convention);
  BqContext B(O);
  JobResult res;
  Report& r = res.report;
  r["command"] = cfg.command;

  if (cfg.command == "axioms") {
    AxiomSuite suite(B, cfg.threads);
    for (const auto& g : cfg.groups)
      if (suite.count(g) == 0) throw InputError("unknown axiom group '" + g + "'", 0);
    SuiteReport rep = suite.run(cfg.groups, cfg.degree, cfg.trials, cfg.seed);
    r["degree"] = cfg.degree;
    r["trials"] = cfg.trials;
    Report checks = Report::array();
    for (const auto& c : rep.results) {
      Report e;
      e["group"] = c.group;
      e["name"] = c.name;
      e["inputs"] = c.inputs;
      e["status"] = c.passed ? "pass" : "fail";
      e["witness"] = c.witness;
      checks.push_back(e);
    }
    r["checks"] = checks;
    r["passed"] = rep.results.size() - rep.failures();
    r["failed"] = rep.failures();
    if (!rep.all_passed()) res.code = ExitCode::Mismatch;
  } else {
    EngineOptions opts;
    opts.variant = cfg.variant;
    opts.model = cfg.model;
    opts.mirror = cfg.mirror;
    opts.threads = cfg.threads;
    QuotientEngine E(B, opts);
    const BraidWord beta = parse_braid(cfg.braid, cfg.strands);
    r["braid"] = beta.str();
    r["strands"] = cfg.strands;
    auto points = [&] {
      std::vector<PointCount> pts;
      for (unsigned p : cfg.primes) pts.push_back(E.classical_points(beta, p));
      for (const auto& p : pts)
        if (!p.match()) res.code = ExitCode::Mismatch;
      return pts;
    };
    if (cfg.command == "quotient" || cfg.command == "mapping-torus") {
      const bool torus = cfg.command == "mapping-torus";
      FilteredQuotient q = torus ? E.mapping_torus_quotient(beta, cfg.degree, cfg.slack)
                                 : E.link_quotient(beta, cfg.degree, cfg.slack);
      r["variant"] = to_string(cfg.variant);
      r["arity"] = q.arity;
      r["truncation_degree"] = q.degree;
      r["working_degree"] = q.working_degree;
      r["relation_generators"] = q.generator_count;
      r["relation_rank"] = q.echelon.rank();
      r["graded_dims"] = q.graded_dims;
      r["stabilized"] = q.stabilized;
      Report cd = Report::array();
      if (cfg.coinvariants)
        for (int d = 0; d <= cfg.degree; ++d) cd.push_back(E.coinvariants(q, d, cfg.coaction).size());
      r["coinvariant_dims"] = cd;
      r["classical_points"] = points_report(torus ? std::vector<PointCount>{} : points());
    } else if (cfg.command == "coinvariants") {
      r["truncation_degree"] = cfg.degree;
      Report cd = Report::array();
      std::vector<Tensor> basis;
      for (int d = 0; d <= cfg.degree; ++d) {
        basis = E.coinvariants(cfg.strands, d, cfg.coaction);
        cd.push_back(basis.size());
      }
      r["coinvariant_dims"] = cd;
      Report bs = Report::array();
      for (const auto& t : basis) bs.push_back(t.str(B.rules()));
      r["coinvariants"] = bs;
    } else {
      r["classical_points"] = points_report(points());
    }
  }
  r["engine_version"] = kEngineVersion;
  r["flags"] = flags_of(cfg);
  r["seed"] = cfg.seed;
  return res;
}

std::string render_json(const Report& r) { return r.dump(2) + "\n"; }

std::string render_table(const Report& r) {
  std::ostringstream os;
  for (const auto& [key, val] : r.items()) {
    if (val.is_array() && !val.empty() && val.front().is_object()) {
      os << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [k, _] : val.front().items()) cols.push_back(k);
      std::vector<std::size_t> w;
      for (const auto& c : cols) {
        std::size_t m = c.size();
        for (const auto& row : val)
          if (c != "witness") m = std::max(m, scalar_text(row[c]).size());
        w.push_back(m);
      }
      os << " ";
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] != "witness") os << " " << cols[i] << std::string(w[i] - cols[i].size(), ' ');
      os << "\n";
      for (const auto& row : val) {
        os << " ";
        std::string witness;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          const std::string s = scalar_text(row[cols[i]]);
          if (cols[i] == "witness") {
            witness = s;
            continue;
          }
          os << " " << s << std::string(w[i] - s.size(), ' ');
        }
        os << "\n";
        if (!witness.empty()) os << "    witness: " << witness << "\n";
      }
    } else if (val.is_object()) {
      os << key << ":";
      for (const auto& [k, v] : val.items()) os << " " << k << "=" << scalar_text(v);
      os << "\n";
    } else if (val.is_array()) {
      os << key << ":";
      bool first = true;
      for (const auto& v : val) {
        os << (first ? " " : (v.is_string() ? "; " : " ")) << scalar_text(v);
        first = false;
      }
      os << "\n";
    } else {
      os << key << ": " << scalar_text(val) << "\n";
    }
  }
  return os.str();
}

}  // namespace qskein
