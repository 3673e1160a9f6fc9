// qskein: command-line front end for the quotient engine and the axiom suite.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qskein/cli.hpp"

using namespace qskein;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with O_q(SL2), B_q(SL2) and braided tensor powers"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string variant = "paper-mu-top", model = "yetter-drinfeld", conv = "standard", coaction = "total";
  std::string format = "table", output;

  auto common = [&](CLI::App* s) {
    s->add_option("--r-convention", conv, "r index convention: standard or swapped")->capture_default_str();
    s->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    s->add_option("--output,-o", output, "write the report here instead of stdout");
    s->add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();
    s->add_option("--seed", cfg.seed, "seed, echoed into the report")->capture_default_str();
  };
  auto braided = [&](CLI::App* s, bool needs_degree) {
    s->add_option("--braid", cfg.braid, "braid word, e.g. \"s1 s2^-1\"")->capture_default_str();
    s->add_option("--strands,-n", cfg.strands, "number of strands")->capture_default_str();
    s->add_flag("--mirror", cfg.mirror, "swap each crossing with its inverse");
    s->add_option("--braid-model", model, "yetter-drinfeld or psi0")->capture_default_str();
    s->add_option("--variant", variant, "paper-mu-top or mvdv")->capture_default_str();
    if (needs_degree) {
      s->add_option("--degree,-d", cfg.degree, "truncation degree")->capture_default_str();
      s->add_option("--slack", cfg.slack, "working degree minus truncation degree")->capture_default_str();
      s->add_option("--coaction", coaction, "total or braided")->capture_default_str();
    }
  };

  auto* quotient = app.add_subcommand("quotient", "truncated quotient presenting a link exterior");
  braided(quotient, true);
  quotient->add_option("--prime,--primes", cfg.primes, "also count classical points mod these primes");
  quotient->add_flag("!--no-coinvariants", cfg.coinvariants, "skip the coinvariant solve");
  common(quotient);

  auto* torus = app.add_subcommand("mapping-torus", "truncated quotient presenting a mapping torus");
  braided(torus, true);
  torus->add_flag("!--no-coinvariants", cfg.coinvariants, "skip the coinvariant solve");
  common(torus);

  auto* coinv = app.add_subcommand("coinvariants", "coinvariants of the tensor power, no quotient");
  coinv->add_option("--strands,-n", cfg.strands, "number of tensor factors")->capture_default_str();
  coinv->add_option("--degree,-d", cfg.degree, "degree bound")->capture_default_str();
  coinv->add_option("--coaction", coaction, "total or braided")->capture_default_str();
  common(coinv);

  auto* points = app.add_subcommand("classical-points", "SL2(F_p) point count at v = 1 against the Artin oracle");
  braided(points, false);
  points->add_option("--prime,--primes", cfg.primes, "primes")->required();
  common(points);

  auto* axioms = app.add_subcommand("axioms", "run the axiom suite");
  axioms->add_option("--degree,-d", cfg.degree, "random input degree")->capture_default_str();
  axioms->add_option("--trials", cfg.trials, "random inputs per check")->capture_default_str();
  axioms->add_option("--group", cfg.groups, "only these groups");
  common(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::Validation);
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.variant = parse_variant(variant);
    cfg.model = parse_braid_model(model);
    cfg.convention = parse_rconvention(conv);
    cfg.coaction = parse_coaction_kind(coaction);
    JobResult res = run_job(cfg);
    const std::string text = format == "json" ? render_json(res.report) : render_table(res.report);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << output << "\n";
        return static_cast<int>(ExitCode::Validation);
      }
      f << text;
    }
    return static_cast<int>(res.code);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Resource);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Validation);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Validation);
  }
}
