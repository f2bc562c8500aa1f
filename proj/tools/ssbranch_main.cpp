// Command-line front end: generate instances, compute branching directions,
// certify and verify right-hand sides, enumerate intervals, report coverage.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "ssbranch/cli.hpp"

int main(int argc, char** argv) {
  using ssbranch::Command;
  ssbranch::RunConfig cfg;

  CLI::App app{"Branching-hyperplane infeasibility certificates for low-density subset sum"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub, bool instance, bool decomposition) {
    if (instance) sub->add_option("--instance", cfg.instance_path, "Instance document")->required();
    if (decomposition) sub->add_option("--decomposition", cfg.decomposition_path, "Decomposition document")->required();
    sub->add_option("-o,--out", cfg.output_path, "Write the document here instead of stdout");
    sub->add_flag("--normalize-gcd", cfg.normalize_gcd, "Divide weights by their gcd instead of rejecting them");
  };

  std::map<CLI::App*, Command> commands;

  auto* gen = app.add_subcommand("generate", "Generate a seeded instance with ||a||_inf >= 2^(2n^2)");
  gen->add_option("--n", cfg.n, "Dimension")->required();
  gen->add_option("--seed", cfg.seed, "64-bit seed")->required();
  gen->add_option("-o,--out", cfg.output_path, "Write the document here instead of stdout");
  commands[gen] = Command::generate;

  auto* dec = app.add_subcommand("decompose", "Compute a = lambda v + r");
  add_io(dec, true, false);
  dec->add_option("--method", cfg.method, "frank_tardos (default) or lll_rows")
      ->check(CLI::IsMember({"frank_tardos", "lll_rows"}));
  commands[dec] = Command::decompose;

  auto* cert = app.add_subcommand("certify", "Certify infeasibility of a x = beta");
  add_io(cert, true, true);
  cert->add_option("--beta", cfg.beta, "Right-hand side (decimal string)")->required();
  commands[cert] = Command::certify;

  auto* ver = app.add_subcommand("verify", "Check a certificate independently; exit 0 iff accepted");
  ver->add_option("--instance", cfg.instance_path, "Instance document")->required();
  ver->add_option("--certificate", cfg.certificate_path, "Certificate document")->required();
  ver->add_option("--decomposition", cfg.decomposition_path, "Direction source if the certificate has none");
  ver->add_option("-o,--out", cfg.output_path, "Write the verdict here instead of stdout");
  ver->add_flag("--normalize-gcd", cfg.normalize_gcd, "Divide weights by their gcd instead of rejecting them");
  commands[ver] = Command::verify;

  auto* iv = app.add_subcommand("intervals", "Enumerate good and bad intervals over a level range");
  add_io(iv, true, true);
  iv->add_option("--k-lo", cfg.k_lo, "First level (default 0)");
  iv->add_option("--k-hi", cfg.k_hi, "Last level (default ||v||_1)");
  iv->add_option("--cap", cfg.cap, "Maximum number of levels");
  commands[iv] = Command::intervals;

  for (auto [name, cmd] : {std::pair{"stats", Command::stats}, std::pair{"cor1", Command::cor1}}) {
    auto* sub = app.add_subcommand(name, cmd == Command::stats ? "Coverage of certified right-hand sides"
                                                               : "Certified share of infeasible right-hand sides");
    add_io(sub, true, true);
    sub->add_option("--mode", cfg.mode, "exact or sampled (default)")->check(CLI::IsMember({"exact", "sampled"}));
    sub->add_option("--samples", cfg.sample_size, "Number of sampled right-hand sides (default 10000)");
    sub->add_option("--seed", cfg.seed, "Sampling seed (required for sampled mode)");
    sub->add_option("--cap", cfg.cap, "Enumeration cap for exact mode");
    if (cmd == Command::stats) sub->add_option("--workers", cfg.workers, "Classification threads");
    commands[sub] = cmd;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ssbranch::kExitUsage;
  }
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) cfg.command = cmd;
  }
  return ssbranch::run(cfg, std::cout, std::cerr);
}
