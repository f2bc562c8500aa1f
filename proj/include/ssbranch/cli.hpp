#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ssbranch {

enum class Command { generate, decompose, certify, verify, intervals, stats, cor1 };

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitRejected = 1,  // verification rejected, or no certificate found
  kExitUsage = 2,
  kExitCapacity = 3,
};

struct RunConfig {
  Command command = Command::generate;
  std::string instance_path;
  std::string decomposition_path;
  std::string certificate_path;
  /// Empty: write to the output stream.
  std::string output_path;

  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;
  /// Decimal string; right-hand sides may exceed any machine integer.
  std::optional<std::string> beta;
  std::string method = "frank_tardos";
  std::string mode = "sampled";
  std::uint64_t sample_size = 10'000;
  unsigned workers = 1;
  std::optional<std::uint64_t> cap;
  std::optional<std::string> k_lo;
  std::optional<std::string> k_hi;
  bool normalize_gcd = false;
};

/// Executes one command. Documents go to `output_path` or `out`; a single
/// diagnostic line goes to `err` on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ssbranch
