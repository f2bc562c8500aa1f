#include "ssbranch/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ssbranch/branching.hpp"
#include "ssbranch/decompose.hpp"
#include "ssbranch/documents.hpp"
#include "ssbranch/errors.hpp"
#include "ssbranch/instance.hpp"
#include "ssbranch/oracle.hpp"

namespace ssbranch {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing --") + what);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + std::string(what) + " file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + cfg.output_path + "'");
  f << text;
}

Instance load_instance(const RunConfig& cfg) {
  Instance raw = parse_instance(read_file(cfg.instance_path, "instance"), cfg.normalize_gcd);
  return cfg.normalize_gcd ? raw.normalized() : raw;
}

Decomposition load_decomposition(const RunConfig& cfg, const Instance& inst) {
  Decomposition dec = parse_decomposition(read_file(cfg.decomposition_path, "decomposition"));
  if (dec.v.size() != inst.n()) throw UsageError("decomposition length does not match the instance");
  return dec;
}

Integer parse_big(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw UsageError(std::string("missing --") + flag);
  Integer out;
  if (!parse_integer(*text, out)) throw UsageError(std::string("--") + flag + " must be a decimal integer");
  return out;
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw UsageError("--seed is required for sampled mode");
  return *cfg.seed;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n) throw UsageError("missing --n");
  if (!cfg.seed) throw UsageError("missing --seed");
  emit(cfg, out, serialize(generate_instance(*cfg.n, *cfg.seed)));
  return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  Method method;
  try {
    method = method_from_string(cfg.method);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  emit(cfg, out, serialize(decompose(inst, method)));
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const Instance raw = parse_instance(read_file(cfg.instance_path, "instance"), cfg.normalize_gcd);
  Integer beta = parse_big(cfg.beta, "beta");
  const Integer g = raw.gcd();
  CertificateDocument doc;
  doc.beta = beta;
  if (g != 1) {
    if (beta % g != 0) {
      doc.status = CertifyStatus::trivially_infeasible_gcd;
      emit(cfg, out, serialize(doc));
      return kExitOk;
    }
    beta /= g;
  }
  const Instance inst = g != 1 ? raw.normalized() : raw;
  const Decomposition dec = load_decomposition(cfg, inst);

  const CertifyOutcome outcome = certify(inst.weights(), dec.v, beta);
  doc.status = outcome.status;
  doc.beta = beta;
  doc.certificate = outcome.certificate;
  doc.v = dec.v;
  doc.lambda = dec.lambda;
  doc.r = dec.r;
  emit(cfg, out, serialize(doc));
  return outcome.status == CertifyStatus::no_certificate ? kExitRejected : kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const CertificateDocument doc = parse_certificate(read_file(cfg.certificate_path, "certificate"));
  IntVector v;
  if (!cfg.decomposition_path.empty()) {
    v = load_decomposition(cfg, inst).v;
  } else if (doc.v) {
    v = *doc.v;
  } else {
    throw UsageError("certificate carries no direction; pass --decomposition");
  }
  const bool ok = doc.status == CertifyStatus::certified && doc.certificate &&
                  verify_certificate(inst.weights(), v, *doc.certificate);
  emit(cfg, out, ok ? "accepted\n" : "rejected\n");
  return ok ? kExitOk : kExitRejected;
}

int cmd_intervals(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const Decomposition dec = load_decomposition(cfg, inst);
  const Integer v_total = l1_norm(std::span<const Integer>(dec.v));
  const Integer k_lo = cfg.k_lo ? parse_big(cfg.k_lo, "k-lo") : Integer(0);
  const Integer k_hi = cfg.k_hi ? parse_big(cfg.k_hi, "k-hi") : v_total;
  const IntervalCover cover = enumerate_intervals(inst.weights(), dec.v, dec.lambda, dec.r, k_lo, k_hi,
                                                  cfg.cap.value_or(kDefaultEnumerationCap));
  emit(cfg, out, serialize(cover));
  return kExitOk;
}

CoverageMode parse_mode(const RunConfig& cfg) {
  try {
    return coverage_mode_from_string(cfg.mode);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const Decomposition dec = load_decomposition(cfg, inst);
  CoverageOptions opt;
  opt.mode = parse_mode(cfg);
  opt.sample_size = cfg.sample_size;
  opt.workers = cfg.workers;
  opt.cap = cfg.cap.value_or(kDefaultEnumerationCap);
  if (opt.mode == CoverageMode::sampled) opt.seed = require_seed(cfg);
  emit(cfg, out, serialize(coverage_stats(inst.weights(), dec.v, dec.lambda, dec.r, opt)));
  return kExitOk;
}

int cmd_cor1(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg);
  const Decomposition dec = load_decomposition(cfg, inst);
  Cor1Options opt;
  opt.mode = parse_mode(cfg);
  opt.sample_size = cfg.sample_size;
  if (cfg.cap) opt.beta_cap = *cfg.cap;
  if (opt.mode == CoverageMode::sampled) opt.seed = require_seed(cfg);
  emit(cfg, out, serialize(cor1_report(inst.weights(), dec.v, opt)));
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::generate:
        return cmd_generate(config, out);
      case Command::decompose:
        return cmd_decompose(config, out);
      case Command::certify:
        return cmd_certify(config, out);
      case Command::verify:
        return cmd_verify(config, out);
      case Command::intervals:
        return cmd_intervals(config, out);
      case Command::stats:
        return cmd_stats(config, out);
      case Command::cor1:
        return cmd_cor1(config, out);
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace ssbranch
