#pragma once

// Text documents (JSON, UTF-8) for every domain object.
//
// Big integers are decimal strings, rationals are "num/den" strings in lowest
// terms with den > 0. Keys are emitted in sorted order with two-space
// indentation, so serialization is canonical.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ssbranch/branching.hpp"
#include "ssbranch/decompose.hpp"
#include "ssbranch/instance.hpp"
#include "ssbranch/oracle.hpp"

namespace ssbranch {

using Json = nlohmann::json;

/// Outcome of `certify` plus optional inline (v, lambda, r) context.
struct CertificateDocument {
  CertifyStatus status = CertifyStatus::no_certificate;
  Integer beta;
  std::optional<Certificate> certificate;
  std::optional<IntVector> v;
  std::optional<Rational> lambda;
  std::optional<RatVector> r;

  bool operator==(const CertificateDocument&) const = default;
};

Json to_json(const Instance& inst);
Json to_json(const Decomposition& dec);
Json to_json(const CertificateDocument& doc);
Json to_json(const IntervalCover& cover);
Json to_json(const CoverageStats& stats);
Json to_json(const Cor1Report& report);

Instance instance_from_json(const Json& j, bool allow_common_divisor = false);
Decomposition decomposition_from_json(const Json& j);
CertificateDocument certificate_from_json(const Json& j);
IntervalCover intervals_from_json(const Json& j);
CoverageStats coverage_from_json(const Json& j);
Cor1Report cor1_from_json(const Json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_document(const Json& j);
/// Throws ParseError carrying the byte offset of a syntax error.
Json load_document(const std::string& text);

template <typename T>
std::string serialize(const T& value) {
  return dump_document(to_json(value));
}

Instance parse_instance(const std::string& text, bool allow_common_divisor = false);
Decomposition parse_decomposition(const std::string& text);
CertificateDocument parse_certificate(const std::string& text);
IntervalCover parse_intervals(const std::string& text);
CoverageStats parse_coverage(const std::string& text);
Cor1Report parse_cor1(const std::string& text);

}  // namespace ssbranch
