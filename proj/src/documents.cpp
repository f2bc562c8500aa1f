#include "ssbranch/documents.hpp"

#include <algorithm>

#include "ssbranch/errors.hpp"

namespace ssbranch {

namespace {

// Field access with JSON-pointer positions in error messages.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "/" : path_, what); }
  [[noreturn]] static void fail_at(const std::string& path, const std::string& what) { throw ParseError(path, what); }

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  const Json& at(const char* key) const {
    if (!j_.contains(key)) fail(std::string("missing field '") + key + "'");
    return j_.at(key);
  }

  std::string sub(const char* key) const { return path_ + "/" + key; }

  void expect_kind(const char* kind) const {
    if (!j_.contains("kind")) return;
    if (!j_.at("kind").is_string() || j_.at("kind").get<std::string>() != kind) {
      fail_at(sub("kind"), std::string("expected kind '") + kind + "'");
    }
  }

  static Integer integer(const Json& j, const std::string& path) {
    Integer out;
    if (!j.is_string() || !parse_integer(j.get<std::string>(), out)) fail_at(path, "expected a decimal integer string");
    return out;
  }

  static Rational rational(const Json& j, const std::string& path) {
    Rational out;
    if (!j.is_string()) fail_at(path, "expected a rational string");
    const auto text = j.get<std::string>();
    if (parse_rational(text, out)) return out;
    const auto slash = text.find('/');
    Integer den;
    if (slash != std::string::npos && parse_integer(text.substr(slash + 1), den) && den == 0) {
      fail_at(path, "zero denominator");
    }
    fail_at(path, "malformed rational '" + text + "'");
  }

  Integer integer(const char* key) const { return integer(at(key), sub(key)); }
  Rational rational(const char* key) const { return rational(at(key), sub(key)); }

  bool boolean(const char* key) const {
    const Json& v = at(key);
    if (!v.is_boolean()) fail_at(sub(key), "expected a boolean");
    return v.get<bool>();
  }

  std::string string(const char* key) const {
    const Json& v = at(key);
    if (!v.is_string()) fail_at(sub(key), "expected a string");
    return v.get<std::string>();
  }

  std::uint64_t uint(const char* key) const {
    const Json& v = at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      fail_at(sub(key), "expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
  }

  const Json& array(const char* key) const {
    const Json& v = at(key);
    if (!v.is_array()) fail_at(sub(key), "expected an array");
    return v;
  }

  IntVector integers(const char* key) const {
    IntVector out;
    const Json& arr = array(key);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(integer(arr[i], sub(key) + "/" + std::to_string(i)));
    return out;
  }

  static RatVector rationals(const Json& arr, const std::string& path) {
    if (!arr.is_array()) fail_at(path, "expected an array");
    RatVector out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational(arr[i], path + "/" + std::to_string(i)));
    return out;
  }

  RatVector rationals(const char* key) const { return rationals(at(key), sub(key)); }

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

 private:
  const Json& j_;
  std::string path_;
};

Json strings(const IntVector& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_decimal(x));
  return arr;
}

Json strings(const RatVector& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_fraction(x));
  return arr;
}

Json intervals_json(const std::vector<Interval>& ivs) {
  Json arr = Json::array();
  for (const auto& iv : ivs) arr.push_back(Json::array({to_fraction(iv.lo), to_fraction(iv.hi)}));
  return arr;
}

std::vector<Interval> intervals_of(const Reader& r, const char* key) {
  std::vector<Interval> out;
  const Json& arr = r.array(key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = r.sub(key) + "/" + std::to_string(i);
    if (!arr[i].is_array() || arr[i].size() != 2) Reader::fail_at(p, "expected a [lo, hi] pair");
    out.push_back({Reader::rational(arr[i][0], p + "/0"), Reader::rational(arr[i][1], p + "/1")});
  }
  return out;
}

}  // namespace

// --- instance --------------------------------------------------------------

Json to_json(const Instance& inst) {
  Json j;
  j["kind"] = "instance";
  j["n"] = inst.n();
  j["a"] = strings(inst.weights());
  if (inst.seed()) j["seed"] = *inst.seed();
  return j;
}

Instance instance_from_json(const Json& j, bool allow_common_divisor) {
  Reader r(j, "");
  r.expect_kind("instance");
  const std::uint64_t n = r.uint("n");
  IntVector a = r.integers("a");
  if (a.size() != n) Reader::fail_at("/a", "length " + std::to_string(a.size()) + " does not match n = " + std::to_string(n));
  if (n == 0) Reader::fail_at("/n", "n must be at least 1");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) Reader::fail_at("/a/" + std::to_string(i), "weights must be positive");
  }
  if (!allow_common_divisor && gcd_of(a) != 1) Reader::fail_at("/a", "weights not coprime");
  std::optional<std::uint64_t> seed;
  if (r.has("seed")) seed = r.uint("seed");
  return Instance(std::move(a), seed, allow_common_divisor);
}

// --- decomposition ---------------------------------------------------------

Json to_json(const Decomposition& dec) {
  Json j;
  j["kind"] = "decomposition";
  j["method"] = to_string(dec.method);
  j["v"] = strings(dec.v);
  j["lambda"] = to_fraction(dec.lambda);
  j["r"] = strings(dec.r);
  Json bounds = Json::array();
  for (const auto& b : dec.bounds) bounds.push_back({{"name", b.name}, {"holds", b.holds}, {"lhs", b.lhs}, {"rhs", b.rhs}});
  j["bounds"] = bounds;
  j["warnings"] = dec.warnings;
  if (const auto* ap = std::get_if<ApproxResult>(&dec.provenance)) {
    j["provenance"] = {{"kind", "diophantine"},
                       {"q", to_decimal(ap->q)},
                       {"v", strings(ap->v)},
                       {"N", to_decimal(ap->N)},
                       {"err_inf", to_fraction(ap->err_inf)},
                       {"q_bound_pow4", to_decimal(ap->q_bound_pow4)}};
  } else {
    const auto& st = std::get<ReductionStats>(dec.provenance);
    j["provenance"] = {{"kind", "reduction"}, {"swaps", st.swaps}, {"size_reductions", st.size_reductions}};
  }
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Reader r(j, "");
  r.expect_kind("decomposition");
  Decomposition dec;
  try {
    dec.method = method_from_string(r.string("method"));
  } catch (const DomainError& e) {
    Reader::fail_at("/method", e.what());
  }
  dec.v = r.integers("v");
  dec.lambda = r.rational("lambda");
  dec.r = r.rationals("r");
  if (dec.v.empty()) Reader::fail_at("/v", "direction must be nonempty");
  if (dec.r.size() != dec.v.size()) Reader::fail_at("/r", "length does not match v");
  if (sgn(dec.lambda) <= 0) Reader::fail_at("/lambda", "lambda must be positive");

  if (r.has("warnings")) {
    const Json& w = r.array("warnings");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_string()) Reader::fail_at("/warnings/" + std::to_string(i), "expected a string");
      dec.warnings.push_back(w[i].get<std::string>());
    }
  }
  const bool mixed_ok = std::find(dec.warnings.begin(), dec.warnings.end(), kMixedSignWarning) != dec.warnings.end() &&
                        dec.method == Method::lll_rows;
  for (std::size_t i = 0; i < dec.v.size(); ++i) {
    if (dec.v[i] < 0 && !mixed_ok) Reader::fail_at("/v/" + std::to_string(i), "direction must be nonnegative");
  }

  const Json& bounds = r.array("bounds");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    Reader b(bounds[i], "/bounds/" + std::to_string(i));
    dec.bounds.push_back({b.string("name"), b.boolean("holds"), b.string("lhs"), b.string("rhs")});
  }

  Reader p(r.at("provenance"), "/provenance");
  const std::string kind = p.string("kind");
  if (kind == "diophantine") {
    ApproxResult ap;
    ap.q = p.integer("q");
    ap.v = p.integers("v");
    ap.N = p.integer("N");
    ap.err_inf = p.rational("err_inf");
    ap.q_bound_pow4 = p.integer("q_bound_pow4");
    if (ap.q < 1) Reader::fail_at("/provenance/q", "q must be positive");
    if (ap.N < 1) Reader::fail_at("/provenance/N", "N must be positive");
    dec.provenance = std::move(ap);
  } else if (kind == "reduction") {
    dec.provenance = ReductionStats{p.uint("swaps"), p.uint("size_reductions")};
  } else {
    Reader::fail_at("/provenance/kind", "unknown provenance '" + kind + "'");
  }
  return dec;
}

// --- certificate -----------------------------------------------------------

Json to_json(const CertificateDocument& doc) {
  Json j;
  j["kind"] = "certificate";
  j["status"] = to_string(doc.status);
  j["beta"] = to_decimal(doc.beta);
  if (doc.certificate) {
    const Certificate& c = *doc.certificate;
    j["ell"] = to_decimal(c.ell);
    j["vmin"] = to_fraction(c.vmin);
    j["vmax"] = to_fraction(c.vmax);
    j["args"] = {{"min", strings(c.arg_min)}, {"max", strings(c.arg_max)}};
  }
  if (doc.v) j["v"] = strings(*doc.v);
  if (doc.lambda) j["lambda"] = to_fraction(*doc.lambda);
  if (doc.r) j["r"] = strings(*doc.r);
  return j;
}

CertificateDocument certificate_from_json(const Json& j) {
  Reader r(j, "");
  r.expect_kind("certificate");
  CertificateDocument doc;
  try {
    doc.status = certify_status_from_string(r.string("status"));
  } catch (const DomainError& e) {
    Reader::fail_at("/status", e.what());
  }
  doc.beta = r.integer("beta");
  if (doc.status == CertifyStatus::certified) {
    Certificate c;
    c.beta = doc.beta;
    c.ell = r.integer("ell");
    c.vmin = r.rational("vmin");
    c.vmax = r.rational("vmax");
    Reader args(r.at("args"), "/args");
    c.arg_min = args.rationals("min");
    c.arg_max = args.rationals("max");
    doc.certificate = std::move(c);
  } else if (r.has("ell")) {
    Reader::fail_at("/ell", "only certified documents carry a proof");
  }
  if (r.has("v")) doc.v = r.integers("v");
  if (r.has("lambda")) doc.lambda = r.rational("lambda");
  if (r.has("r")) doc.r = r.rationals("r");
  return doc;
}

// --- intervals -------------------------------------------------------------

Json to_json(const IntervalCover& cover) {
  Json j;
  j["kind"] = "intervals";
  j["k_lo"] = to_decimal(cover.k_lo);
  j["k_hi"] = to_decimal(cover.k_hi);
  j["bad"] = intervals_json(cover.bad);
  j["good"] = intervals_json(cover.good);
  j["interlaced"] = cover.interlaced;
  j["good_lengths_ok"] = cover.good_lengths_ok;
  j["length_floor"] = to_fraction(cover.length_floor);
  j["partitions_range"] = cover.partitions_range ? Json(*cover.partitions_range) : Json(nullptr);
  return j;
}

IntervalCover intervals_from_json(const Json& j) {
  Reader r(j, "");
  r.expect_kind("intervals");
  IntervalCover c;
  c.k_lo = r.integer("k_lo");
  c.k_hi = r.integer("k_hi");
  c.bad = intervals_of(r, "bad");
  c.good = intervals_of(r, "good");
  c.interlaced = r.boolean("interlaced");
  c.good_lengths_ok = r.boolean("good_lengths_ok");
  c.length_floor = r.rational("length_floor");
  if (r.has("partitions_range")) c.partitions_range = r.boolean("partitions_range");
  if (c.k_hi < c.k_lo) Reader::fail_at("/k_hi", "k_hi < k_lo");
  return c;
}

// --- coverage --------------------------------------------------------------

Json to_json(const CoverageStats& s) {
  Json j;
  j["kind"] = "coverage";
  j["mode"] = to_string(s.mode);
  j["g"] = to_decimal(s.g);
  j["b"] = to_decimal(s.b);
  j["bad_fraction"] = to_fraction(s.bad_fraction);
  j["coverage_bound"] = to_fraction(s.coverage_bound);
  j["two_pow_n_bound"] = to_fraction(s.two_pow_n_bound);
  j["sample_size"] = s.sample_size;
  j["seed"] = s.seed ? Json(*s.seed) : Json(nullptr);
  j["within_bound"] = s.within_bound;
  return j;
}

CoverageStats coverage_from_json(const Json& j) {
  Reader r(j, "");
  r.expect_kind("coverage");
  CoverageStats s;
  try {
    s.mode = coverage_mode_from_string(r.string("mode"));
  } catch (const DomainError& e) {
    Reader::fail_at("/mode", e.what());
  }
  s.g = r.integer("g");
  s.b = r.integer("b");
  s.bad_fraction = r.rational("bad_fraction");
  s.coverage_bound = r.rational("coverage_bound");
  s.two_pow_n_bound = r.rational("two_pow_n_bound");
  s.sample_size = r.uint("sample_size");
  if (r.has("seed")) s.seed = r.uint("seed");
  s.within_bound = r.boolean("within_bound");
  return s;
}

// --- cor1 report ------------------------------------------------------------

Json to_json(const Cor1Report& rep) {
  Json j;
  j["kind"] = "cor1";
  j["mode"] = to_string(rep.mode);
  j["infeasible_count"] = to_decimal(rep.infeasible_count);
  j["certified_infeasible_count"] = to_decimal(rep.certified_infeasible_count);
  j["fraction"] = to_fraction(rep.fraction);
  j["bound"] = to_fraction(rep.bound);
  j["sample_size"] = rep.sample_size;
  j["seed"] = rep.seed ? Json(*rep.seed) : Json(nullptr);
  j["cross_checked"] = rep.cross_checked;
  j["meets_bound"] = rep.meets_bound;
  j["empty_set_convention"] = "fraction is 1 when no right-hand side is infeasible";
  return j;
}

Cor1Report cor1_from_json(const Json& j) {
  Reader r(j, "");
  r.expect_kind("cor1");
  Cor1Report rep;
  try {
    rep.mode = coverage_mode_from_string(r.string("mode"));
  } catch (const DomainError& e) {
    Reader::fail_at("/mode", e.what());
  }
  rep.infeasible_count = r.integer("infeasible_count");
  rep.certified_infeasible_count = r.integer("certified_infeasible_count");
  rep.fraction = r.rational("fraction");
  rep.bound = r.rational("bound");
  rep.sample_size = r.uint("sample_size");
  if (r.has("seed")) rep.seed = r.uint("seed");
  rep.cross_checked = r.boolean("cross_checked");
  rep.meets_bound = r.boolean("meets_bound");
  if (rep.certified_infeasible_count > rep.infeasible_count) {
    Reader::fail_at("/certified_infeasible_count", "exceeds infeasible_count");
  }
  return rep;
}

// --- text ------------------------------------------------------------------

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

Json load_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
}

Instance parse_instance(const std::string& text, bool allow_common_divisor) {
  return instance_from_json(load_document(text), allow_common_divisor);
}
Decomposition parse_decomposition(const std::string& text) { return decomposition_from_json(load_document(text)); }
CertificateDocument parse_certificate(const std::string& text) { return certificate_from_json(load_document(text)); }
IntervalCover parse_intervals(const std::string& text) { return intervals_from_json(load_document(text)); }
CoverageStats parse_coverage(const std::string& text) { return coverage_from_json(load_document(text)); }
Cor1Report parse_cor1(const std::string& text) { return cor1_from_json(load_document(text)); }

}  // namespace ssbranch
