#include "lpcert/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lpcert/error.hpp"

namespace lpcert::json_io {

namespace {

std::string region_kind_name(Region::Kind k) {
  switch (k) {
    case Region::Kind::Point: return "point";
    case Region::Kind::Closed: return "closed";
    case Region::Kind::Open: return "open";
    case Region::Kind::Ray: return "ray";
  }
  return "";
}

std::string sign_claim_name(SignClaim c) {
  switch (c) {
    case SignClaim::NonNegative: return "nonnegative";
    case SignClaim::Positive: return "positive";
    case SignClaim::NonPositive: return "nonpositive";
    case SignClaim::Negative: return "negative";
  }
  return "";
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string show(const Interval& x, int digits = 12) {
  if (x.is_point()) return x.lo().decimal(digits);
  return "[" + x.lo().decimal(digits) + ", " + x.hi().decimal(digits) + "]";
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::Parse, "rational must be a string \"num/den\" or an integer, got " + j.dump());
}

Json to_json(const Interval& x) { return Json::array({x.lo().str(), x.hi().str()}); }

Interval interval_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(ErrorCode::Parse, "interval must be [lo, hi]");
    const Rational lo = rational_from_json(j[0]);
    const Rational hi = rational_from_json(j[1]);
    if (hi < lo) throw Error(ErrorCode::Parse, "interval with lo > hi: " + j.dump());
    return {lo, hi};
  }
  return Interval(rational_from_json(j));
}

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.str());
  if (a.empty()) a.push_back("0/1");
  return a;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::Parse, "polynomial must be a nonempty coefficient array");
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(rational_from_json(c));
  return Polynomial(std::move(cs));
}

Json to_json(const Region& r) {
  Json j;
  j["kind"] = region_kind_name(r.kind);
  j["lo"] = to_json(r.lo);
  if (r.kind == Region::Kind::Closed || r.kind == Region::Kind::Open) j["hi"] = to_json(r.hi);
  return j;
}

Json to_json(const SignCertificate& c) {
  Json j;
  j["region"] = to_json(c.region);
  j["claim"] = sign_claim_name(c.claim);
  j["distinct_roots"] = c.distinct_roots;
  j["sign_change_roots"] = c.sign_change_roots;
  j["sample"] = to_json(c.sample);
  j["sample_value"] = to_json(c.sample_value);
  Json bv = Json::array();
  for (const auto& [x, v] : c.boundary_values) bv.push_back(Json::array({x.str(), v.str()}));
  j["boundary_values"] = bv;
  return j;
}

Json certificate_to_json(const RadialCertificate& cert) {
  Json j;
  j["dimension"] = cert.dimension();
  j["p"] = to_json(cert.p());
  if (cert.sign_change_radius()) j["sign_change_radius"] = to_json(*cert.sign_change_radius());
  return j;
}

RadialCertificate certificate_from_json(const Json& j) {
  const Json& dim = member(j, "dimension");
  if (!dim.is_number_integer()) throw Error(ErrorCode::Parse, "dimension must be an integer");
  std::optional<Rational> radius;
  if (j.contains("sign_change_radius") && !j.at("sign_change_radius").is_null()) {
    radius = rational_from_json(j.at("sign_change_radius"));
  }
  return RadialCertificate(dim.get<int>(), polynomial_from_json(member(j, "p")), radius);
}

Json gram_to_json(const GramMatrix& gram) {
  Json rows = Json::array();
  for (const auto& row : gram.entries()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.is_point() ? to_json(e.lo()) : to_json(e));
    rows.push_back(r);
  }
  Json j;
  j["dimension"] = gram.dimension();
  j["gram"] = rows;
  return j;
}

GramMatrix gram_from_lattice_json(const Json& j) {
  auto read_matrix = [](const Json& m) {
    if (!m.is_array() || m.empty()) throw Error(ErrorCode::Parse, "matrix must be a nonempty array of rows");
    IntervalMatrix out;
    for (const auto& row : m) {
      if (!row.is_array()) throw Error(ErrorCode::Parse, "matrix row must be an array");
      std::vector<Interval> r;
      for (const auto& e : row) r.push_back(interval_from_json(e));
      out.push_back(std::move(r));
    }
    return out;
  };
  IntervalMatrix m;
  bool is_gram = false;
  if (j.is_object() && j.contains("gram")) {
    m = read_matrix(j.at("gram"));
    is_gram = true;
  } else if (j.is_object() && j.contains("basis")) {
    m = read_matrix(j.at("basis"));
  } else {
    throw Error(ErrorCode::Parse, "lattice must contain 'gram' or 'basis'");
  }
  if (j.contains("dimension")) {
    const Json& d = j.at("dimension");
    if (!d.is_number_integer() || d.get<long>() != static_cast<long>(m.size())) {
      throw Error(ErrorCode::Parse, "dimension does not match the matrix size");
    }
  }
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorCode::Parse, "matrix must be square");
  }
  if (is_gram) return GramMatrix(std::move(m));
  return gram_and_covolume(LatticeBasis(std::move(m))).gram;
}

Json to_json(const LatticeVector& v) {
  Json j;
  j["coords"] = v.coords;
  j["norm"] = to_json(v.norm);
  j["membership"] = v.membership == Membership::Certain ? "certain" : "possible";
  return j;
}

Json to_json(const LatticeSummary& s) {
  Json j;
  j["minimal_norm"] = to_json(s.minimal_norm);
  j["determinant"] = to_json(s.determinant);
  j["density"] = to_json(s.density);
  j["kissing_number"] = s.kissing_number;
  j["kissing_certain"] = s.kissing_certain;
  return j;
}

Json to_json(const Claim& c) {
  Json j;
  j["id"] = c.id;
  j["kind"] = claim_kind_name(c.kind);
  j["statement"] = c.statement;
  j["verdict"] = verdict_name(c.verdict);
  if (c.lhs) j["lhs"] = to_json(*c.lhs);
  if (c.rhs) j["rhs"] = to_json(*c.rhs);
  if (c.polynomial) j["polynomial"] = to_json(*c.polynomial);
  if (c.sign) j["sign_certificate"] = to_json(*c.sign);
  if (!c.premises.empty()) j["premises"] = c.premises;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const StepRecord& s) {
  Json j;
  j["name"] = s.name;
  j["lemma"] = s.lemma;
  Json inputs = Json::object();
  for (const auto& [k, v] : s.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  Json claims = Json::array();
  for (const auto& c : s.claims) claims.push_back(to_json(c));
  j["claims"] = claims;
  j["verdict"] = verdict_name(s.verdict);
  if (!s.failure.empty()) j["failure"] = s.failure;
  return j;
}

Json to_json(const ProofReport& r) {
  Json j;
  j["theorem"] = "the hexagonal lattice is the unique densest lattice in R^2, up to scaling and isometry";
  j["result"] = overall_name(r);
  j["verdict"] = verdict_name(r.verdict);
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  j["steps"] = steps;
  return j;
}

Json to_json(const PoissonCheckReport& r) {
  Json j;
  j["lattice"] = r.lattice_id;
  j["certificate"] = r.certificate_id;
  j["radius"] = to_json(r.radius);
  j["tolerance"] = to_json(r.tolerance);
  j["lhs_truncated"] = to_json(r.lhs_truncated);
  j["rhs_truncated"] = to_json(r.rhs_truncated);
  j["lhs_tail_bound"] = to_json(r.lhs_tail_bound);
  j["rhs_tail_bound"] = to_json(r.rhs_tail_bound);
  j["covolume"] = to_json(r.covolume);
  j["lhs_total"] = to_json(r.lhs_total);
  j["rhs_total_scaled"] = to_json(r.rhs_total_scaled);
  j["lhs_points"] = r.lhs_points;
  j["rhs_points"] = r.rhs_points;
  j["verdict"] = poisson_verdict_name(r.verdict);
  return j;
}

std::string transcript(const StepRecord& s, int index) {
  std::ostringstream os;
  os << "Step " << index << ": " << s.name << " [" << verdict_name(s.verdict) << "]\n";
  os << "  Lemma: " << s.lemma << "\n";
  for (const auto& [k, v] : s.inputs) os << "  input " << k << " = " << v << "\n";
  for (const auto& c : s.claims) {
    os << "  - [" << verdict_name(c.verdict) << "] " << c.id << " (" << claim_kind_name(c.kind) << "): " << c.statement
       << "\n";
    if (c.lhs && c.rhs) os << "      lhs " << show(*c.lhs) << "   rhs " << show(*c.rhs) << "\n";
    if (c.sign) {
      os << "      p " << claim_symbol(c.sign->claim) << " 0 on " << c.sign->region.str() << " ("
         << c.sign->distinct_roots << " roots in region)\n";
    }
    if (!c.premises.empty()) {
      os << "      from:";
      for (const auto& p : c.premises) os << " " << p;
      os << "\n";
    }
    if (!c.note.empty()) os << "      note: " << c.note << "\n";
  }
  if (!s.failure.empty()) os << "  first unverified claim: " << s.failure << "\n";
  return os.str();
}

std::string transcript(const ProofReport& r) {
  std::ostringstream os;
  os << "Theorem: the hexagonal lattice is the unique densest lattice in R^2, up to scaling and isometry.\n\n";
  int i = 1;
  for (const auto& s : r.steps) os << transcript(s, i++) << "\n";
  os << "Result: " << overall_name(r) << " (" << r.steps.size() << " of 8 steps run)\n";
  return os.str();
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, "'" + path + "': " + e.what());
  }
}

}  // namespace lpcert::json_io
