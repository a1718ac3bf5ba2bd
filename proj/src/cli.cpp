#include "lpcert/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "lpcert/error.hpp"
#include "lpcert/json_io.hpp"
#include "lpcert/lattice.hpp"
#include "lpcert/poisson.hpp"
#include "lpcert/proof2d.hpp"
#include "lpcert/radial.hpp"

namespace lpcert::cli {

namespace {

using json_io::Json;

struct GlobalOptions {
  std::string precision = "1e-12";
  int max_refine = 4;
  std::string format = "json";

  Rational width() const {
    const Rational w = Rational::parse(precision);
    if (w.sign() <= 0) throw Error(ErrorCode::Parse, "--precision must be positive");
    return w;
  }
  bool json() const { return format == "json"; }
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Verified: return kVerified;
    case Verdict::Falsified: return kFalsified;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string show(const Interval& x) { return "[" + x.lo().decimal(15) + ", " + x.hi().decimal(15) + "]"; }

std::string scientific(const Rational& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x.value().get_d();
  return os.str();
}

RationalMatrix parse_rows(const std::string& text) {
  RationalMatrix rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Rational> r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) r.push_back(Rational::parse(cell));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, "empty matrix '" + text + "'");
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorCode::Parse, "matrix '" + text + "' is not square");
  }
  return rows;
}

Polynomial parse_coefficients(const std::string& text) {
  std::vector<Rational> cs;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) cs.push_back(Rational::parse(cell));
  if (cs.empty()) throw Error(ErrorCode::Parse, "empty coefficient list");
  return Polynomial(std::move(cs));
}

ProofConfig proof_config(const GlobalOptions& g) {
  ProofConfig config;
  config.width = g.width();
  config.max_refine = g.max_refine;
  return config;
}

// ---- subcommands ---------------------------------------------------------------------------

CommandResult prove_hexagonal(const GlobalOptions& g, const std::string& p_f, const std::string& p_g,
                              const std::string& rho_max) {
  ProofConfig config = proof_config(g);
  if (!p_f.empty()) config.p_f = parse_coefficients(p_f);
  if (!p_g.empty()) config.p_g = parse_coefficients(p_g);
  if (!rho_max.empty()) config.rho_max = Rational::parse(rho_max);
  const ProofReport report = prove_hexagonal_optimal(config);
  CommandResult r;
  r.exit_code = exit_for(report.verdict);
  if (g.json()) {
    Json j;
    j["command"] = "prove-hexagonal";
    j["precision"] = json_io::to_json(config.width);
    j.update(json_io::to_json(report));
    r.output = render(j);
  } else {
    r.output = json_io::transcript(report);
  }
  if (!report.proved() && !report.steps.empty()) {
    r.diagnostics = "stopped at " + report.steps.back().name + ": " + report.steps.back().failure + "\n";
  }
  return r;
}

CommandResult verify_cert(const GlobalOptions& g, const std::string& path) {
  const RadialCertificate cert = json_io::certificate_from_json(json_io::load_file(path));
  if (!cert.sign_change_radius()) throw Error(ErrorCode::Precondition, "certificate has no sign_change_radius");
  ProofConfig config = proof_config(g);
  SignConditionSpec spec;
  spec.label = "f";
  spec.require_equal_at_origin = false;
  spec.strict_negativity = false;
  const StepRecord step = verify_sign_conditions(cert, spec, config);
  CommandResult r;
  r.exit_code = exit_for(step.verdict);
  if (g.json()) {
    Json j;
    j["command"] = "verify-cert";
    j["certificate"] = json_io::certificate_to_json(cert);
    j["p_hat"] = json_io::to_json(cert.p_hat());
    j["verdict"] = verdict_name(step.verdict);
    j["step"] = json_io::to_json(step);
    r.output = render(j);
  } else {
    r.output = "p     = " + cert.p().str() + "\np_hat = " + cert.p_hat().str() + "\n\n" + json_io::transcript(step, 1);
  }
  return r;
}

CommandResult construct_cert(const GlobalOptions& g, int dim, int degree, const std::vector<std::string>& texts,
                             const std::string& radius) {
  std::vector<Constraint> constraints;
  for (const auto& t : texts) constraints.push_back(Constraint::parse(t));
  std::optional<Rational> r;
  if (!radius.empty()) r = Rational::parse(radius);
  const RadialCertificate cert = construct_certificate(dim, degree, constraints, r);
  CommandResult out;
  out.exit_code = kVerified;
  if (g.json()) {
    Json j;
    j["command"] = "construct-cert";
    Json cs = Json::array();
    for (const auto& c : constraints) cs.push_back(c.str());
    j["constraints"] = cs;
    j["certificate"] = json_io::certificate_to_json(cert);
    j["p_hat"] = json_io::to_json(cert.p_hat());
    out.output = render(j);
  } else {
    out.output = "p     = " + cert.p().str() + "\np_hat = " + cert.p_hat().str() + "\n";
  }
  return out;
}

CommandResult lattice_info(const GlobalOptions& g, const std::string& gram_text, const std::string& basis_text,
                           const std::string& lattice_file) {
  const int given = static_cast<int>(!gram_text.empty()) + static_cast<int>(!basis_text.empty()) +
                    static_cast<int>(!lattice_file.empty());
  if (given != 1) throw Error(ErrorCode::Parse, "lattice-info needs exactly one of --gram, --basis, --lattice");
  std::optional<GramMatrix> gram;
  if (!gram_text.empty()) gram = GramMatrix::parse(gram_text);
  if (!basis_text.empty()) gram = gram_and_covolume(LatticeBasis::exact(parse_rows(basis_text))).gram;
  if (!lattice_file.empty()) gram = json_io::gram_from_lattice_json(json_io::load_file(lattice_file));
  const Rational width = g.width();
  const LatticeSummary s = lattice_summary(*gram, width);
  const auto shortest = enumerate_vectors_below(*gram, s.minimal_norm.hi());
  const long bits = bits_for_width(width) + 4;
  const Interval covolume = sqrt(s.determinant, bits);
  CommandResult r;
  r.exit_code = kVerified;
  if (g.json()) {
    Json j;
    j["command"] = "lattice-info";
    j["lattice"] = json_io::gram_to_json(*gram);
    j["covolume"] = json_io::to_json(simplify(covolume, bits));
    j.update(json_io::to_json(s));
    Json vs = Json::array();
    for (const auto& v : shortest.vectors) {
      if (v.norm.intersects(s.minimal_norm)) vs.push_back(json_io::to_json(v));
    }
    j["minimal_vectors"] = vs;
    r.output = render(j);
  } else {
    std::ostringstream os;
    os << "gram            " << gram->str() << "\n"
       << "determinant     " << show(s.determinant) << "\n"
       << "covolume        " << show(covolume) << "\n"
       << "minimal norm    " << show(s.minimal_norm) << "\n"
       << "kissing number  " << s.kissing_number << (s.kissing_certain ? "" : " (uncertain)") << "\n"
       << "density         " << show(s.density) << "\n";
    r.output = os.str();
  }
  return r;
}

CommandResult poisson_check(const GlobalOptions& g, const std::string& lattice_file, const std::string& cert_file,
                            const std::string& radius, const std::string& tol) {
  const GramMatrix gram = json_io::gram_from_lattice_json(json_io::load_file(lattice_file));
  const RadialCertificate cert = json_io::certificate_from_json(json_io::load_file(cert_file));
  PoissonOptions options;
  options.width = g.width();
  PoissonCheckReport report =
      poisson_identity_check(gram, cert, Rational::parse(radius), Rational::parse(tol), options);
  report.lattice_id = lattice_file;
  report.certificate_id = cert_file;
  CommandResult r;
  switch (report.verdict) {
    case PoissonVerdict::Consistent: r.exit_code = kVerified; break;
    case PoissonVerdict::Violated: r.exit_code = kFalsified; break;
    case PoissonVerdict::Inconclusive: r.exit_code = kInconclusive; break;
  }
  if (g.json()) {
    Json j;
    j["command"] = "poisson-check";
    j.update(json_io::to_json(report));
    r.output = render(j);
  } else {
    std::ostringstream os;
    os << "sum f(x), |x| <= R           " << show(report.lhs_truncated) << "  (" << report.lhs_points << " points)\n"
       << "sum f_hat(y), |y| <= R       " << show(report.rhs_truncated) << "  (" << report.rhs_points << " points)\n"
       << "tail bounds                  " << scientific(report.lhs_tail_bound) << ", "
       << scientific(report.rhs_tail_bound) << "\n"
       << "lhs total                    " << show(report.lhs_total) << "\n"
       << "rhs total / covolume         " << show(report.rhs_total_scaled) << "\n"
       << "verdict                      " << poisson_verdict_name(report.verdict) << "\n";
    r.output = os.str();
  }
  return r;
}

CommandResult lp_bound(const GlobalOptions& g, const std::string& cert_file) {
  const RadialCertificate cert = json_io::certificate_from_json(json_io::load_file(cert_file));
  const Rational width = g.width();
  CommandResult r;
  Json j;
  j["command"] = "lp-bound";
  j["certificate"] = json_io::certificate_to_json(cert);
  try {
    const LpConditions conditions = verify_lp_conditions(cert, width);
    const Interval bound = lp_density_bound(cert, conditions, width);
    r.exit_code = kVerified;
    j["verdict"] = "verified";
    j["u_threshold"] = json_io::to_json(conditions.u_threshold);
    j["negativity"] = json_io::to_json(conditions.negativity);
    j["transform_nonnegative"] = json_io::to_json(conditions.transform_nonneg);
    j["density_bound"] = json_io::to_json(bound);
    r.output = g.json() ? render(j) : "packing density <= " + show(bound) + "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnverifiedCertificate) throw;
    r.exit_code = kFalsified;
    j["verdict"] = "falsified";
    j["reason"] = e.what();
    r.output = g.json() ? render(j) : std::string("not a valid certificate: ") + e.what() + "\n";
  }
  return r;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Verifier for linear-programming packing certificates and the planar lattice proof", "lpcert"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--precision", g.precision, "target width of transcendental enclosures (rational)");
  app.add_option("--max-refine", g.max_refine, "refinement rounds for strict inequalities")
      ->check(CLI::Range(0, 64));
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));

  std::string p_f, p_g, rho_max;
  auto* prove = app.add_subcommand("prove-hexagonal", "run the eight-step optimality proof");
  prove->add_option("--p-f", p_f, "override p_f coefficients, lowest degree first");
  prove->add_option("--p-g", p_g, "override p_g coefficients, lowest degree first");
  prove->add_option("--rho-max", rho_max, "local optimality radius (at most 12/47)");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify-cert", "certify the sign conditions of a certificate file");
  verify->add_option("file", cert_path, "certificate JSON")->required();

  int dim = 0;
  int degree = 0;
  std::vector<std::string> constraints;
  std::string construct_radius;
  auto* construct = app.add_subcommand("construct-cert", "solve linear constraints for a certificate");
  construct->add_option("--dim", dim, "dimension")->required();
  construct->add_option("--degree", degree, "degree of p")->required();
  construct->add_option("--constraint", constraints, "root:U0:M | hat-root:U0:M | f0=fhat0")->required();
  construct->add_option("--radius", construct_radius, "sign-change radius to attach");

  std::string gram_text, basis_text, lattice_file;
  auto* info = app.add_subcommand("lattice-info", "minimal norm, kissing number and density");
  auto* gram_opt = info->add_option("--gram", gram_text, "inline Gram \"a,b;b,c\"");
  auto* basis_opt = info->add_option("--basis", basis_text, "inline basis rows \"a,b;c,d\"");
  info->add_option("--lattice", lattice_file, "lattice JSON file");
  gram_opt->excludes(basis_opt);

  std::string poisson_lattice, poisson_cert, radius = "6", tol = "1e-6";
  auto* poisson = app.add_subcommand("poisson-check", "check the Poisson summation identity numerically");
  poisson->add_option("--lattice", poisson_lattice, "lattice JSON file")->required();
  poisson->add_option("--cert", poisson_cert, "certificate JSON file")->required();
  poisson->add_option("--radius", radius, "truncation radius R");
  poisson->add_option("--tol", tol, "tolerance on total enclosure widths");

  std::string lp_cert;
  auto* lp = app.add_subcommand("lp-bound", "packing density bound from a certificate");
  lp->add_option("--cert", lp_cert, "certificate JSON file")->required();

  for (auto* sub : {prove, verify, construct, info, poisson, lp}) sub->fallthrough();

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.output = out.str();
    result.diagnostics = err.str();
    result.exit_code = code == 0 ? kVerified : kUsage;
    return result;
  }
  try {
    if (*prove) return prove_hexagonal(g, p_f, p_g, rho_max);
    if (*verify) return verify_cert(g, cert_path);
    if (*construct) return construct_cert(g, dim, degree, constraints, construct_radius);
    if (*info) return lattice_info(g, gram_text, basis_text, lattice_file);
    if (*poisson) return poisson_check(g, poisson_lattice, poisson_cert, radius, tol);
    if (*lp) return lp_bound(g, lp_cert);
  } catch (const Error& e) {
    result.exit_code = e.code() == ErrorCode::PrecisionUnreachable ? kInconclusive : kUsage;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = kUsage;
    result.diagnostics = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.diagnostics = "no subcommand given\n";
  return result;
}

}  // namespace lpcert::cli
