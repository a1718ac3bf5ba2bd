#pragma once

#include <string>

#include "json.hpp"
#include "lpcert/lattice.hpp"
#include "lpcert/poisson.hpp"
#include "lpcert/proof2d.hpp"
#include "lpcert/radial.hpp"
#include "lpcert/sturm.hpp"

namespace lpcert::json_io {

using Json = nlohmann::ordered_json;

/// Rationals as "num/den"; inputs may also be JSON integers or decimal strings.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
/// Intervals as ["lo", "hi"]; a bare rational input is read as a point interval.
Json to_json(const Interval& x);
Interval interval_from_json(const Json& j);
/// Coefficient array, lowest degree first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json to_json(const Region& r);
Json to_json(const SignCertificate& c);

/// {"dimension", "p", "sign_change_radius"?}; p_hat is never serialized.
Json certificate_to_json(const RadialCertificate& cert);
/// Throws Parse on malformed input, InvalidDimension on a bad dimension.
RadialCertificate certificate_from_json(const Json& j);

/// {"dimension", "gram"} or {"basis"} with rational (or ["lo","hi"]) entries.
Json gram_to_json(const GramMatrix& gram);
GramMatrix gram_from_lattice_json(const Json& j);

Json to_json(const LatticeVector& v);
Json to_json(const LatticeSummary& s);
Json to_json(const Claim& c);
Json to_json(const StepRecord& s);
Json to_json(const ProofReport& r);
Json to_json(const PoissonCheckReport& r);

/// Human-readable transcript of a proof, one block per step.
std::string transcript(const ProofReport& r);
std::string transcript(const StepRecord& s, int index);

/// Reads and parses a JSON file; throws Parse with the path on failure.
Json load_file(const std::string& path);

}  // namespace lpcert::json_io
