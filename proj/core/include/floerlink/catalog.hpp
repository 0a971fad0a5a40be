#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floerlink/alexander.hpp"
#include "floerlink/detect.hpp"
#include "floerlink/invariants.hpp"
#include "floerlink/lattice.hpp"

namespace floerlink {

/// One catalog entry. Polynomials use the symmetric normalization on the
/// doubled exponent lattice; only algebraically split links (all pairwise
/// linking numbers zero) are admitted.
struct LinkRecord {
  std::string name;
  int n = 1;
  std::vector<std::vector<long long>> linking;     // n x n, all zero
  std::optional<NormalizedAlexander> alexander;
  LinkFlags flags;
  std::map<unsigned, std::string> sublinks;        // proper sublink mask -> name
  std::optional<ChiPrimeTable> chi_prime;
  std::map<std::string, Rational> expected;        // golden values by key
};

struct Catalog {
  std::map<std::string, LinkRecord> records;
  std::map<std::string, HModel> models;  // validated, built at load time

  const LinkRecord& record(const std::string& name) const;
  const HModel& model(const std::string& name) const;
};

/// Build the per-sublink h' model of a record: full-link table from the
/// Alexander polynomial (knot torsion coefficients for n = 1, the quotient
/// extraction for n >= 2, requiring the L-space flag), proper-sublink tables
/// recursively through the catalog. Brunnian records get empty proper
/// tables without needing sublink references. If the stored polynomial sign
/// produces an invalid model the opposite sign is tried; failure of both is
/// a data error.
HModel build_model(const LinkRecord& record, const Catalog& catalog);

/// Parse, structurally check, build and validate every record; fail-fast
/// with the offending record name in the error message.
Catalog load_catalog(const std::string& path);
Catalog load_catalog_text(const std::string& json_text);

struct VerifyIssue {
  std::string record;
  std::string check;
  std::string detail;
};

/// Full consistency sweep over a loaded catalog: model axioms, Alexander
/// round trips, Euler-characteristic consistency, golden expected values,
/// and the Brunnian feasibility filter. Empty result means all green.
std::vector<VerifyIssue> verify_catalog(const Catalog& c);

/// Names of the checks verify_catalog runs, for reporting.
std::vector<std::string> verify_check_names();

}  // namespace floerlink
