#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floerlink/lattice.hpp"

namespace floerlink {

/// Catalog-supplied hypotheses about a link. These cannot be computed from
/// polynomial data, so detection verdicts always report which of them a
/// conclusion depends on.
struct LinkFlags {
  bool lspace = false;
  bool brunnian = false;
  bool unknotted_components = false;
  bool split = false;
};

enum class Conclusion {
  Unlink,
  Whitehead,
  Borromean,
  WhiteheadOrSplitTrefoil,
  Infeasible,
  Inconclusive,
};

std::string conclusion_name(Conclusion c);

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<std::string> hypotheses_used;
  std::optional<long long> witness;  // invariant value the verdict hinges on
  std::string criterion;             // short rule id of the applied statement
  std::string detail;
};

/// An L-space link with h(0) = 0 is the unlink; additionally a Brunnian
/// L-space link with at least four components is always the unlink.
/// Throws HypothesisMissing without the L-space flag.
Verdict detect_unlink(const HModel& m, const LinkFlags& flags);

/// Two-component detection: an algebraically split L-space link with
/// unknotted components whose h function is the delta function at the origin
/// is the Whitehead link (equivalently |beta| = 1 under those flags). The
/// split-trefoil h pattern yields the WhiteheadOrSplitTrefoil alternative.
Verdict detect_whitehead(const HModel& m, const LinkFlags& flags);

/// Three-component Brunnian L-space detection: mu_123 = +-1 identifies the
/// Borromean rings; mu_123 = 0 identifies the unlink.
Verdict detect_borromean(const HModel& m, const LinkFlags& flags, long long mu);

/// Feasibility filter for Brunnian L-space candidates: sum h must be a
/// perfect square mu^2 with |mu| != 2 and parity(|mu|) = parity(h(0)).
/// Returns Infeasible with the violated rule, or Inconclusive with the
/// feasible |mu| as witness.
Verdict feasibility_brunnian(const HModel& m, const LinkFlags& flags);

/// Seifert genus of an L-space knot from its h table: 0 for the empty table,
/// otherwise (max support) + 1.
long long lspace_knot_genus(const HPrimeTable& h, const LinkFlags& flags);

}  // namespace floerlink
