#include "floerlink/detect.hpp"

#include <cmath>

namespace floerlink {

std::string conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::Unlink: return "Unlink";
    case Conclusion::Whitehead: return "Whitehead";
    case Conclusion::Borromean: return "Borromean";
    case Conclusion::WhiteheadOrSplitTrefoil: return "WhiteheadOrSplitTrefoil";
    case Conclusion::Infeasible: return "Infeasible";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::optional<long long> exact_sqrt(long long v) {
  if (v < 0) return std::nullopt;
  long long r = std::llround(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

// h equals the delta function at the origin: full table = {0 -> 1},
// every proper-sublink table empty.
bool h_is_delta_origin(const HModel& m) {
  const unsigned full = SublinkId::full(m.n).mask;
  for (const auto& [mask, t] : m.tables) {
    if (mask != full) {
      if (!t.support.empty()) return false;
      continue;
    }
    if (t.support.size() != 1) return false;
    const auto& [s, v] = *t.support.begin();
    if (v != 1) return false;
    for (int c : s)
      if (c != 0) return false;
  }
  return m.tables.count(full) != 0;
}

}  // namespace

Verdict detect_unlink(const HModel& m, const LinkFlags& flags) {
  if (!flags.lspace)
    throw Error(Errc::HypothesisMissing, "unlink detection needs the L-space flag");
  Verdict v;
  const long long h0 = eval_h(m, LatticePoint(m.n, 0));
  v.witness = h0;
  if (h0 == 0) {
    v.conclusion = Conclusion::Unlink;
    v.hypotheses_used = {"L-space"};
    v.criterion = "lspace-h-origin-zero";
    v.detail = "h(0) = 0 for an L-space link forces the unlink";
  } else if (flags.brunnian && m.n >= 4) {
    v.conclusion = Conclusion::Unlink;
    v.hypotheses_used = {"L-space", "Brunnian", ">= 4 components"};
    v.criterion = "brunnian-four-components";
    v.detail = "every Brunnian L-space link with >= 4 components is the unlink";
  } else {
    v.criterion = "lspace-h-origin-zero";
    v.detail = "h(0) != 0";
  }
  return v;
}

Verdict detect_whitehead(const HModel& m, const LinkFlags& flags) {
  if (m.n != 2)
    throw Error(Errc::WrongArity, "Whitehead detection needs two components");
  if (!flags.lspace)
    throw Error(Errc::HypothesisMissing, "Whitehead detection needs the L-space flag");
  Verdict v;
  if (h_is_delta_origin(m)) {
    v.conclusion = Conclusion::Whitehead;
    v.hypotheses_used = {"L-space", "algebraically split", "2 components"};
    v.criterion = "h-delta-origin";
    v.witness = 1;
    v.detail = "h is the delta function at the origin";
    return v;
  }
  const long long beta = std::llabs(m.table(SublinkId::full(2)).sum());
  if (flags.unknotted_components && beta == 1) {
    v.conclusion = Conclusion::Whitehead;
    v.hypotheses_used = {"L-space", "algebraically split", "unknotted components"};
    v.criterion = "beta-one";
    v.witness = beta;
    v.detail = "|beta| = 1 with unknotted components";
    return v;
  }
  // Split trefoil pattern: h' of the full link vanishes and exactly one
  // component carries the trefoil h table {0 -> 1}.
  const auto full_it = m.tables.find(SublinkId::full(2).mask);
  const bool full_empty = full_it == m.tables.end() || full_it->second.support.empty();
  int trefoil_components = 0, nontrivial_components = 0;
  for (unsigned mask : {1u, 2u}) {
    auto it = m.tables.find(mask);
    if (it == m.tables.end() || it->second.support.empty()) continue;
    ++nontrivial_components;
    if (it->second.support.size() == 1 && it->second.at({0}) == 1)
      ++trefoil_components;
  }
  if (full_empty && nontrivial_components == 1 && trefoil_components == 1) {
    v.conclusion = Conclusion::WhiteheadOrSplitTrefoil;
    v.hypotheses_used = {"L-space", "algebraically split", "2 components"};
    v.criterion = "split-trefoil-pattern";
    v.witness = beta;
    v.detail = "h matches the split union of a trefoil and an unknot";
    return v;
  }
  v.criterion = "h-delta-origin";
  v.witness = beta;
  v.detail = "h pattern matches no two-component detection statement";
  return v;
}

Verdict detect_borromean(const HModel& m, const LinkFlags& flags, long long mu) {
  if (m.n != 3)
    throw Error(Errc::WrongArity, "Borromean detection needs three components");
  if (!flags.lspace || !flags.brunnian)
    throw Error(Errc::HypothesisMissing,
                "Borromean detection needs the Brunnian and L-space flags");
  Verdict v;
  v.witness = mu;
  v.hypotheses_used = {"L-space", "Brunnian", "3 components"};
  if (mu == 1 || mu == -1) {
    v.conclusion = Conclusion::Borromean;
    v.criterion = "brunnian-mu-one";
    v.detail = "mu_123 = +-1 identifies the Borromean rings";
  } else if (mu == 0) {
    v.conclusion = Conclusion::Unlink;
    v.criterion = "brunnian-mu-zero";
    v.detail = "mu_123 = 0 identifies the three-component unlink";
  } else {
    v.criterion = "brunnian-mu-one";
    v.detail = "|mu_123| > 1: no detection statement applies";
  }
  return v;
}

Verdict feasibility_brunnian(const HModel& m, const LinkFlags& flags) {
  if (m.n != 3)
    throw Error(Errc::WrongArity, "feasibility filter needs three components");
  if (!flags.lspace || !flags.brunnian)
    throw Error(Errc::HypothesisMissing,
                "feasibility filter needs the Brunnian and L-space flags");
  Verdict v;
  v.hypotheses_used = {"L-space", "Brunnian", "3 components"};
  const long long sum = total_h(m);
  const long long h0 = eval_h(m, LatticePoint(3, 0));
  const auto root = exact_sqrt(sum);
  if (!root) {
    v.conclusion = Conclusion::Infeasible;
    v.criterion = "mu-squared-square";
    v.witness = sum;
    v.detail = "sum of h is not a perfect square";
  } else if (*root == 2) {
    v.conclusion = Conclusion::Infeasible;
    v.criterion = "mu-not-two";
    v.witness = *root;
    v.detail = "mu_123 = +-2 is impossible for Brunnian L-space links";
  } else if ((*root - h0) % 2 != 0) {
    v.conclusion = Conclusion::Infeasible;
    v.criterion = "mu-parity";
    v.witness = *root;
    v.detail = "|mu_123| and h(0) have different parities";
  } else {
    v.criterion = "brunnian-feasible";
    v.witness = *root;
    v.detail = "feasible with |mu_123| = " + std::to_string(*root);
  }
  return v;
}

long long lspace_knot_genus(const HPrimeTable& h, const LinkFlags& flags) {
  if (h.arity != 1) throw Error(Errc::WrongArity, "expected a knot h table");
  if (!flags.lspace)
    throw Error(Errc::HypothesisMissing, "genus formula needs the L-space flag");
  return h.support.empty() ? 0 : h.support_radius() + 1;
}

}  // namespace floerlink
