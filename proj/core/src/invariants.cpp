#include "floerlink/invariants.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace floerlink {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(Errc::ValidationFailed, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(std::abs(n), d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// a2 of the sublink given by `mask`, read from its h' table (chi' contributes
// only for the full link; proper sublink torsion data is not modeled).
long long a2_of_mask(const HModel& m, unsigned mask, const ChiPrimeTable* chi) {
  auto it = m.tables.find(mask);
  if (it == m.tables.end())
    throw Error(Errc::MissingSublinkData,
                "no h' table for sublink mask " + std::to_string(mask));
  const bool full = mask == SublinkId::full(m.n).mask;
  const long long chi_sum = (full && chi) ? chi->sum() : 0;
  return std::llabs(chi_sum - it->second.sum());
}

std::optional<long long> exact_sqrt(long long v) {
  if (v < 0) return std::nullopt;
  long long r = std::llround(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

long long a2(const HModel& m, const ChiPrimeTable* chi) {
  return a2_of_mask(m, SublinkId::full(m.n).mask, chi);
}

long long sato_levine(const HModel& m, const ChiPrimeTable* chi) {
  if (m.n != 2)
    throw Error(Errc::WrongArity, "Sato-Levine is defined for two components");
  return a2(m, chi);
}

TripleLinking mu123_squared(const HModel& m, const ChiPrimeTable* chi,
                            bool brunnian_lspace) {
  if (m.n != 3)
    throw Error(Errc::WrongArity, "mu_123 is defined for three components");
  TripleLinking r;
  r.mu_squared = a2(m, chi);
  r.abs_mu = exact_sqrt(r.mu_squared);
  if (brunnian_lspace && !r.abs_mu)
    throw Error(Errc::NotPerfectSquare,
                "Brunnian L-space data forces mu^2 to be a perfect square");
  return r;
}

long long casson_surgery(const HModel& m, const std::vector<long long>& q,
                         const ChiPrimeTable* chi) {
  if (static_cast<int>(q.size()) != m.n)
    throw Error(Errc::DimensionMismatch, "framing vector length");
  long long total = 0;
  const unsigned full = SublinkId::full(m.n).mask;
  for (unsigned mask = 1; mask <= full; ++mask) {
    long long coeff = 1;
    for (int i = 0; i < m.n; ++i)
      if ((mask >> i) & 1u) coeff *= q[i];
    if (coeff == 0) continue;
    total += coeff * a2_of_mask(m, mask, chi);
  }
  return total;
}

Rational d_lens(long long m, long long i) {
  if (m < 1) throw Error(Errc::IndexOutOfRange, "lens space order must be >= 1");
  if (i < 0 || i >= m)
    throw Error(Errc::IndexOutOfRange, "Spin^c index must satisfy 0 <= i < m");
  return Rational((2 * i - m) * (2 * i - m) - m, 4 * m);
}

DInvariantBound d_large_surgery_knot(const HPrimeTable& h, long long m,
                                     long long i) {
  if (h.arity != 1) throw Error(Errc::WrongArity, "expected a knot h table");
  const long long g = h.support.empty() ? 0 : h.support_radius() + 1;
  if (m < 1 || m < 2 * g - 1)
    throw Error(Errc::NotLarge, "surgery coefficient below 2g - 1");
  long long im = ((i % m) + m) % m;
  const long long j = std::min(im, m - im);  // Spin^c conjugation fold
  const Rational lens = d_lens(m, im);
  // H(j) = h(j) for j >= 0, so the correction is -2 h(j).
  const long long hj = h.at({static_cast<int>(j)});
  return {Rational(lens.num - 2 * hj * lens.den, lens.den), BoundKind::Exact};
}

DInvariantBound d_one_surgery_bound(const HModel& m, bool lspace) {
  const LatticePoint origin(m.n, 0);
  const long long h0 = eval_h(m, origin);
  // h is supported only at the origin iff every proper-sublink table is
  // empty and the full table lives at the origin.
  bool origin_only = true;
  const unsigned full = SublinkId::full(m.n).mask;
  for (const auto& [mask, t] : m.tables) {
    if (mask != full && !t.support.empty()) origin_only = false;
    for (const auto& [s, v] : t.support)
      for (int c : s)
        if (c != 0) origin_only = false;
  }
  return {Rational(-2 * h0),
          (lspace && origin_only) ? BoundKind::Exact : BoundKind::UpperBound};
}

TripleLinkingDVerdict triple_linking_d_verdict(const HModel& m, long long mu,
                                               bool sublinks_lspace) {
  TripleLinkingDVerdict v;
  if (m.n != 3) {
    v.reason = "needs three components";
    return v;
  }
  if (!sublinks_lspace) {
    v.reason = "two-component sublinks are not certified L-space links";
    return v;
  }
  if (mu == 0) {
    v.reason = "mu_123 vanishes";
    return v;
  }
  v.applicable = true;
  v.bound = Rational(-2);
  v.hypotheses = {"three components", "algebraically split",
                  "two-component sublinks are L-space links",
                  "mu_123 != 0"};
  v.coefficients.push_back("Q");
  if (mu % 2 != 0) v.coefficients.push_back("F2");
  return v;
}

long long hf_inf_rank_zero_surgery(long long mu123) {
  return (mu123 % 2 != 0) ? 6 : 8;
}

}  // namespace floerlink
