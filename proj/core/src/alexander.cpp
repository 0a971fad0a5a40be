#include "floerlink/alexander.hpp"

#include <algorithm>
#include <set>

namespace floerlink {

namespace {

long long to_ll(const Int& v) {
  return v.convert_to<long long>();
}

}  // namespace

LaurentPoly delta_prime(const NormalizedAlexander& a) {
  if (a.n < 2)
    throw Error(Errc::WrongArity, "delta_prime requires at least two components");
  LaurentPoly q = a.poly;
  for (int i = 0; i < a.n; ++i)
    q = divide_exact(q, LaurentPoly::var_minus_one(a.n, i));
  return q;
}

HPrimeTable hprime_from_alexander(const NormalizedAlexander& a, bool lspace) {
  if (!lspace)
    throw Error(Errc::HypothesisMissing,
                "h' is only determined by the Alexander polynomial for L-space links");
  const LaurentPoly dp = delta_prime(a);
  const long long sign = (a.n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
  HPrimeTable t;
  t.arity = a.n;
  for (const auto& [e, c] : dp.terms) {
    LatticePoint s(a.n);
    for (int i = 0; i < a.n; ++i) {
      if (e[i] % 2 != 0)
        throw Error(Errc::SymmetryViolation,
                    "Delta-tilde' is not supported on the integer lattice");
      s[i] = e[i] / 2;
    }
    t.support[s] = sign * to_ll(c);
  }
  if (!t.is_symmetric())
    throw Error(Errc::SymmetryViolation, "extracted h' breaks h'(-s) = h'(s)");
  return t;
}

HPrimeTable knot_H_from_alexander(const NormalizedAlexander& a) {
  if (a.n != 1) throw Error(Errc::WrongArity, "expected a one-component polynomial");
  if (reflect(a.poly) != a.poly)
    throw Error(Errc::SymmetryViolation, "knot polynomial is not symmetric");
  if (evaluate_at_one(a.poly) != 1)
    throw Error(Errc::NotLSpaceStaircase, "Delta(1) != 1");

  std::map<int, long long> coeff;  // true exponent -> a_k
  int g = 0;
  for (const auto& [e, c] : a.poly.terms) {
    if (e[0] % 2 != 0)
      throw Error(Errc::SymmetryViolation, "knot polynomial has half-integer exponents");
    coeff[e[0] / 2] = to_ll(c);
    g = std::max(g, e[0] / 2);
  }

  auto h = [&](int s) {
    const int as = std::abs(s);
    long long v = 0;
    for (const auto& [k, ak] : coeff)
      if (k > as) v += static_cast<long long>(k - as) * ak;
    return v;
  };

  // The extracted H = h + H_O must look like an L-space knot staircase:
  // nonnegative, unit steps, vanishing for s >= g.
  long long prev = h(g + 2);  // = H(g+2)
  for (int s = g + 1; s >= -g - 2; --s) {
    const long long H = h(s) + unknot_H(s);
    const long long step = H - prev;  // H(s) - H(s+1) = H((s+1)-e) - H(s+1)
    if (H < 0 || h(s) < 0 || (step != 0 && step != 1))
      throw Error(Errc::NotLSpaceStaircase,
                  "torsion coefficients do not form a staircase H-function");
    prev = H;
  }

  HPrimeTable t;
  t.arity = 1;
  for (int s = -g; s <= g; ++s)
    if (long long v = h(s); v != 0) t.support[{s}] = v;
  return t;
}

NormalizedAlexander alexander_from_model(const HModel& m, const ChiPrimeTable* chi) {
  if (m.n < 2)
    throw Error(Errc::WrongArity, "alexander_from_model requires n >= 2");
  if (chi && chi->arity != m.n)
    throw Error(Errc::DimensionMismatch, "chi' arity mismatch");
  const HPrimeTable& hp = m.table(SublinkId::full(m.n));
  std::set<LatticePoint> pts;
  for (const auto& [s, v] : hp.support) pts.insert(s);
  if (chi)
    for (const auto& [s, v] : chi->support) pts.insert(s);

  const long long sign = (m.n % 2 == 0) ? 1 : -1;  // (-1)^n
  LaurentPoly dp = LaurentPoly::zero(m.n);
  for (const auto& s : pts) {
    const long long v = (chi ? chi->at(s) : 0) - hp.at(s);
    if (v == 0) continue;
    ExpVec e(m.n);
    for (int i = 0; i < m.n; ++i) e[i] = 2 * s[i];
    dp.terms[e] = sign * v;
  }
  LaurentPoly out = dp;
  for (int i = 0; i < m.n; ++i)
    out = mul(out, LaurentPoly::var_minus_one(m.n, i));
  return {out, m.n};
}

LaurentPoly hfl_euler(const HModel& m, const ChiPrimeTable* chi,
                      std::optional<int> box) {
  if (chi && chi->arity != m.n)
    throw Error(Errc::DimensionMismatch, "chi' arity mismatch");
  const int n = m.n;
  int r = m.support_radius() + 2;
  if (chi) r = std::max(r, chi->support_radius() + 2);
  if (box) r = *box;

  // chi_tor of the full link; proper sublinks are assumed torsion-free,
  // which is exactly the L-space condition on them.
  auto chi_tor = [&](const LatticePoint& s) -> long long {
    return chi ? chi->at(s) : 0;
  };

  LaurentPoly out = LaurentPoly::zero(1);
  out.n = n;
  LatticePoint s(n, -r);
  auto advance = [&]() {
    for (int i = 0; i < n; ++i) {
      if (++s[i] <= r) return true;
      s[i] = -r;
    }
    return false;
  };
  LatticePoint t(n);
  do {
    long long acc = 0;
    for (unsigned B = 0; B < (1u << n); ++B) {
      for (int i = 0; i < n; ++i) t[i] = s[i] - ((B >> i) & 1u);
      const long long term = chi_tor(t) - eval_H(m, t);
      acc += (std::popcount(B) % 2 == 0) ? term : -term;
    }
    if (acc != 0) {
      ExpVec e(n);
      for (int i = 0; i < n; ++i) e[i] = 2 * s[i];
      out.terms[e] = acc;
    }
  } while (advance());
  return out;
}

}  // namespace floerlink
