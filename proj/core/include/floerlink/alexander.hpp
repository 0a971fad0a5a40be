#pragma once

#include <optional>

#include "floerlink/lattice.hpp"
#include "floerlink/laurent.hpp"

namespace floerlink {

/// Finitely supported symmetric table of chi' values (torsion Euler
/// characteristics, Moebius-transformed over sublinks). Identically zero for
/// L-space links; only ever supplied as explicit input data.
struct ChiPrimeTable {
  int arity = 1;
  std::map<LatticePoint, long long> support;

  long long at(const LatticePoint& s) const {
    auto it = support.find(s);
    return it == support.end() ? 0 : it->second;
  }
  long long sum() const {
    long long t = 0;
    for (const auto& [s, v] : support) t += v;
    return t;
  }
  int support_radius() const {
    int r = 0;
    for (const auto& [s, v] : support)
      for (int c : s) r = std::max(r, std::abs(c));
    return r;
  }
};

/// Alexander polynomial in the symmetric normalization: for n > 1 this is
/// Delta-tilde = (t_1...t_n)^{1/2} * Delta (integer exponent lattice, even
/// doubled exponents); for n = 1 it is the symmetric Delta itself with
/// Delta(1) = 1.
struct NormalizedAlexander {
  LaurentPoly poly;
  int n = 1;
};

/// Quotient Delta-tilde' with Delta-tilde = prod_i (t_i - 1) * Delta-tilde'.
/// Requires n >= 2 and divisibility by every factor (the Torres condition
/// for algebraically split links); throws NotDivisible otherwise.
LaurentPoly delta_prime(const NormalizedAlexander& a);

/// Extract the full-sublink h' table of an L-space link:
/// h'(s) = (-1)^{n+1} * [t^s] Delta-tilde'. Requires n >= 2 and the L-space
/// flag (chi' vanishes). Throws SymmetryViolation when the extracted table
/// breaks h'(-s) = h'(s) or lands off the integer lattice.
HPrimeTable hprime_from_alexander(const NormalizedAlexander& a, bool lspace);

/// Knot case: h(s) = sum_{k>s} (k-s) a_k for s >= 0 (torsion coefficients of
/// the symmetric Alexander polynomial), extended by h(-s) = h(s). The
/// resulting H = h + H_O must be a valid L-space knot staircase shadow;
/// throws NotLSpaceStaircase otherwise.
HPrimeTable knot_H_from_alexander(const NormalizedAlexander& a);

/// Theorem-direction reconstruction:
/// Delta-tilde' = (-1)^n sum_s (chi'(s) - h'(s)) t^s, then multiply by
/// prod_i (t_i - 1). Inverse of hprime_from_alexander when chi == nullptr.
NormalizedAlexander alexander_from_model(const HModel& m,
                                         const ChiPrimeTable* chi = nullptr);

/// Generating function sum_s chi(HFL^-)(s) t^s computed by the alternating
/// corner sum over e_B shifts of chi_tor - H on a sufficient box. For n >= 2
/// the result is exact and equals Delta-tilde; for n = 1 it is the truncation
/// of the series Delta/(1 - t^{-1}) to exponents >= -box.
LaurentPoly hfl_euler(const HModel& m, const ChiPrimeTable* chi = nullptr,
                      std::optional<int> box = std::nullopt);

}  // namespace floerlink
