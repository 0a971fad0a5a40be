#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floerlink/alexander.hpp"
#include "floerlink/lattice.hpp"

namespace floerlink {

/// Exact rational, always reduced, positive denominator. The d-invariants
/// produced here all lie in (1/4)Z but printing stays in lowest terms.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);

  std::string str() const;  // "p/q", or "p" when q == 1
  bool operator==(const Rational&) const = default;
};

/// Surgery description: one framing per component. Integral framings carry
/// denominator 1; the Casson state sum uses 1/q framings via the q vector.
struct SurgerySpec {
  std::vector<Rational> framings;
  std::optional<std::vector<long long>> spinc_index;
};

enum class BoundKind { Exact, UpperBound };

struct DInvariantBound {
  Rational value;
  BoundKind kind = BoundKind::UpperBound;
};

/// |sum_s (chi'(s) - h'(s))| over the full-sublink table. For knots this is
/// the sum of the h table, the Casson knot invariant normalization. The
/// overall sign of a2 for links is conventional; the nonnegative
/// representative is returned.
long long a2(const HModel& m, const ChiPrimeTable* chi = nullptr);

/// Sato-Levine invariant of a two-component algebraically split link
/// (= a2 up to the fixed sign convention). Throws WrongArity unless n = 2.
long long sato_levine(const HModel& m, const ChiPrimeTable* chi = nullptr);

struct TripleLinking {
  long long mu_squared = 0;
  std::optional<long long> abs_mu;  // set when mu_squared is a perfect square
};

/// mu_123^2 = |sum_s (chi' - h')| for a three-component algebraically split
/// link. When the Brunnian and L-space flags are both asserted the value must
/// be a perfect square; NotPerfectSquare flags inconsistent input in that case.
TripleLinking mu123_squared(const HModel& m, const ChiPrimeTable* chi = nullptr,
                            bool brunnian_lspace = false);

/// Casson invariant of (1/q_1, ..., 1/q_n)-surgery on an algebraically split
/// link in S^3: sum over nonempty sublinks L' of (prod_{i in L'} q_i) a2(L').
/// Each sublink's a2 is read off its h' table in the model (plus chi' for the
/// full link). Throws MissingSublinkData when a table is absent.
long long casson_surgery(const HModel& m, const std::vector<long long>& q,
                         const ChiPrimeTable* chi = nullptr);

/// d-invariant of the lens space L(m,1) in Spin^c structure i:
/// ((2i - m)^2 - m) / (4m). Requires m >= 1 and 0 <= i < m.
Rational d_lens(long long m, long long i);

/// d-invariant of large integral surgery on an L-space knot:
/// d(S^3_m(K), i) = d(L(m,1), i) - 2 H(i), with i taken mod m and folded by
/// Spin^c conjugation. Requires m >= max(1, 2g - 1) (largeness); throws
/// NotLarge otherwise.
DInvariantBound d_large_surgery_knot(const HPrimeTable& h, long long m,
                                     long long i);

/// Upper bound d(S^3_{1,...,1}(L)) <= -2 h(0). Exact when the model carries
/// the L-space flag and h is supported only at the origin (in particular for
/// unlinks, the Whitehead link and the Borromean rings).
DInvariantBound d_one_surgery_bound(const HModel& m, bool lspace);

/// Certified d-invariant bound from nonvanishing triple linking: for a
/// three-component algebraically split link whose two-component sublinks are
/// L-space links and whose mu_123 is nonzero, d(S^3_{1,1,1}(L)) <= -2.
/// The bound holds with rational coefficients always and with F_2
/// coefficients when mu is odd.
struct TripleLinkingDVerdict {
  bool applicable = false;
  std::optional<Rational> bound;           // d <= bound when applicable
  std::vector<std::string> coefficients;   // "Q", "F2"
  std::vector<std::string> hypotheses;
  std::string reason;                      // why not applicable
};
TripleLinkingDVerdict triple_linking_d_verdict(const HModel& m, long long mu,
                                               bool sublinks_lspace);

/// Total rank of HF^inf of 0-surgery on a three-component algebraically
/// split link: 6 when mu_123 is odd, 8 when even.
long long hf_inf_rank_zero_surgery(long long mu123);

}  // namespace floerlink
