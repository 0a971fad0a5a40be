#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "floerlink/errors.hpp"

namespace floerlink {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial. Entries are DOUBLED exponents:
// the true exponent s is stored as 2s, so t^{1/2} is representable exactly.
using ExpVec = std::vector<int>;

/// Sparse multivariable Laurent polynomial over the integers with
/// half-integer exponents. Immutable in spirit: all operations below are
/// pure functions returning fresh values.
struct LaurentPoly {
  int n = 1;                      // ambient variable count, >= 1
  std::map<ExpVec, Int> terms;    // lex-ordered, no zero coefficients

  bool is_zero() const { return terms.empty(); }

  static LaurentPoly zero(int n);
  static LaurentPoly constant(int n, Int c);
  // monomial c * t^(e/2) with e a doubled exponent vector
  static LaurentPoly monomial(int n, ExpVec e, Int c);
  // t_i^{1/2} - t_i^{-1/2}  (i is 0-based)
  static LaurentPoly half_diff(int n, int i);
  // t_i - 1  (i is 0-based)
  static LaurentPoly var_minus_one(int n, int i);

  bool operator==(const LaurentPoly& o) const = default;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// Multiply by the monomial t^(e/2) (e doubled).
LaurentPoly shift(const LaurentPoly& p, const ExpVec& e);

// Substitute t_i -> 1/t_i for all i.
LaurentPoly reflect(const LaurentPoly& p);

/// Exact division: returns q with q*d == p. Throws NotDivisible when no
/// such Laurent polynomial exists (nonzero remainder is a data-integrity
/// signal, never silently truncated).
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Substitute t_i := t for all i; exponents add.
LaurentPoly specialize_diagonal(const LaurentPoly& p);

/// Sum of all coefficients (evaluation at t_i = 1).
Int evaluate_at_one(const LaurentPoly& p);

/// Rewrite a one-variable polynomial p(t) with p(1/t) == +-p(t) in the basis
/// z^k, z = t^{1/2} - t^{-1/2}. The result is a one-variable polynomial in z;
/// the returned LaurentPoly stores the z-exponent k as doubled value 2k.
/// Throws NotSymmetric when p is not +-palindromic.
LaurentPoly conway_substitute(const LaurentPoly& p);

/// Back-substitution z := t^{1/2} - t^{-1/2} into a polynomial in z
/// (as produced by conway_substitute).
LaurentPoly expand_conway(const LaurentPoly& zpoly);

}  // namespace floerlink
