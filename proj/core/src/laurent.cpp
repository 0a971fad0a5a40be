#include "floerlink/laurent.hpp"

#include <algorithm>
#include <limits>

namespace floerlink {

namespace {

void check_dims(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.n != q.n)
    throw Error(Errc::DimensionMismatch, "variable counts differ");
}

void insert_term(std::map<ExpVec, Int>& terms, const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPoly LaurentPoly::zero(int n) { return LaurentPoly{n, {}}; }

LaurentPoly LaurentPoly::constant(int n, Int c) {
  LaurentPoly p{n, {}};
  if (c != 0) p.terms[ExpVec(n, 0)] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int n, ExpVec e, Int c) {
  if (static_cast<int>(e.size()) != n)
    throw Error(Errc::DimensionMismatch, "exponent vector length");
  LaurentPoly p{n, {}};
  if (c != 0) p.terms[std::move(e)] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::half_diff(int n, int i) {
  LaurentPoly p{n, {}};
  ExpVec e(n, 0);
  e[i] = 1;
  p.terms[e] = 1;
  e[i] = -1;
  p.terms[e] = -1;
  return p;
}

LaurentPoly LaurentPoly::var_minus_one(int n, int i) {
  LaurentPoly p{n, {}};
  ExpVec e(n, 0);
  e[i] = 2;
  p.terms[e] = 1;
  e[i] = 0;
  p.terms[e] = -1;
  return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  check_dims(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms) insert_term(r.terms, e, c);
  return r;
}

LaurentPoly neg(const LaurentPoly& p) {
  LaurentPoly r{p.n, {}};
  for (const auto& [e, c] : p.terms) r.terms[e] = -c;
  return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, neg(q));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  check_dims(p, q);
  LaurentPoly r{p.n, {}};
  ExpVec e(p.n);
  for (const auto& [ep, cp] : p.terms)
    for (const auto& [eq, cq] : q.terms) {
      for (int i = 0; i < p.n; ++i) e[i] = ep[i] + eq[i];
      insert_term(r.terms, e, cp * cq);
    }
  return r;
}

LaurentPoly shift(const LaurentPoly& p, const ExpVec& e) {
  if (static_cast<int>(e.size()) != p.n)
    throw Error(Errc::DimensionMismatch, "shift vector length");
  LaurentPoly r{p.n, {}};
  ExpVec f(p.n);
  for (const auto& [ep, c] : p.terms) {
    for (int i = 0; i < p.n; ++i) f[i] = ep[i] + e[i];
    r.terms[f] = c;
  }
  return r;
}

LaurentPoly reflect(const LaurentPoly& p) {
  LaurentPoly r{p.n, {}};
  ExpVec f(p.n);
  for (const auto& [e, c] : p.terms) {
    for (int i = 0; i < p.n; ++i) f[i] = -e[i];
    r.terms[f] = c;
  }
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  check_dims(p, d);
  if (d.is_zero()) throw Error(Errc::NotDivisible, "division by zero");
  if (p.is_zero()) return LaurentPoly::zero(p.n);

  const int n = p.n;
  // Shift both operands so that every variable has minimum exponent 0;
  // then exact Laurent division reduces to exact polynomial division,
  // which terminates under the lex order.
  ExpVec pmin(n, std::numeric_limits<int>::max());
  ExpVec dmin(n, std::numeric_limits<int>::max());
  for (const auto& [e, c] : p.terms)
    for (int i = 0; i < n; ++i) pmin[i] = std::min(pmin[i], e[i]);
  for (const auto& [e, c] : d.terms)
    for (int i = 0; i < n; ++i) dmin[i] = std::min(dmin[i], e[i]);
  ExpVec pshift(n), dshift(n), qshift(n);
  for (int i = 0; i < n; ++i) {
    pshift[i] = -pmin[i];
    dshift[i] = -dmin[i];
    qshift[i] = pmin[i] - dmin[i];
  }

  LaurentPoly rem = shift(p, pshift);
  const LaurentPoly dd = shift(d, dshift);
  const auto& [lde, ldc] = *dd.terms.rbegin();  // lex-leading term of divisor

  LaurentPoly q{n, {}};
  ExpVec e(n);
  while (!rem.is_zero()) {
    const auto& [lpe, lpc] = *rem.terms.rbegin();
    for (int i = 0; i < n; ++i) {
      e[i] = lpe[i] - lde[i];
      if (e[i] < 0) throw Error(Errc::NotDivisible, "nonzero remainder");
    }
    if (lpc % ldc != 0)
      throw Error(Errc::NotDivisible, "coefficient not divisible");
    Int c = lpc / ldc;
    insert_term(q.terms, e, c);
    rem = sub(rem, mul(LaurentPoly::monomial(n, e, c), dd));
  }
  return shift(q, qshift);
}

LaurentPoly specialize_diagonal(const LaurentPoly& p) {
  LaurentPoly r{1, {}};
  ExpVec e(1);
  for (const auto& [ep, c] : p.terms) {
    int s = 0;
    for (int i = 0; i < p.n; ++i) s += ep[i];
    e[0] = s;
    insert_term(r.terms, e, c);
  }
  return r;
}

Int evaluate_at_one(const LaurentPoly& p) {
  Int s = 0;
  for (const auto& [e, c] : p.terms) s += c;
  return s;
}

LaurentPoly conway_substitute(const LaurentPoly& p) {
  if (p.n != 1) throw Error(Errc::DimensionMismatch, "expected one variable");
  {
    LaurentPoly r = reflect(p);
    if (r != p && r != neg(p))
      throw Error(Errc::NotSymmetric, "input is not +-palindromic");
  }
  // Peel from the top degree down: z^k has lex-leading term t^{k/2} with
  // coefficient 1, so the leading coefficient of the residue is c_k.
  const LaurentPoly z = LaurentPoly::half_diff(1, 0);
  LaurentPoly res = p;
  LaurentPoly out{1, {}};
  while (!res.is_zero()) {
    const auto& [e, c] = *res.terms.rbegin();
    const int k = e[0];
    if (k < 0) throw Error(Errc::NotSymmetric, "no expansion in z exists");
    LaurentPoly zk = LaurentPoly::constant(1, 1);
    for (int j = 0; j < k; ++j) zk = mul(zk, z);
    res = sub(res, mul(LaurentPoly::constant(1, c), zk));
    out.terms[ExpVec{2 * k}] = c;
  }
  return out;
}

LaurentPoly expand_conway(const LaurentPoly& zpoly) {
  if (zpoly.n != 1) throw Error(Errc::DimensionMismatch, "expected one variable");
  const LaurentPoly z = LaurentPoly::half_diff(1, 0);
  LaurentPoly out = LaurentPoly::zero(1);
  for (const auto& [e, c] : zpoly.terms) {
    if (e[0] < 0 || e[0] % 2 != 0)
      throw Error(Errc::NotSymmetric, "not a polynomial in z");
    const int k = e[0] / 2;
    LaurentPoly zk = LaurentPoly::constant(1, c);
    for (int j = 0; j < k; ++j) zk = mul(zk, z);
    out = add(out, zk);
  }
  return out;
}

}  // namespace floerlink
