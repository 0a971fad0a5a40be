#include <doctest.h>

#include <bit>

#include "floerlink/invariants.hpp"
#include "oracles.hpp"

using namespace floerlink;

namespace {

HModel delta_model(int n) {  // h' = 1 at the origin of the full sublink
  HModel m;
  m.n = n;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask)
    m.tables[mask].arity = std::popcount(mask);
  m.tables[(1u << n) - 1].arity = n;
  m.tables[(1u << n) - 1].support[LatticePoint(n, 0)] = 1;
  return m;
}

HModel empty_model(int n) {
  HModel m;
  m.n = n;
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    m.tables[mask].arity = std::popcount(mask);
  return m;
}

}  // namespace

TEST_CASE("Rational printing and reduction") {
  CHECK(Rational(1, 1).str() == "1");
  CHECK(Rational(-8, 4).str() == "-2");
  CHECK(Rational(3, -12).str() == "-1/4");
  CHECK(Rational(0, 5) == Rational(0));
}

TEST_CASE("a2 and sato_levine") {
  CHECK(a2(delta_model(2)) == 1);   // Whitehead
  CHECK(a2(delta_model(3)) == 1);   // Borromean
  CHECK(a2(empty_model(4)) == 0);   // 4-component algebraically split
  CHECK(sato_levine(delta_model(2)) == 1);
  CHECK(sato_levine(empty_model(2)) == 0);
  CHECK_THROWS_AS(sato_levine(delta_model(3)), Error);
}

TEST_CASE("mu123_squared") {
  const auto b = mu123_squared(delta_model(3), nullptr, true);
  CHECK(b.mu_squared == 1);
  CHECK(b.abs_mu == 1);
  const auto u = mu123_squared(empty_model(3), nullptr, true);
  CHECK(u.mu_squared == 0);
  CHECK(u.abs_mu == 0);
  HModel m = empty_model(3);
  m.tables[7].support[{0, 0, 0}] = 3;  // mu^2 = 3: not a square
  CHECK_THROWS_AS(mu123_squared(m, nullptr, true), Error);
  CHECK(mu123_squared(m, nullptr, false).mu_squared == 3);
  CHECK_THROWS_AS(mu123_squared(delta_model(2)), Error);
}

TEST_CASE("casson_surgery state sum") {
  CHECK(casson_surgery(delta_model(3), {1, 1, 1}) == 1);   // Borromean
  CHECK(casson_surgery(delta_model(3), {0, 0, 0}) == 0);
  CHECK(casson_surgery(delta_model(2), {1, 1}) == 1);      // Whitehead
  CHECK(casson_surgery(delta_model(3), {2, 3, 5}) == 30);  // only the full term
  HModel missing = delta_model(3);
  missing.tables.erase(3);
  CHECK_THROWS_AS(casson_surgery(missing, {1, 1, 1}), Error);
}

TEST_CASE("casson multilinearity: finite differences recover a2 per sublink") {
  HModel m = delta_model(3);
  m.tables[3].support[{0, 0}] = 2;  // give one proper sublink a nonzero a2
  for (unsigned mask = 1; mask < 8; ++mask) {
    // alternating sum of casson over q in {0,1}^3 restricted to mask
    long long acc = 0;
    for (unsigned sub = 0;; sub = (sub - mask) & mask) {
      std::vector<long long> q(3, 0);
      for (int i = 0; i < 3; ++i) q[i] = (sub >> i) & 1u;
      const int sign =
          ((std::popcount(mask) - std::popcount(sub)) % 2 == 0) ? 1 : -1;
      acc += sign * casson_surgery(m, q);
      if (sub == mask) break;
    }
    CHECK(acc == std::llabs(m.tables.at(mask).sum()));
  }
}

TEST_CASE("d_lens closed form") {
  CHECK(d_lens(5, 0) == Rational(1));
  CHECK(d_lens(1, 0) == Rational(0));
  CHECK(d_lens(2, 1) == Rational(-1, 4));
  for (long long n = 1; n <= 12; ++n) CHECK(d_lens(n, 0) == Rational(n - 1, 4));
  CHECK_THROWS_AS(d_lens(5, 5), Error);
  CHECK_THROWS_AS(d_lens(0, 0), Error);
}

TEST_CASE("d_lens conjugation symmetry and recursive oracle") {
  for (long long m = 1; m <= 12; ++m)
    for (long long i = 0; i < m; ++i) {
      CHECK(d_lens(m, i) == d_lens(m, (m - i) % m));
      CHECK(d_lens(m, i) == oracles::d_lens_recursive(m, 1, i));
    }
}

TEST_CASE("d_large_surgery_knot") {
  HPrimeTable trefoil;
  trefoil.arity = 1;
  trefoil.support[{0}] = 1;
  const auto b = d_large_surgery_knot(trefoil, 5, 0);
  CHECK(b.kind == BoundKind::Exact);
  CHECK(b.value == Rational(-1));  // d(L(5,1),0) - 2 = 1 - 2
  CHECK(d_large_surgery_knot(trefoil, 5, 5).value == Rational(-1));  // conjugate

  HPrimeTable unknot;
  unknot.arity = 1;
  CHECK(d_large_surgery_knot(unknot, 3, 1).value == Rational(-1, 6));

  HPrimeTable t34;  // genus 3: m = 4 is not large
  t34.arity = 1;
  for (int s = -2; s <= 2; ++s) t34.support[{s}] = 1;
  CHECK_THROWS_AS(d_large_surgery_knot(t34, 4, 0), Error);
  CHECK(d_large_surgery_knot(t34, 5, 0).kind == BoundKind::Exact);
}

TEST_CASE("d_one_surgery_bound") {
  const auto wh = d_one_surgery_bound(delta_model(2), true);
  CHECK(wh.value == Rational(-2));
  CHECK(wh.kind == BoundKind::Exact);
  const auto un = d_one_surgery_bound(empty_model(3), true);
  CHECK(un.value == Rational(0));
  CHECK(un.kind == BoundKind::Exact);
  // split trefoil + unknot: h is supported on a line, bound only
  HModel split = empty_model(2);
  split.tables[1].support[{0}] = 1;
  const auto sp = d_one_surgery_bound(split, true);
  CHECK(sp.value == Rational(-2));
  CHECK(sp.kind == BoundKind::UpperBound);
  // no L-space certificate: never exact
  CHECK(d_one_surgery_bound(delta_model(2), false).kind == BoundKind::UpperBound);
}

TEST_CASE("triple_linking_d_verdict") {
  const auto b = triple_linking_d_verdict(delta_model(3), 1, true);
  CHECK(b.applicable);
  CHECK(b.bound == Rational(-2));
  CHECK(b.coefficients == std::vector<std::string>{"Q", "F2"});
  const auto even = triple_linking_d_verdict(delta_model(3), 2, true);
  CHECK(even.applicable);
  CHECK(even.coefficients == std::vector<std::string>{"Q"});
  CHECK_FALSE(triple_linking_d_verdict(delta_model(3), 0, true).applicable);
  CHECK_FALSE(triple_linking_d_verdict(delta_model(3), 1, false).applicable);
  CHECK_FALSE(triple_linking_d_verdict(delta_model(2), 1, true).applicable);
}

TEST_CASE("hf_inf_rank_zero_surgery parity") {
  CHECK(hf_inf_rank_zero_surgery(1) == 6);
  CHECK(hf_inf_rank_zero_surgery(0) == 8);
  CHECK(hf_inf_rank_zero_surgery(-3) == 6);
  CHECK(hf_inf_rank_zero_surgery(2) == 8);
}

TEST_CASE("parity link between mu and h at the origin") {
  // Brunnian L-space models: |mu| and h(0) have the same parity.
  for (long long v : {1, 4, 9}) {
    HModel m = empty_model(3);
    m.tables[7].support[{0, 0, 0}] = v;
    // not all of these validate as genuine links; the parity identity is
    // about the arithmetic relation the feasibility filter enforces
    const auto t = mu123_squared(m, nullptr, false);
    if (t.abs_mu) CHECK((*t.abs_mu - v) % 2 == 0);
  }
}
