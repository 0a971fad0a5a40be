// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses the bundled catalog.

#include <bit>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "floerlink/catalog.hpp"
#include "floerlink/render.hpp"
#include "oracles.hpp"

using namespace floerlink;

namespace {

struct Criterion {
  std::string title;
  std::function<void()> run;  // throws on failure
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

const Catalog& cat() {
  static Catalog c = load_catalog(FLOER_TEST_CATALOG);
  return c;
}

std::map<int, int> coeff_map(const NormalizedAlexander& a) {
  std::map<int, int> out;
  for (const auto& [e, c] : a.poly.terms)
    out[e[0] / 2] = static_cast<int>(c.convert_to<long long>());
  return out;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"Whitehead golden grid: all 25 H values on [-2,2]^2", [] {
    const HModel m = build_model(cat().record("whitehead"), cat());
    const long long want[5][5] = {{2, 1, 0, 0, 0},
                                  {2, 1, 0, 0, 0},
                                  {2, 1, 1, 0, 0},
                                  {3, 2, 1, 1, 1},
                                  {4, 3, 2, 2, 2}};
    for (int s2 = 2; s2 >= -2; --s2)
      for (int s1 = -2; s1 <= 2; ++s1) {
        std::ostringstream os;
        os << "H(" << s1 << "," << s2 << ")";
        require(eval_H(m, {s1, s2}) == want[2 - s2][s1 + 2], os.str() + " mismatch");
      }
  }});

  criteria.push_back({"Alexander -> h' -> Alexander round trip on every L-space record", [] {
    for (const auto& [name, r] : cat().records) {
      if (r.n < 2 || !r.flags.lspace || !r.alexander) continue;
      const NormalizedAlexander back = alexander_from_model(cat().model(name));
      require(back.poly == r.alexander->poly, name + ": round trip not the identity");
    }
  }});

  criteria.push_back({"Borromean chain: sum h, mu, casson, d-bound, HF^inf rank", [] {
    const HModel& m = cat().model("borromean");
    require(total_h(m) == 1, "sum h != 1");
    const auto t = mu123_squared(m, nullptr, true);
    require(t.mu_squared == 1 && t.abs_mu == 1, "mu^2 != 1");
    require(casson_surgery(m, {1, 1, 1}) == 1, "casson != 1");
    const auto b = d_one_surgery_bound(m, true);
    require(b.kind == BoundKind::Exact && b.value == Rational(-2),
            "d bound not Exact -2");
    require(hf_inf_rank_zero_surgery(*t.abs_mu) == 6, "rank != 6");
  }});

  criteria.push_back({"Whitehead invariants and split-trefoil rejection", [] {
    const LinkRecord& wh = cat().record("whitehead");
    const HModel& m = cat().model("whitehead");
    require(sato_levine(m) == 1, "beta != 1");
    const auto b = d_one_surgery_bound(m, wh.flags.lspace);
    require(b.kind == BoundKind::Exact && b.value == Rational(-2),
            "d bound not Exact -2");
    require(detect_whitehead(m, wh.flags).conclusion == Conclusion::Whitehead,
            "Whitehead not detected");
    const LinkRecord& sp = cat().record("trefoil_unknot");
    const HModel& sm = cat().model("trefoil_unknot");
    require(sato_levine(sm) == 0, "split beta != 0");
    require(detect_whitehead(sm, sp.flags).conclusion != Conclusion::Whitehead,
            "split link misdetected as Whitehead");
  }});

  criteria.push_back({"Lens-space d: closed form, conjugation, recursive oracle", [] {
    for (long long n = 1; n <= 12; ++n)
      require(d_lens(n, 0) == Rational(n - 1, 4), "d(L(n,1),0) != (n-1)/4");
    for (long long m = 1; m <= 12; ++m)
      for (long long i = 0; i < m; ++i) {
        require(d_lens(m, i) == d_lens(m, (m - i) % m), "conjugation symmetry");
        require(d_lens(m, i) == oracles::d_lens_recursive(m, 1, i),
                "recursive oracle disagrees");
      }
  }});

  criteria.push_back({"Axiom suite: no violations for any bundled model", [] {
    for (const auto& [name, m] : cat().models) {
      const auto bad = validate(m, m.support_radius() + 2);
      require(bad.empty(), name + ": " + (bad.empty() ? "" : bad.front().axiom));
    }
  }});

  criteria.push_back({"Knot pipeline: T(2,3), T(2,5), T(3,4) vs series oracle + genus", [] {
    const std::vector<std::pair<std::string, long long>> knots = {
        {"trefoil", 1}, {"t25", 2}, {"t34", 3}};
    for (const auto& [name, genus] : knots) {
      const LinkRecord& r = cat().record(name);
      const HPrimeTable h = knot_H_from_alexander(*r.alexander);
      const oracles::KnotSeriesOracle oracle(coeff_map(*r.alexander));
      for (int s = -8; s <= 8; ++s)
        require(h.at({s}) == oracle.h(s), name + ": h oracle mismatch");
      require(lspace_knot_genus(h, r.flags) == genus, name + ": wrong genus");
    }
  }});

  criteria.push_back({"Degenerate cases: 4-component a2, sum-h = 4 infeasible, unlink detection", [] {
    require(a2(cat().model("unlink4")) == 0, "4-component a2 != 0");
    HModel four;
    four.n = 3;
    for (unsigned mask = 1; mask < 7; ++mask)
      four.tables[mask].arity = std::popcount(mask);
    four.tables[7].arity = 3;
    four.tables[7].support[{0, 0, 0}] = 2;
    four.tables[7].support[{1, 0, 0}] = 1;
    four.tables[7].support[{-1, 0, 0}] = 1;
    LinkFlags bf;
    bf.lspace = bf.brunnian = true;
    require(feasibility_brunnian(four, bf).conclusion == Conclusion::Infeasible,
            "sum h = 4 not flagged infeasible");
    for (const auto& [name, r] : cat().records) {
      if (!r.flags.lspace) continue;
      const HModel& m = cat().model(name);
      const bool origin_zero = eval_h(m, LatticePoint(m.n, 0)) == 0;
      const bool says_unlink =
          detect_unlink(m, r.flags).conclusion == Conclusion::Unlink;
      require(origin_zero == says_unlink, name + ": unlink detection mismatch");
    }
  }});

  criteria.push_back({"Casson multilinearity on the Borromean record", [] {
    const HModel& m = cat().model("borromean");
    for (unsigned mask = 1; mask < 8; ++mask) {
      long long acc = 0;
      for (unsigned sub = 0;; sub = (sub - mask) & mask) {
        std::vector<long long> q(3, 0);
        for (int i = 0; i < 3; ++i) q[i] = (sub >> i) & 1u;
        const int sign =
            ((std::popcount(mask) - std::popcount(sub)) % 2 == 0) ? 1 : -1;
        acc += sign * casson_surgery(m, q);
        if (sub == mask) break;
      }
      const long long want = mask == 7 ? 1 : 0;  // a2 of each sublink
      require(acc == want, "finite difference != a2 for mask " + std::to_string(mask));
    }
  }});

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string error;
    try {
      criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::cout << (error.empty() ? "PASS" : "FAIL") << " criterion " << (i + 1)
              << ": " << criteria[i].title;
    if (!error.empty()) {
      std::cout << " [" << error << "]";
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
