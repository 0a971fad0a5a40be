#include <doctest.h>

#include <bit>

#include "floerlink/catalog.hpp"
#include "floerlink/render.hpp"
#include "floerlink/serialize.hpp"

using namespace floerlink;

namespace {

const Catalog& bundled() {
  static Catalog cat = load_catalog(FLOER_TEST_CATALOG);
  return cat;
}

}  // namespace

TEST_CASE("bundled catalog loads and validates") {
  const Catalog& cat = bundled();
  CHECK(cat.records.size() == 10);
  for (const auto& [name, m] : cat.models)
    CHECK(validate(m, m.support_radius() + 2).empty());
}

TEST_CASE("bundled catalog passes the full verification sweep") {
  const auto issues = verify_catalog(bundled());
  for (const auto& i : issues)
    MESSAGE(i.record, " [", i.check, "] ", i.detail);
  CHECK(issues.empty());
}

TEST_CASE("whitehead model reproduces the golden H grid") {
  const HModel& m = bundled().model("whitehead");
  const std::string want =
      " s2\\s1  -2  -1   0   1   2\n"
      "     2   2   1   0   0   0\n"
      "     1   2   1   0   0   0\n"
      "     0   2   1   1   0   0\n"
      "    -1   3   2   1   1   1\n"
      "    -2   4   3   2   2   2\n";
  CHECK(render_values(m, true, 2) == want);
}

TEST_CASE("render_poly") {
  const Catalog& cat = bundled();
  CHECK(render_poly(cat.record("trefoil").alexander->poly) == "t - 1 + t^-1");
  CHECK(render_poly(cat.record("whitehead").alexander->poly) ==
        "-t1*t2 + t1 + t2 - 1");
  CHECK(render_poly(LaurentPoly::zero(2)) == "0");
  CHECK(render_poly(LaurentPoly::half_diff(1, 0)) == "t^(1/2) - t^(-1/2)");
}

TEST_CASE("serialization is canonical and round-trips") {
  const Catalog& cat = bundled();
  const LaurentPoly& wh = cat.record("whitehead").alexander->poly;
  const auto j = poly_terms_to_json(wh);
  CHECK(poly_terms_from_json(j, 2) == wh);
  CHECK(j.dump() == poly_terms_to_json(poly_terms_from_json(j, 2)).dump());

  const HModel& m = cat.model("borromean");
  const auto mj = model_to_json(m);
  const HModel back = model_from_json(mj);
  CHECK(back.n == m.n);
  for (const auto& [mask, t] : m.tables)
    CHECK(back.tables.at(mask).support == t.support);
  CHECK(model_to_json(back).dump() == mj.dump());
}

TEST_CASE("sublink references and build_model consistency") {
  const Catalog& cat = bundled();
  const HModel& split = cat.model("trefoil_unknot");
  CHECK(split.table({1u}).support == cat.model("trefoil").table({1u}).support);
  CHECK(split.table({2u}).support.empty());
  CHECK(split.table({3u}).support.empty());
  // rebuildable through the public entry point
  const HModel again = build_model(cat.record("whitehead"), cat);
  CHECK(again.table({3u}).support == cat.model("whitehead").table({3u}).support);
}

TEST_CASE("stored polynomial sign is normalized on load") {
  // Same catalog as the Whitehead record but with the opposite sign; the
  // loader must flip it back because h' = -1 at the origin fails h >= 0.
  const std::string text = R"({"links": [{
    "name": "wh", "components": 2,
    "alexander": [[[0,0],1],[[0,2],-1],[[2,0],-1],[[2,2],1]],
    "flags": {"lspace": true, "brunnian": true}
  }]})";
  const Catalog cat = load_catalog_text(text);
  CHECK(cat.model("wh").table({3u}).support ==
        std::map<LatticePoint, long long>{{{0, 0}, 1}});
  CHECK(cat.record("wh").alexander->poly.terms.at({0, 0}) == -1);
}

TEST_CASE("rejects nonzero linking numbers") {
  const std::string text = R"({"links": [{
    "name": "hopfish", "components": 2,
    "linking": [[0,1],[1,0]],
    "alexander": [],
    "flags": {"lspace": true, "brunnian": true}
  }]})";
  CHECK_THROWS_AS(load_catalog_text(text), Error);
}

TEST_CASE("rejects polynomials that fail Torres divisibility") {
  const std::string text = R"({"links": [{
    "name": "bad", "components": 2,
    "alexander": [[[0,0],1],[[2,2],1]],
    "flags": {"lspace": true, "brunnian": true}
  }]})";
  CHECK_THROWS_AS(load_catalog_text(text), Error);
}

TEST_CASE("rejects missing sublink references") {
  const std::string text = R"({"links": [{
    "name": "lonely", "components": 2,
    "alexander": [],
    "flags": {"lspace": true}
  }]})";
  CHECK_THROWS_AS(load_catalog_text(text), Error);
}

TEST_CASE("feasibility filter rejects a synthetic sum-h = 4 model") {
  // No genuine Brunnian L-space link can have sum h = 4 (it would force
  // mu = +-2); the filter must say so. Note such data also cannot pass the
  // lattice axioms: symmetry forces h(0) even, h(0) = 2 forces six unit
  // neighbors, so sum h >= 8. The filter therefore runs on raw tables.
  HModel four;
  four.n = 3;
  for (unsigned mask = 1; mask < 7; ++mask)
    four.tables[mask].arity = std::popcount(mask);
  four.tables[7].arity = 3;
  four.tables[7].support[{0, 0, 0}] = 2;
  four.tables[7].support[{1, 0, 0}] = 1;
  four.tables[7].support[{-1, 0, 0}] = 1;
  LinkFlags f;
  f.lspace = f.brunnian = true;
  CHECK(feasibility_brunnian(four, f).conclusion == Conclusion::Infeasible);
}

TEST_CASE("unknown link lookups throw") {
  CHECK_THROWS_AS(bundled().record("nonexistent"), Error);
  CHECK_THROWS_AS(bundled().model("nonexistent"), Error);
}
