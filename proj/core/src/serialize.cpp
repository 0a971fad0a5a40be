#include "floerlink/serialize.hpp"

#include <bit>

namespace floerlink {

using nlohmann::json;

json poly_terms_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms)  // std::map iterates in lex order
    terms.push_back({e, c.convert_to<long long>()});
  return terms;
}

LaurentPoly poly_terms_from_json(const json& j, int n) {
  LaurentPoly p = LaurentPoly::zero(n);
  for (const auto& t : j) {
    ExpVec e = t.at(0).get<ExpVec>();
    if (static_cast<int>(e.size()) != n)
      throw Error(Errc::ParseError, "exponent vector length mismatch");
    const long long c = t.at(1).get<long long>();
    if (c == 0) continue;
    if (!p.terms.emplace(std::move(e), c).second)
      throw Error(Errc::ParseError, "duplicate exponent vector");
  }
  return p;
}

json poly_to_json(const LaurentPoly& p) {
  return {{"n", p.n}, {"terms", poly_terms_to_json(p)}};
}

json table_to_json(const HPrimeTable& t) {
  json entries = json::array();
  for (const auto& [s, v] : t.support) entries.push_back({s, v});
  return entries;
}

HPrimeTable table_from_json(const json& j, int arity) {
  HPrimeTable t;
  t.arity = arity;
  for (const auto& e : j) {
    LatticePoint s = e.at(0).get<LatticePoint>();
    if (static_cast<int>(s.size()) != arity)
      throw Error(Errc::ParseError, "lattice point length mismatch");
    const long long v = e.at(1).get<long long>();
    if (v != 0) t.support[std::move(s)] = v;
  }
  return t;
}

json model_to_json(const HModel& m) {
  json tables = json::object();
  for (const auto& [mask, t] : m.tables)
    tables[std::to_string(mask)] = table_to_json(t);
  return {{"n", m.n}, {"tables", tables}};
}

HModel model_from_json(const json& j) {
  HModel m;
  m.n = j.at("n").get<int>();
  for (const auto& [key, val] : j.at("tables").items()) {
    const unsigned mask = static_cast<unsigned>(std::stoul(key));
    m.tables[mask] = table_from_json(val, std::popcount(mask));
  }
  return m;
}

json verdict_to_json(const Verdict& v) {
  json j = {{"conclusion", conclusion_name(v.conclusion)},
            {"criterion", v.criterion},
            {"hypotheses_used", v.hypotheses_used},
            {"detail", v.detail}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

json rational_to_json(const Rational& r) { return r.str(); }

json dbound_to_json(const DInvariantBound& b) {
  return {{"value", b.value.str()},
          {"kind", b.kind == BoundKind::Exact ? "Exact" : "UpperBound"}};
}

}  // namespace floerlink
