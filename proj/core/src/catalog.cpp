#include "floerlink/catalog.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "floerlink/serialize.hpp"

namespace floerlink {

const LinkRecord& Catalog::record(const std::string& name) const {
  auto it = records.find(name);
  if (it == records.end()) throw Error(Errc::UnknownLink, "no record named " + name);
  return it->second;
}

const HModel& Catalog::model(const std::string& name) const {
  auto it = models.find(name);
  if (it == models.end()) throw Error(Errc::UnknownLink, "no model named " + name);
  return it->second;
}

namespace {

HPrimeTable full_table_from_alexander(const LinkRecord& r, bool negate) {
  if (!r.alexander)
    throw Error(Errc::ValidationFailed, r.name + ": record has no Alexander polynomial");
  NormalizedAlexander a = *r.alexander;
  if (negate) a.poly = neg(a.poly);
  if (r.n == 1) {
    HPrimeTable t = knot_H_from_alexander(a);
    return t;
  }
  return hprime_from_alexander(a, r.flags.lspace);
}

HModel assemble(const LinkRecord& r, const Catalog& catalog, bool negate) {
  HModel m;
  m.n = r.n;
  m.provenance = HModel::Provenance::FromAlexander;
  const unsigned full = SublinkId::full(r.n).mask;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (r.flags.brunnian) {
      HPrimeTable t;
      t.arity = std::popcount(mask);
      m.tables[mask] = t;
      continue;
    }
    auto it = r.sublinks.find(mask);
    if (it == r.sublinks.end())
      throw Error(Errc::MissingSublink,
                  r.name + ": no sublink reference for mask " + std::to_string(mask));
    const HModel& sub = catalog.model(it->second);
    m.tables[mask] = sub.table(SublinkId::full(sub.n));
  }
  m.tables[full] = full_table_from_alexander(r, negate);
  return m;
}

std::string first_violation(const std::vector<Violation>& v) {
  std::ostringstream os;
  os << v.front().axiom << " at (";
  for (size_t i = 0; i < v.front().witness.size(); ++i)
    os << (i ? "," : "") << v.front().witness[i];
  os << "): " << v.front().detail;
  return os.str();
}

// Build a validated model, flipping the polynomial sign if the stored one
// fails; reports back which sign was used.
HModel build_signed(const LinkRecord& r, const Catalog& catalog, bool& negated) {
  negated = false;
  std::string first_error;
  for (bool neg_try : {false, true}) {
    try {
      HModel m = assemble(r, catalog, neg_try);
      auto bad = validate(m, m.support_radius() + 2);
      if (!bad.empty())
        throw Error(Errc::ValidationFailed, r.name + ": " + first_violation(bad));
      negated = neg_try;
      return m;
    } catch (const Error& e) {
      if (e.code() == Errc::MissingSublink || e.code() == Errc::UnknownLink ||
          e.code() == Errc::HypothesisMissing)
        throw;  // sign flips cannot cure structural problems
      if (first_error.empty()) first_error = e.what();
    }
  }
  throw Error(Errc::ValidationFailed,
              r.name + ": no sign of the stored polynomial yields a valid model (" +
                  first_error + ")");
}

Rational parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

LinkRecord parse_record(const nlohmann::json& j) {
  LinkRecord r;
  r.name = j.at("name").get<std::string>();
  r.n = j.at("components").get<int>();
  if (r.n < 1 || r.n > 16)
    throw Error(Errc::ParseError, r.name + ": component count out of range");
  if (j.contains("linking")) {
    r.linking = j.at("linking").get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(r.linking.size()) != r.n)
      throw Error(Errc::ParseError, r.name + ": linking matrix size");
    for (const auto& row : r.linking) {
      if (static_cast<int>(row.size()) != r.n)
        throw Error(Errc::ParseError, r.name + ": linking matrix size");
      for (long long v : row)
        if (v != 0)
          throw Error(Errc::NotAlgebraicallySplit,
                      r.name + ": nonzero linking number");
    }
  } else {
    r.linking.assign(r.n, std::vector<long long>(r.n, 0));
  }
  if (j.contains("alexander"))
    r.alexander = NormalizedAlexander{poly_terms_from_json(j.at("alexander"), r.n), r.n};
  if (j.contains("flags")) {
    const auto& f = j.at("flags");
    r.flags.lspace = f.value("lspace", false);
    r.flags.brunnian = f.value("brunnian", false);
    r.flags.unknotted_components = f.value("unknotted_components", false);
    r.flags.split = f.value("split", false);
  }
  if (j.contains("sublinks"))
    for (const auto& [key, val] : j.at("sublinks").items()) {
      const unsigned mask = static_cast<unsigned>(std::stoul(key));
      if (mask == 0 || mask >= SublinkId::full(r.n).mask)
        throw Error(Errc::ParseError, r.name + ": sublink mask " + key +
                                          " is not a proper nonempty sublink");
      r.sublinks[mask] = val.get<std::string>();
    }
  if (j.contains("chi_prime")) {
    ChiPrimeTable c;
    c.arity = r.n;
    for (const auto& e : j.at("chi_prime"))
      c.support[e.at(0).get<LatticePoint>()] = e.at(1).get<long long>();
    r.chi_prime = c;
  }
  if (j.contains("expected"))
    for (const auto& [key, val] : j.at("expected").items())
      r.expected[key] = parse_rational(val);
  return r;
}

}  // namespace

HModel build_model(const LinkRecord& record, const Catalog& catalog) {
  bool negated = false;
  return build_signed(record, catalog, negated);
}

Catalog load_catalog_text(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed catalog JSON: ") + e.what());
  }
  Catalog cat;
  try {
    for (const auto& rec : j.at("links")) {
      LinkRecord r = parse_record(rec);
      if (cat.records.count(r.name))
        throw Error(Errc::ParseError, r.name + ": duplicate record name");
      cat.records.emplace(r.name, std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad catalog structure: ") + e.what());
  }

  // Structural checks: referenced sublinks exist with matching arity. The
  // reference graph is acyclic for free because proper sublinks have
  // strictly fewer components.
  for (const auto& [name, r] : cat.records)
    for (const auto& [mask, sub] : r.sublinks) {
      const LinkRecord& s = cat.record(sub);
      if (s.n != std::popcount(mask))
        throw Error(Errc::ParseError, name + ": sublink " + sub +
                                          " has wrong component count");
    }

  // Build in ascending component count so every dependency is ready.
  std::vector<const LinkRecord*> order;
  for (const auto& [name, r] : cat.records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const LinkRecord* a, const LinkRecord* b) { return a->n < b->n; });
  for (const LinkRecord* r : order) {
    bool negated = false;
    HModel m = build_signed(*r, cat, negated);
    if (negated)  // normalize the stored polynomial to the working sign
      cat.records[r->name].alexander->poly = neg(r->alexander->poly);
    cat.models.emplace(r->name, std::move(m));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open catalog file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_catalog_text(buf.str());
}

namespace {

void check_expected(const Catalog& cat, const LinkRecord& r, const HModel& m,
                    std::vector<VerifyIssue>& out) {
  const ChiPrimeTable* chi = r.chi_prime ? &*r.chi_prime : nullptr;
  for (const auto& [key, want] : r.expected) {
    Rational got;
    try {
      if (key == "a2") {
        got = Rational(a2(m, chi));
      } else if (key == "beta") {
        got = Rational(sato_levine(m, chi));
      } else if (key == "mu_squared") {
        got = Rational(mu123_squared(m, chi).mu_squared);
      } else if (key == "abs_mu") {
        auto t = mu123_squared(m, chi);
        if (!t.abs_mu) {
          out.push_back({r.name, "expected", "mu^2 is not a perfect square"});
          continue;
        }
        got = Rational(*t.abs_mu);
      } else if (key == "sum_h") {
        got = Rational(total_h(m));
      } else if (key == "genus") {
        got = Rational(lspace_knot_genus(m.table(SublinkId::full(1)), r.flags));
      } else if (key == "casson_ones") {
        got = Rational(casson_surgery(m, std::vector<long long>(m.n, 1), chi));
      } else if (key == "d_one_bound") {
        got = d_one_surgery_bound(m, r.flags.lspace).value;
      } else if (key == "hf_inf_rank") {
        auto t = mu123_squared(m, chi);
        got = Rational(hf_inf_rank_zero_surgery(t.abs_mu.value_or(0)));
      } else {
        out.push_back({r.name, "expected", "unknown expected-value key " + key});
        continue;
      }
    } catch (const Error& e) {
      out.push_back({r.name, "expected", key + ": " + e.what()});
      continue;
    }
    if (!(got == want))
      out.push_back({r.name, "expected",
                     key + ": got " + got.str() + ", want " + want.str()});
  }
}

}  // namespace

std::vector<std::string> verify_check_names() {
  return {"axioms", "alexander-roundtrip", "euler-consistency", "split-trivial",
          "brunnian-feasibility", "expected"};
}

std::vector<VerifyIssue> verify_catalog(const Catalog& cat) {
  std::vector<VerifyIssue> out;
  for (const auto& [name, r] : cat.records) {
    const HModel& m = cat.model(name);
    const ChiPrimeTable* chi = r.chi_prime ? &*r.chi_prime : nullptr;

    auto bad = validate(m, m.support_radius() + 2);
    for (const auto& v : bad)
      out.push_back({name, "axioms", first_violation({v})});

    if (r.n >= 2 && r.alexander) {
      try {
        const NormalizedAlexander back = alexander_from_model(m, chi);
        if (back.poly != r.alexander->poly)
          out.push_back({name, "alexander-roundtrip",
                         "model does not reproduce the stored polynomial"});
      } catch (const Error& e) {
        out.push_back({name, "alexander-roundtrip", e.what()});
      }
      const LaurentPoly euler = hfl_euler(m, chi);
      if (euler != r.alexander->poly)
        out.push_back({name, "euler-consistency",
                       "corner-sum generating function differs from the polynomial"});
    }

    if (r.flags.split) {
      if (!m.table(SublinkId::full(m.n)).support.empty())
        out.push_back({name, "split-trivial", "split link has nonzero h'"});
      if (r.alexander && !r.alexander->poly.is_zero() && r.n >= 2)
        out.push_back({name, "split-trivial", "split link has nonzero polynomial"});
    }

    if (r.n == 3 && r.flags.brunnian && r.flags.lspace) {
      const Verdict v = feasibility_brunnian(m, r.flags);
      if (v.conclusion == Conclusion::Infeasible)
        out.push_back({name, "brunnian-feasibility", v.detail});
    }

    check_expected(cat, r, m, out);
  }
  return out;
}

}  // namespace floerlink
