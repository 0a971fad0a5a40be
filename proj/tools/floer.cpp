// Command-line surface for the link invariant library: catalog validation,
// H/h/polynomial computation, numerical invariants, detection verdicts and
// the full consistency sweep.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floerlink/catalog.hpp"
#include "floerlink/render.hpp"
#include "floerlink/serialize.hpp"

using namespace floerlink;
using nlohmann::json;

namespace {

std::string default_catalog_path() {
  if (const char* env = std::getenv("FLOER_CATALOG")) return env;
  return FLOER_BUNDLED_CATALOG;
}

const ChiPrimeTable* chi_of(const LinkRecord& r) {
  return r.chi_prime ? &*r.chi_prime : nullptr;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_to_json(v).dump(2) << "\n";
    return;
  }
  std::cout << "verdict: " << conclusion_name(v.conclusion) << "\n"
            << "criterion: " << v.criterion << "\n";
  if (v.witness) std::cout << "witness: " << *v.witness << "\n";
  if (!v.hypotheses_used.empty()) {
    std::cout << "hypotheses:";
    for (const auto& h : v.hypotheses_used) std::cout << " [" << h << "]";
    std::cout << "\n";
  }
  if (!v.detail.empty()) std::cout << "detail: " << v.detail << "\n";
}

Verdict run_detect(const Catalog& cat, const std::string& link) {
  const LinkRecord& r = cat.record(link);
  const HModel& m = cat.model(link);
  if (r.flags.lspace) {
    Verdict u = detect_unlink(m, r.flags);
    if (u.conclusion == Conclusion::Unlink) return u;
  }
  if (r.n == 2 && r.flags.lspace) return detect_whitehead(m, r.flags);
  if (r.n == 3 && r.flags.lspace && r.flags.brunnian) {
    const auto t = mu123_squared(m, chi_of(r), true);
    return detect_borromean(m, r.flags, t.abs_mu.value_or(0));
  }
  Verdict v;
  v.criterion = "none";
  v.detail = "no detection statement applies to this record's flags/arity";
  return v;
}

int run_verify(const std::string& path, bool as_json) {
  Catalog cat = load_catalog(path);
  const auto issues = verify_catalog(cat);
  if (as_json) {
    json j = {{"catalog", path},
              {"records", cat.records.size()},
              {"checks", verify_check_names()},
              {"issues", json::array()}};
    for (const auto& i : issues)
      j["issues"].push_back({{"record", i.record}, {"check", i.check}, {"detail", i.detail}});
    j["ok"] = issues.empty();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "catalog: " << path << " (" << cat.records.size() << " records)\n";
    for (const auto& name : verify_check_names()) {
      size_t fails = 0;
      for (const auto& i : issues)
        if (i.check == name) ++fails;
      std::cout << "  " << name << ": "
                << (fails ? "FAIL (" + std::to_string(fails) + ")" : "ok") << "\n";
    }
    for (const auto& i : issues)
      std::cout << "  ! " << i.record << " [" << i.check << "] " << i.detail << "\n";
    std::cout << (issues.empty() ? "all checks passed\n" : "verification FAILED\n");
  }
  return issues.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link Floer homology invariant calculator"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json / --catalog after the subcommand name
  bool as_json = false;
  std::string catalog_path = default_catalog_path();
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--catalog", catalog_path, "catalog file (default: FLOER_CATALOG or bundled)");

  // catalog validate <path>
  auto* cmd_catalog = app.add_subcommand("catalog", "catalog file operations");
  auto* cmd_validate = cmd_catalog->add_subcommand("validate", "parse, build and validate a catalog");
  std::string validate_path;
  cmd_validate->add_option("path", validate_path, "catalog JSON file")->required();

  // compute --link NAME {H|h|hprime|alexander|delta_prime} [--box R]
  auto* cmd_compute = app.add_subcommand("compute", "compute H/h/h'/polynomial data");
  std::string compute_link, compute_what;
  int box = -1;
  cmd_compute->add_option("--link", compute_link, "link name")->required();
  cmd_compute->add_option("what", compute_what, "H, h, hprime, alexander or delta_prime")
      ->required()
      ->check(CLI::IsMember({"H", "h", "hprime", "alexander", "delta_prime"}));
  cmd_compute->add_option("--box", box, "half-width of the evaluation box");

  // invariant ...
  auto* cmd_inv = app.add_subcommand("invariant", "numerical invariants");
  std::string inv_which, inv_link;
  std::vector<long long> inv_q;
  long long inv_m = 0, inv_i = 0;
  cmd_inv->add_option("which", inv_which,
                      "a2, beta, mu123, casson, d-lens, d-large, d-one-bound, rank-zero-surgery")
      ->required()
      ->check(CLI::IsMember({"a2", "beta", "mu123", "casson", "d-lens", "d-large",
                             "d-one-bound", "rank-zero-surgery"}));
  cmd_inv->add_option("--link", inv_link, "link name");
  cmd_inv->add_option("--q", inv_q, "surgery denominators q1,q2,...")->delimiter(',');
  cmd_inv->add_option("--m", inv_m, "surgery coefficient / lens space order");
  cmd_inv->add_option("--i", inv_i, "Spin^c index");

  // detect --link NAME
  auto* cmd_detect = app.add_subcommand("detect", "run the detection classifiers");
  std::string detect_link;
  cmd_detect->add_option("--link", detect_link, "link name")->required();

  // verify [--catalog PATH]
  auto* cmd_verify = app.add_subcommand("verify", "full consistency sweep over the catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_validate->parsed()) {
      Catalog cat = load_catalog(validate_path);
      if (as_json)
        std::cout << json{{"ok", true}, {"records", cat.records.size()}}.dump(2) << "\n";
      else
        std::cout << "OK: " << cat.records.size() << " records validated\n";
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify(catalog_path, as_json);

    Catalog cat = load_catalog(catalog_path);

    if (cmd_compute->parsed()) {
      const LinkRecord& r = cat.record(compute_link);
      const HModel& m = cat.model(compute_link);
      if (compute_what == "alexander" || compute_what == "delta_prime") {
        if (!r.alexander) throw Error(Errc::ValidationFailed, "record has no polynomial");
        const LaurentPoly p = compute_what == "alexander"
                                  ? r.alexander->poly
                                  : delta_prime(*r.alexander);
        if (as_json)
          std::cout << poly_to_json(p).dump(2) << "\n";
        else
          std::cout << render_poly(p) << "\n";
        return 0;
      }
      if (compute_what == "hprime") {
        const auto& t = m.table(SublinkId::full(m.n));
        if (as_json)
          std::cout << table_to_json(t).dump(2) << "\n";
        else if (t.support.empty())
          std::cout << "0 everywhere\n";
        else
          for (const auto& [s, v] : t.support) {
            std::cout << "(";
            for (size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
            std::cout << ") = " << v << "\n";
          }
        return 0;
      }
      const bool use_H = compute_what == "H";
      const int b = box >= 0 ? box : m.support_radius() + 2;
      if (as_json) {
        json values = json::array();
        LatticePoint s(m.n, -b);
        bool more = true;
        while (more) {
          values.push_back({s, use_H ? eval_H(m, s) : eval_h(m, s)});
          more = false;
          for (int i = 0; i < m.n; ++i) {
            if (++s[i] <= b) { more = true; break; }
            s[i] = -b;
          }
        }
        std::cout << json{{"link", compute_link}, {"what", compute_what},
                          {"box", b}, {"values", values}}.dump(2) << "\n";
      } else {
        std::cout << render_values(m, use_H, b);
      }
      return 0;
    }

    if (cmd_inv->parsed()) {
      auto emit = [&](const std::string& name, const json& value,
                      const json& extra = json::object()) {
        if (as_json) {
          json j = extra;
          j["invariant"] = name;
          j["value"] = value;
          if (!inv_link.empty()) j["link"] = inv_link;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << name << " = "
                    << (value.is_string() ? value.get<std::string>() : value.dump());
          for (const auto& [k, v] : extra.items())
            std::cout << "  [" << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                      << "]";
          std::cout << "\n";
        }
      };
      if (inv_which == "d-lens") {
        emit("d-lens", d_lens(inv_m, inv_i).str());
        return 0;
      }
      if (inv_link.empty())
        throw Error(Errc::UnknownLink, "--link is required for this invariant");
      const LinkRecord& r = cat.record(inv_link);
      const HModel& m = cat.model(inv_link);
      if (inv_which == "a2") {
        emit("a2", a2(m, chi_of(r)));
      } else if (inv_which == "beta") {
        emit("beta", sato_levine(m, chi_of(r)));
      } else if (inv_which == "mu123") {
        const auto t = mu123_squared(m, chi_of(r), r.flags.brunnian && r.flags.lspace);
        json extra;
        if (t.abs_mu) extra["abs_mu"] = *t.abs_mu;
        emit("mu123_squared", t.mu_squared, extra);
      } else if (inv_which == "casson") {
        if (static_cast<int>(inv_q.size()) != m.n)
          throw Error(Errc::DimensionMismatch, "--q must list one denominator per component");
        emit("casson", casson_surgery(m, inv_q, chi_of(r)));
      } else if (inv_which == "d-large") {
        const auto b = d_large_surgery_knot(m.table(SublinkId::full(1)), inv_m, inv_i);
        emit("d-large", b.value.str(), {{"kind", "Exact"}});
      } else if (inv_which == "d-one-bound") {
        const auto b = d_one_surgery_bound(m, r.flags.lspace);
        emit("d-one-bound", b.value.str(),
             {{"kind", b.kind == BoundKind::Exact ? "Exact" : "UpperBound"}});
      } else if (inv_which == "rank-zero-surgery") {
        const auto t = mu123_squared(m, chi_of(r), r.flags.brunnian && r.flags.lspace);
        emit("rank-zero-surgery", hf_inf_rank_zero_surgery(t.abs_mu.value_or(0)));
      }
      return 0;
    }

    if (cmd_detect->parsed()) {
      print_verdict(run_detect(cat, detect_link), as_json);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
