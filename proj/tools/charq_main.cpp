// charq: command-line front end. Every command prints one JSON run report.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charq/acceptance.hpp"
#include "charq/error.hpp"
#include "charq/report.hpp"

using namespace charq;

namespace {

struct Common {
  unsigned threads = 1;
  std::string golden;
  u64 cap = default_closure_cap();
};

struct FieldArgs {
  u64 p = 0;
  unsigned d = 1;
};

void add_field(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "characteristic")->required();
  cmd->add_option("--d", f.d, "degree over the prime field")->capture_default_str();
}

Target parse_kind(const std::string& k) {
  if (k == "sl3") return Target::SL3;
  if (k == "su3") return Target::SU3;
  throw Error(Errc::Parse, "kind must be sl3 or su3");
}

GenPair parse_pair(const PermGroup& g, const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw Error(Errc::Parse, "base must look like \"g1;g2\"");
  return {g.parse_element(text.substr(0, semi)), g.parse_element(text.substr(semi + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic quotients of F2 from the Burau representation"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads")->capture_default_str();
  app.add_option("--golden", common.golden, "compare outputs with DIR/<command>.json");
  app.add_option("--cap", common.cap, "closure cap (default from BURAU_CLOSURE_CAP or 2^25)");

  FieldArgs field;
  std::string s_expr, kind, group_file, mode = "aut", base;
  u64 q = 0;
  bool no_chain = false;
  std::vector<int> only;

  auto* c_spec = app.add_subcommand("specialize", "base-change the Burau data along q + 1/q -> s");
  add_field(c_spec, field);
  c_spec->add_option("--s", s_expr, "element of GF(p^d): integer, Z(n)^k or t:Z(n)^k")->required();

  auto* c_choose = app.add_subcommand("choose-s", "parameter s for the sl3 or su3 construction");
  add_field(c_choose, field);
  c_choose->add_option("--kind", kind, "sl3 or su3")->required();

  auto* c_cert = app.add_subcommand("certify", "certify <X, Y> as the full SL3 or SU3");
  add_field(c_cert, field);
  auto* s_opt = c_cert->add_option("--s", s_expr, "parameter s");
  c_cert->add_option("--kind", kind, "sl3 or su3, choosing s by the recipe")->excludes(s_opt);
  c_cert->add_flag("--no-chain", no_chain, "no orbit-chain bound above the cap");

  auto* c_order = app.add_subcommand("order", "order of <X, Y> at a specialization");
  add_field(c_order, field);
  c_order->add_option("--s", s_expr, "parameter s")->required();
  c_order->add_flag("--no-chain", no_chain, "no orbit-chain bound above the cap");

  auto* c_orbits = app.add_subcommand("orbits", "Nielsen orbits on epimorphism classes");
  c_orbits->add_option("--group", group_file, "group file or bundled model name")->required();
  c_orbits->add_option("--mode", mode, "aut or inn")->capture_default_str();

  auto* c_charvar = app.add_subcommand("charvar-scan", "fixed points on the SL2 character variety");
  c_charvar->add_option("--q", q, "field order")->required();

  auto* c_cong = app.add_subcommand("congruence", "congruence degree of class stabilizers");
  c_cong->add_option("--group", group_file, "group file or bundled model name")->required();
  c_cong->add_option("--base", base, "generating pair \"g1;g2\" in cycle notation; all orbits if omitted");

  auto* c_sym = app.add_subcommand("symbolic-check", "identities of the symbolic Burau data");

  auto* c_acc = app.add_subcommand("accept", "acceptance battery");
  c_acc->add_option("--only", only, "criterion numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunReport rep;
  auto* cmd = app.get_subcommands().front();
  rep.command = cmd->get_name();
  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    auto k0 = [&] {
      rep.inputs["p"] = field.p;
      rep.inputs["d"] = field.d;
      return FiniteField::get(field.p, field.d);
    };
    if (cmd == c_spec) {
      auto f = k0();
      rep.inputs["s"] = s_expr;
      rep.outputs = specialization_json(specialize(f, parse_base_element(f, s_expr)));
      rep.claim = "specialization kind and target group";
      rep.pass = true;
    } else if (cmd == c_choose) {
      auto f = k0();
      rep.inputs["kind"] = kind;
      rep.outputs = to_json(choose_s(f, parse_kind(kind)), *f);
      rep.claim = "-t has order |k0| - 1 (sl3) or |k0| + 1 (su3) and t^4 != 1";
      rep.pass = true;
    } else if (cmd == c_cert || cmd == c_order) {
      auto f = k0();
      FiniteField::Elt s;
      if (!s_expr.empty()) {
        rep.inputs["s"] = s_expr;
        s = parse_base_element(f, s_expr);
      } else if (!kind.empty()) {
        rep.inputs["kind"] = kind;
        s = choose_s(f, parse_kind(kind)).s;
      } else {
        throw Error(Errc::Parse, "certify needs --s or --kind");
      }
      CertifyOptions opts;
      opts.cap = common.cap;
      opts.threads = common.threads;
      opts.chain_fallback = !no_chain;
      Certificate c = certify_characteristic(f, s, opts);
      if (cmd == c_cert) {
        rep.outputs = to_json(c);
        rep.claim = "X and Y generate the whole target group";
        rep.pass = c.verdict == Verdict::CharacteristicQuotient;
      } else {
        rep.outputs = {{"group", c.group},
                       {"target_order", c.target_order},
                       {"order", c.order},
                       {"order_method", c.order_method},
                       {"exact", c.order_method == "bfs" || c.order == c.target_order},
                       {"note", c.note}};
        rep.claim = "order of the image of F2";
        rep.pass = c.verdict != Verdict::Inconclusive;
      }
    } else if (cmd == c_orbits) {
      if (mode != "aut" && mode != "inn") throw Error(Errc::Parse, "mode must be aut or inn");
      rep.inputs = {{"group", group_file}, {"mode", mode}};
      PermGroup g = PermGroup::load(group_file);
      auto a = aut_f2_analysis(g, common.threads, mode == "inn" ? EpiMode::ModInn : EpiMode::ModAut);
      rep.outputs = to_json(a, g);
      rep.claim = "a fixed class would make G a characteristic quotient of F2";
      rep.pass = true;
    } else if (cmd == c_charvar) {
      rep.inputs["q"] = q;
      auto f = FiniteField::of_order(q);
      auto r = classify_fixed(*f, common.threads);
      rep.outputs = to_json(r, *f);
      rep.claim = "only the orbits of (0,0,0) and (2,2,2) are fixed, so no PSL2 quotient is characteristic";
      rep.pass = r.verdict == "NoCharacteristicPSL2Quotient";
    } else if (cmd == c_cong) {
      rep.inputs["group"] = group_file;
      PermGroup g = PermGroup::load(group_file);
      rep.claim = "congruence degree of the stabilizer of an Inn-class";
      if (!base.empty()) {
        rep.inputs["base"] = base;
        rep.outputs = to_json(congruence_degree(build_class_action(g, parse_pair(g, base))));
      } else {
        auto sv = congruence_survey(g, common.threads);
        json orbits = json::array();
        for (size_t i = 0; i < sv.results.size(); ++i) {
          json r = to_json(sv.results[i]);
          r["base"] = g.str(sv.orbit_bases[i].a) + ";" + g.str(sv.orbit_bases[i].b);
          orbits.push_back(r);
        }
        rep.outputs = {{"inn_class_count", sv.inn_class_count},
                       {"aut_class_count", sv.aut_class_count},
                       {"inn_orbit_count", sv.inn_orbit_count},
                       {"aut_orbit_count", sv.aut_orbit_count},
                       {"orbits", orbits}};
      }
      rep.pass = true;
    } else if (cmd == c_sym) {
      json checks = json::array();
      rep.pass = true;
      for (const auto& list : {symbolic_checks(), trace_checks()})
        for (const auto& c : list) {
          checks.push_back({{"name", c.name}, {"pass", c.pass}});
          rep.pass = rep.pass && c.pass;
        }
      rep.outputs = {{"checks", checks}};
      rep.claim = "exact identities of the Burau data and its traces";
    } else if (cmd == c_acc) {
      AcceptanceOptions opts;
      opts.cap = common.cap;
      opts.threads = common.threads;
      opts.only = only;
      opts.on_result = [](const CriterionResult& r) { std::cerr << r.line() << std::endl; };
      rep.inputs["only"] = only;
      json crits = json::array();
      rep.pass = true;
      for (const auto& r : run_acceptance(opts)) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        crits.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
        rep.pass = rep.pass && r.pass();
      }
      rep.outputs = {{"criteria", crits}};
      rep.claim = "acceptance criteria 1-10";
    }
  } catch (const Error& e) {
    rep.outputs = {{"error", errc_name(e.code())}, {"message", e.what()}};
    rep.pass = false;
    code = e.code() == Errc::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    rep.outputs = {{"error", "Internal"}, {"message", e.what()}};
    rep.pass = false;
    code = 1;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json out = to_json(rep);
  if (!common.golden.empty() && code == 0) {
    std::string diff = golden_compare(common.golden, rep.command, rep.outputs);
    out["golden"] = diff.empty() ? "match" : diff;
    if (!diff.empty()) rep.pass = out["pass"] = false;
  }
  std::cout << out.dump(2) << std::endl;
  if (code) return code;
  return rep.pass ? 0 : 1;
}
