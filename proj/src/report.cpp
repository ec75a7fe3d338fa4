#include "charq/report.hpp"

#include <fstream>

namespace charq {

json to_json(const RunReport& r) {
  return json{{"schema", kReportSchema}, {"command", r.command},       {"inputs", r.inputs},
              {"outputs", r.outputs},    {"claim", r.claim},           {"elapsed_ms", r.elapsed_ms},
              {"pass", r.pass}};
}

json to_json(const SChoice& c, const FiniteField& k0) {
  return json{{"s", k0.str(c.s)},
              {"t", c.t_repr},
              {"neg_t_order", c.neg_t_order},
              {"required_order", c.required_order},
              {"from_table", c.from_table}};
}

json to_json(const Certificate& c) {
  json w = json::array();
  for (const auto& b : c.braid_witnesses)
    w.push_back({{"generator", "s" + std::to_string(b.generator)}, {"word", b.word}, {"image", b.image}, {"holds", b.holds}});
  return json{{"p", c.p},
              {"d", c.d},
              {"s", c.s},
              {"target", target_name(c.target)},
              {"group", c.group},
              {"target_order", c.target_order},
              {"order", c.order},
              {"order_method", c.order_method},
              {"surjective", c.surjective},
              {"braid_witnesses", w},
              {"alpha_ok", c.alpha_ok},
              {"verdict", verdict_name(c.verdict)},
              {"note", c.note}};
}

json to_json(const AutF2Analysis& a, const PermGroup& g) {
  json fixed = json::array();
  for (const auto& c : a.fixed_classes) fixed.push_back({g.str(c.rep.a), g.str(c.rep.b)});
  return json{{"order", a.order},
              {"mode", mode_name(a.mode)},
              {"pair_count", a.pair_count},
              {"class_count", a.mode == EpiMode::ModInn ? a.inn_class_count : a.aut_class_count},
              {"inn_class_count", a.inn_class_count},
              {"aut_class_count", a.aut_class_count},
              {"orbit_count", a.orbit_count},
              {"orbit_sizes", a.orbit_sizes},
              {"fixed_classes", fixed}};
}

std::string triple_str(const FiniteField& f, TraceTriple t) {
  return "(" + f.str(t.x) + ", " + f.str(t.y) + ", " + f.str(t.z) + ")";
}

json to_json(const CharvarReport& r, const FiniteField& f) {
  json orbits = json::array(), flags = json::array();
  for (const auto& o : r.orbits) {
    json e{{"rep", triple_str(f, o.rep)}, {"on_surface", o.on_surface}, {"branch", o.branch}};
    if (o.branch == "klein-four") {
      auto m = [&](const Mat2& a) {
        return "[[" + f.str(a[0]) + ", " + f.str(a[1]) + "], [" + f.str(a[2]) + ", " + f.str(a[3]) + "]]";
      };
      e["witness"] = {m(o.witness_a), m(o.witness_b)};
      e["image_order"] = o.image_order;
    }
    orbits.push_back(e);
    flags.push_back(o.on_surface);
  }
  return json{{"q", r.q}, {"fixed_orbits", orbits}, {"surface_flags", flags}, {"verdict", r.verdict}};
}

json to_json(const CongruenceResult& r) {
  return json{{"orbit_size", r.index},
              {"level", r.level},
              {"modulus", r.modulus},
              {"minus_one_trivial", r.minus_one_trivial},
              {"sl2_order", r.sl2_order},
              {"image_order", r.image_order},
              {"degree", r.degree},
              {"verdict", verdict_name(r.verdict)},
              {"schreier_count", r.schreier_count},
              {"relations_ok", r.relations_ok}};
}

std::string mat_json_str(const QuadAlgebra& k, const SpecMatrix3& m) { return mat_str(k, m); }

json specialization_json(const Specialization& sp) {
  const QuadAlgebra& k = sp.k();
  return json{{"p", sp.k0().p()},
              {"d", sp.k0().d()},
              {"s", sp.k0().str(k.s())},
              {"kind", kind_name(k.kind())},
              {"target", target_name(sp.target)},
              {"X", mat_str(k, sp.X)},
              {"Y", mat_str(k, sp.Y)},
              {"H", mat_str(k, sp.H)},
              {"det_H", k.str(det_h(sp))},
              {"alpha_ok", check_alpha_bar_spec(sp)}};
}

std::string golden_compare(const std::string& dir, const std::string& name, const json& outputs) {
  std::string path = dir + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) return "missing golden file " + path;
  json want;
  try {
    want = json::parse(in);
  } catch (const std::exception& e) {
    return "unreadable golden file " + path + ": " + e.what();
  }
  if (want.contains("outputs")) want = want["outputs"];
  if (want != outputs) return "outputs differ from " + path;
  return {};
}

}  // namespace charq
