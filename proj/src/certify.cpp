#include "charq/error.hpp"
#include "charq/mgroup.hpp"

namespace charq {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CharacteristicQuotient: return "CharacteristicQuotient";
    case Verdict::NotSurjective: return "NotSurjective";
    case Verdict::WitnessFailure: return "WitnessFailure";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

PMat ClosureModel::convert(const Specialization& sp, const SpecMatrix3& m) const {
  PMat out;
  if (split) {
    auto g1 = split_components(sp, m).first;
    for (int i = 0; i < 9; ++i) out[i] = static_cast<std::uint8_t>(g1[i]);
  } else {
    for (int i = 0; i < 9; ++i) out[i] = static_cast<std::uint8_t>(sp.k().index(m[i]));
  }
  return out;
}

ClosureModel closure_model(const Specialization& sp) {
  switch (sp.k().kind()) {
    case QuadKind::Split: return {TableField::from_field(sp.k0()), true};
    case QuadKind::Inert: return {TableField::from_inert(sp.k()), false};
    default: throw Error(Errc::WrongKind, "no closure model for a ramified algebra");
  }
}

Certificate certify_characteristic(const FieldPtr& k0, FiniteField::Elt s, const CertifyOptions& opts) {
  Specialization sp = specialize(k0, s);
  if (sp.target != Target::SL3 && sp.target != Target::SU3)
    throw Error(Errc::WrongKind, std::string("specialization targets ") + target_name(sp.target));
  const QuadAlgebra& k = sp.k();
  const u64 Q = k0->order();

  Certificate c;
  c.p = k0->p();
  c.d = k0->d();
  c.s = k0->str(s);
  c.target = sp.target;
  bool sl = sp.target == Target::SL3;
  c.group = std::string(sl ? "SL3(" : "SU3(") + std::to_string(Q) + ")";
  c.target_order = target_order(sl ? GroupKind::SL3 : GroupKind::SU3, Q);

  // rho(s_i) W rho(s_i)^-1 against the specialized image of xi(s_i)(W)
  const SpecMatrix3 xinv = mat_inv(k, sp.X), yinv = mat_inv(k, sp.Y);
  bool witnesses_ok = true;
  for (int i = 1; i <= 3; ++i) {
    const SpecMatrix3& r = sp.rho[i - 1];
    SpecMatrix3 rinv = mat_inv(k, r);
    for (const auto& [name, w, wm] : {std::tuple{"x", FreeWord::x(), sp.X}, std::tuple{"y", FreeWord::y(), sp.Y}}) {
      FreeWord img = xi_letter(i).apply(w);
      SpecMatrix3 lhs = mat_mul(k, mat_mul(k, r, wm), rinv);
      SpecMatrix3 rhs = img.eval(mat_identity(k), sp.X, xinv, sp.Y, yinv,
                                 [&](const SpecMatrix3& a, const SpecMatrix3& b) { return mat_mul(k, a, b); });
      BraidWitness bw{i, name, img.str(), lhs == rhs};
      witnesses_ok = witnesses_ok && bw.holds;
      c.braid_witnesses.push_back(bw);
    }
  }
  c.alpha_ok = check_alpha_bar_spec(sp);
  if (!witnesses_ok || !c.alpha_ok) {
    c.verdict = Verdict::WitnessFailure;
    c.note = !witnesses_ok ? "braid conjugation witness failed" : "alpha_bar check failed";
    return c;
  }

  ClosureModel model = closure_model(sp);
  std::vector<PMat> gens{model.convert(sp, sp.X), model.convert(sp, sp.Y)};
  // <X, Y> lies in the target group, so reaching its order proves equality
  if (c.target_order <= opts.cap) {
    try {
      c.order = closure_order(model.field, gens, opts.cap, opts.threads);
      c.order_method = "bfs";
    } catch (const CapExceeded& e) {
      c.order = e.partial();
      c.order_method = "bfs";
      c.verdict = Verdict::Inconclusive;
      c.note = e.what();
      return c;
    }
  } else if (opts.chain_fallback) {
    ChainBound cb = chain_lower_bound(model.field, gens, c.target_order);
    c.order = cb.bound;
    c.order_method = "orbit-chain";
    if (cb.bound < c.target_order) {
      c.verdict = Verdict::Inconclusive;
      c.note = "orbit-chain bound below the target order";
      return c;
    }
  } else {
    c.verdict = Verdict::Inconclusive;
    c.note = "target order exceeds the closure cap of " + std::to_string(opts.cap);
    return c;
  }
  c.surjective = c.order == c.target_order;
  c.verdict = c.surjective ? Verdict::CharacteristicQuotient : Verdict::NotSurjective;
  if (c.order > c.target_order) {
    c.verdict = Verdict::Inconclusive;
    c.note = "closure larger than the target group";
  }
  return c;
}

}  // namespace charq
