#include "charq/speckit.hpp"

#include "charq/error.hpp"

namespace charq {

const char* target_name(Target t) {
  switch (t) {
    case Target::SL3: return "SL3";
    case Target::SU3: return "SU3";
    case Target::NonReductive: return "NonReductive";
    case Target::DegenerateForm: return "DegenerateForm";
  }
  return "?";
}

QElt eval_at_t(const QuadAlgebra& k, const LaurentPoly& p) {
  if (p.is_zero()) return k.zero();
  const FiniteField& k0 = k.base();
  QElt r = k.zero();
  QElt pw = k.pow(k.t(), p.low());
  const QElt t = k.t();
  const BigInt pp = k0.p();
  for (int e = p.low(); e <= p.high(); ++e) {
    BigInt c = p.coeff(e) % pp;
    if (c < 0) c += pp;
    auto ce = k0.from_int(c.convert_to<long long>());
    if (ce != 0) r = k.add(r, k.mul(k.from_base(ce), pw));
    pw = k.mul(pw, t);
  }
  return r;
}

QElt eval_at_t(const QuadAlgebra& k, const Localized& x) {
  QElt n = eval_at_t(k, x.numerator());
  if (x.denom_power() == 0) return n;
  QElt tp1 = k.add(k.t(), k.one());
  if (!k.is_unit(tp1)) throw Error(Errc::BadParameter, "q+1 vanishes at this specialization");
  return k.mul(n, k.pow(k.inv(tp1), x.denom_power()));
}

SpecMatrix3 eval_at_t(const QuadAlgebra& k, const RingMatrix3& m) {
  SpecMatrix3 r;
  for (int i = 0; i < 9; ++i) r[i] = eval_at_t(k, m.a[i]);
  return r;
}

SpecMatrix3 spec_conj(const QuadAlgebra& k, const SpecMatrix3& m) {
  SpecMatrix3 r;
  for (int i = 0; i < 9; ++i) r[i] = k.conj(m[i]);
  return r;
}

Target classify_target(const QuadAlgebra& k) {
  switch (k.kind()) {
    case QuadKind::Split: return Target::SL3;
    case QuadKind::Ramified: return Target::NonReductive;
    case QuadKind::Inert: return k.pow(k.t(), 4) == k.one() ? Target::DegenerateForm : Target::SU3;
  }
  return Target::NonReductive;
}

Specialization specialize(const FieldPtr& k0, FiniteField::Elt s) {
  if (s == k0->from_int(-2)) throw Error(Errc::BadParameter, "s = -2 makes q+1 vanish");
  Specialization sp;
  sp.ext = std::make_shared<const QuadAlgebra>(k0, s);
  const QuadAlgebra& k = *sp.ext;
  const BurauData& b = burau();
  for (int i = 0; i < 3; ++i) sp.rho[i] = eval_at_t(k, b.rho[i]);
  sp.X = eval_at_t(k, b.X);
  sp.Y = eval_at_t(k, b.Y);
  sp.H = eval_at_t(k, b.H);
  sp.S2 = eval_at_t(k, b.S2);
  sp.O = eval_at_t(k, b.O);
  sp.delta = eval_at_t(k, b.delta);
  sp.target = classify_target(k);
  return sp;
}

bool preserves_form(const Specialization& sp, const SpecMatrix3& g) {
  const QuadAlgebra& k = sp.k();
  return mat_mul(k, mat_mul(k, mat_transpose<QuadAlgebra>(g), sp.H), spec_conj(k, g)) == sp.H;
}

QElt det_h(const Specialization& sp) { return mat_det(sp.k(), sp.H); }

namespace {

SChoice finish_sl3(const FiniteField& k0, FiniteField::Elt t, bool table) {
  if (k0.pow(t, 4) == k0.one()) throw Error(Errc::BadParameter, "recipe produced t with t^4 = 1");
  SChoice c;
  c.s = k0.add(t, k0.inv(t));
  c.t_repr = k0.str(t);
  c.neg_t_order = element_order(k0, k0.neg(t));
  c.required_order = k0.order() - 1;
  c.from_table = table;
  if (c.neg_t_order != c.required_order) throw Error(Errc::BadParameter, "order of -t is not |k0| - 1");
  return c;
}

SChoice finish_su3(const FiniteField& k0, const FiniteField& big, FiniteField::Elt t, bool table) {
  if (big.pow(t, 4) == big.one()) throw Error(Errc::BadParameter, "recipe produced t with t^4 = 1");
  SChoice c;
  auto sb = big.add(t, big.pow(t, static_cast<long long>(k0.order())));
  c.s = restrict_to(big, k0, sb);  // hard error if s' is not in k0
  c.t_repr = big.str(t);
  c.neg_t_order = element_order(big, big.neg(t));
  c.required_order = k0.order() + 1;
  c.from_table = table;
  if (c.neg_t_order != c.required_order) throw Error(Errc::BadParameter, "order of -t is not |k0| + 1");
  if (classify_quadratic(k0, c.s) != QuadKind::Inert) throw Error(Errc::BadParameter, "s' is not inert");
  return c;
}

}  // namespace

SChoice choose_s(const FieldPtr& k0, Target kind) {
  const u64 Q = k0->order();
  if (kind == Target::SL3) {
    if (Q <= 5) throw Error(Errc::Unsupported, "no sl3 choice for |k0| = " + std::to_string(Q));
    if (Q == 7) return finish_sl3(*k0, k0->z_pow(2), true);
    return finish_sl3(*k0, k0->neg(k0->gen()), false);
  }
  if (kind == Target::SU3) {
    if (Q <= 3) throw Error(Errc::Unsupported, "no su3 choice for |k0| = " + std::to_string(Q));
    auto big = FiniteField::get(k0->p(), 2 * k0->d());
    if (Q == 7) return finish_su3(*k0, *big, big->z_pow(6), true);
    if (Q == 8) return finish_su3(*k0, *big, big->z_pow(7), true);
    if (Q == 5) return finish_su3(*k0, *big, big->z_pow(8), true);
    // -t' = g^(Q-1) has order Q+1
    auto t = big->neg(big->z_pow(static_cast<long long>(Q - 1)));
    return finish_su3(*k0, *big, t, false);
  }
  throw Error(Errc::BadParameter, "kind must be SL3 or SU3");
}

std::pair<FieldMatrix3, FieldMatrix3> split_components(const Specialization& sp, const SpecMatrix3& g) {
  const QuadAlgebra& k = sp.k();
  if (k.kind() != QuadKind::Split) throw Error(Errc::WrongKind, "split_components needs a split specialization");
  FieldMatrix3 g1, g2, h1;
  for (int i = 0; i < 9; ++i) {
    std::tie(g1[i], g2[i]) = k.split(g[i]);
    h1[i] = k.split(sp.H[i]).first;
  }
  const FiniteField& k0 = k.base();
  if (mat_mul(k0, mat_mul(k0, mat_transpose<FiniteField>(g1), h1), g2) != h1)
    throw Error(Errc::BadParameter, "matrix does not preserve the form");
  return {g1, g2};
}

SpecMatrix3 alpha_bar_spec(const Specialization& sp, const SpecMatrix3& m) {
  const QuadAlgebra& k = sp.k();
  SpecMatrix3 oi = mat_inv(k, sp.O), di = mat_inv(k, sp.delta);
  SpecMatrix3 inner = spec_conj(k, mat_mul(k, mat_mul(k, oi, m), sp.O));
  return mat_mul(k, mat_mul(k, mat_mul(k, mat_mul(k, di, sp.O), inner), oi), sp.delta);
}

bool check_alpha_bar_spec(const Specialization& sp) {
  const QuadAlgebra& k = sp.k();
  if (!k.is_unit(k.add(k.t(), k.one()))) throw Error(Errc::BadParameter, "t = -1");
  return alpha_bar_spec(sp, sp.X) == mat_inv(k, sp.X) && alpha_bar_spec(sp, sp.Y) == sp.Y;
}

}  // namespace charq
