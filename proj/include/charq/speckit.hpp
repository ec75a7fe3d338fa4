#pragma once
#include <array>
#include <memory>
#include <string>
#include <utility>

#include "charq/burau.hpp"
#include "charq/matops.hpp"
#include "charq/quad.hpp"

namespace charq {

using SpecMatrix3 = MatOf<QuadAlgebra>;
using FieldMatrix3 = MatOf<FiniteField>;

enum class Target { SL3, SU3, NonReductive, DegenerateForm };
const char* target_name(Target t);

/// q := T.
QElt eval_at_t(const QuadAlgebra& k, const LaurentPoly& p);
/// Throws BadParameter when (T+1) is not invertible in k.
QElt eval_at_t(const QuadAlgebra& k, const Localized& x);
SpecMatrix3 eval_at_t(const QuadAlgebra& k, const RingMatrix3& m);

SpecMatrix3 spec_conj(const QuadAlgebra& k, const SpecMatrix3& m);

/// The Burau data base-changed along q + q^-1 -> s.
struct Specialization {
  std::shared_ptr<const QuadAlgebra> ext;
  std::array<SpecMatrix3, 3> rho;
  SpecMatrix3 X, Y, H, S2, O, delta;
  Target target = Target::SL3;

  const QuadAlgebra& k() const { return *ext; }
  const FiniteField& k0() const { return ext->base(); }
};

Target classify_target(const QuadAlgebra& k);
/// Throws BadParameter when s = -2.
Specialization specialize(const FieldPtr& k0, FiniteField::Elt s);

/// g^t H conj(g) == H.
bool preserves_form(const Specialization& sp, const SpecMatrix3& g);
/// det H evaluated in k.
QElt det_h(const Specialization& sp);

struct SChoice {
  FiniteField::Elt s = 0;
  std::string t_repr;       // the chosen t, e.g. "Z(49)^6"
  u64 neg_t_order = 0;      // multiplicative order of -t
  u64 required_order = 0;   // |k0| - 1 for sl3, |k0| + 1 for su3
  bool from_table = false;  // one of the four exceptional explicit choices
};

/// Parameter s for the sl3 (split) or su3 (inert) construction.
/// Throws Unsupported for sl3 with |k0| <= 5 and su3 with |k0| <= 3.
SChoice choose_s(const FieldPtr& k0, Target kind);

/// Split case: coordinates (g1, g2) of g under k = k0 x k0, after checking g1^t H1 g2 = H1.
std::pair<FieldMatrix3, FieldMatrix3> split_components(const Specialization& sp, const SpecMatrix3& g);

/// delta^-1 O conj(O^-1 M O) O^-1 delta over k.
SpecMatrix3 alpha_bar_spec(const Specialization& sp, const SpecMatrix3& m);
/// alpha_bar(X) = X^-1 and alpha_bar(Y) = Y.
bool check_alpha_bar_spec(const Specialization& sp);

/// Parses a field element of k0: an integer, `Z(q)^k` with q = |k0|, or
/// `t:Z(n)^k` meaning t + 1/t for t in GF(n) with n = |k0| or |k0|^2.
FiniteField::Elt parse_base_element(const FieldPtr& k0, const std::string& text);

}  // namespace charq
