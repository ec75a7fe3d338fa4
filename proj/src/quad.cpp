#include "charq/quad.hpp"

#include <numeric>

#include "charq/error.hpp"

namespace charq {

QuadAlgebra::QuadAlgebra(FieldPtr base, FiniteField::Elt s)
    : base_(std::move(base)), s_(s), kind_(classify_quadratic(*base_, s)) {
  const FiniteField& k = *base_;
  if (kind_ == QuadKind::Split) {
    for (FiniteField::Elt x = 1; x < k.order(); ++x) {
      if (k.add(k.sub(k.mul(x, x), k.mul(s, x)), k.one()) == 0) {
        root_ = x;
        break;
      }
    }
  } else if (kind_ == QuadKind::Ramified) {
    root_ = k.p() == 2 ? k.one() : k.div(s, k.from_int(2));
  }
}

QElt QuadAlgebra::mul(Elt x, Elt y) const {
  const FiniteField& k = *base_;
  // (a+bT)(c+dT) = (ac - bd) + (ad + bc + bds) T
  auto bd = k.mul(x.b, y.b);
  return {k.sub(k.mul(x.a, y.a), bd), k.add(k.add(k.mul(x.a, y.b), k.mul(x.b, y.a)), k.mul(bd, s_))};
}

QElt QuadAlgebra::conj(Elt x) const {
  const FiniteField& k = *base_;
  return {k.add(x.a, k.mul(x.b, s_)), k.neg(x.b)};
}

FiniteField::Elt QuadAlgebra::norm(Elt x) const {
  const FiniteField& k = *base_;
  return k.add(k.add(k.mul(x.a, x.a), k.mul(s_, k.mul(x.a, x.b))), k.mul(x.b, x.b));
}

QElt QuadAlgebra::inv(Elt x) const {
  auto n = norm(x);
  if (n == 0) throw Error(Errc::NotAUnit, str(x) + " is not invertible");
  auto ni = base_->inv(n);
  Elt c = conj(x);
  return {base_->mul(c.a, ni), base_->mul(c.b, ni)};
}

QElt QuadAlgebra::pow(Elt x, long long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Elt r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

u64 QuadAlgebra::unit_exponent() const {
  u64 q = base_->order();
  switch (kind_) {
    case QuadKind::Split: return q - 1;
    case QuadKind::Inert: return q * q - 1;
    case QuadKind::Ramified: return (q - 1) * base_->p();
  }
  return 0;
}

u64 QuadAlgebra::order(Elt x) const {
  if (!is_unit(x)) throw Error(Errc::ZeroElement, "order of a non-unit");
  u64 n = unit_exponent();
  for (auto [l, e] : factor(n)) {
    for (int i = 0; i < e && pow(x, static_cast<long long>(n / l)) == one(); ++i) n /= l;
  }
  return n;
}

FiniteField::Elt QuadAlgebra::base_root() const {
  if (kind_ == QuadKind::Inert) throw Error(Errc::WrongKind, "inert algebra has no root in k0");
  return root_;
}

std::pair<FiniteField::Elt, FiniteField::Elt> QuadAlgebra::split(Elt x) const {
  if (kind_ != QuadKind::Split) throw Error(Errc::WrongKind, "split coordinates need a split algebra");
  const FiniteField& k = *base_;
  return {k.add(x.a, k.mul(x.b, root_)), k.add(x.a, k.mul(x.b, k.inv(root_)))};
}

std::string QuadAlgebra::str(Elt x) const {
  if (x.b == 0) return base_->str(x.a);
  std::string tb = x.b == 1 ? "T" : base_->str(x.b) + "*T";
  if (x.a == 0) return tb;
  return base_->str(x.a) + " + " + tb;
}

FiniteField::Elt inert_root_in(const QuadAlgebra& k, const FiniteField& big) {
  const FiniteField& k0 = k.base();
  if (big.p() != k0.p() || big.d() != 2 * k0.d()) throw Error(Errc::BadParameter, "not the quadratic extension");
  auto s = embed(k0, big, k.s());
  FiniteField::Elt best = 0;
  bool found = false;
  for (u64 l = 0; l + 1 < big.order(); ++l) {
    auto x = big.z_pow(static_cast<long long>(l));
    if (big.add(big.sub(big.mul(x, x), big.mul(s, x)), big.one()) == 0) {
      best = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error(Errc::WrongKind, "T^2 - sT + 1 has no root in the given field");
  return best;
}

FiniteField::Elt to_big_field(const QuadAlgebra& k, const FiniteField& big, FiniteField::Elt root, QElt x) {
  const FiniteField& k0 = k.base();
  return big.add(embed(k0, big, x.a), big.mul(embed(k0, big, x.b), root));
}

}  // namespace charq
