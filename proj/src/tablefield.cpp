#include "charq/error.hpp"
#include "charq/mgroup.hpp"

namespace charq {

namespace {

template <class AddFn, class MulFn, class NegFn>
void fill_tables(unsigned n, std::vector<TableField::Elt>& add, std::vector<TableField::Elt>& mul,
                 std::vector<TableField::Elt>& neg, std::vector<TableField::Elt>& inv, AddFn fa, MulFn fm, NegFn fn) {
  add.assign(128 * 128, 0);
  mul.assign(128 * 128, 0);
  neg.assign(128, 0);
  inv.assign(128, 0);
  for (unsigned a = 0; a < n; ++a) {
    neg[a] = static_cast<TableField::Elt>(fn(a));
    for (unsigned b = 0; b < n; ++b) {
      add[(a << 7) | b] = static_cast<TableField::Elt>(fa(a, b));
      unsigned m = fm(a, b);
      mul[(a << 7) | b] = static_cast<TableField::Elt>(m);
      if (m == 1) inv[a] = static_cast<TableField::Elt>(b);
    }
  }
}

}  // namespace

TableField TableField::from_field(const FiniteField& f) {
  if (f.order() > kMaxSize) throw Error(Errc::Unsupported, "closure fields are limited to order 128");
  TableField t;
  t.n_ = static_cast<unsigned>(f.order());
  fill_tables(
      t.n_, t.add_, t.mul_, t.neg_, t.inv_, [&](unsigned a, unsigned b) { return f.add(a, b); },
      [&](unsigned a, unsigned b) { return f.mul(a, b); }, [&](unsigned a) { return f.neg(a); });
  return t;
}

TableField TableField::from_inert(const QuadAlgebra& k) {
  if (k.kind() != QuadKind::Inert) throw Error(Errc::WrongKind, "from_inert needs an inert algebra");
  u64 Q = k.base().order();
  if (Q * Q > kMaxSize) throw Error(Errc::Unsupported, "closure fields are limited to order 128");
  TableField t;
  t.n_ = static_cast<unsigned>(Q * Q);
  auto el = [&](unsigned i) { return QElt{static_cast<FiniteField::Elt>(i % Q), static_cast<FiniteField::Elt>(i / Q)}; };
  auto idx = [&](QElt x) { return static_cast<unsigned>(k.index(x)); };
  fill_tables(
      t.n_, t.add_, t.mul_, t.neg_, t.inv_, [&](unsigned a, unsigned b) { return idx(k.add(el(a), el(b))); },
      [&](unsigned a, unsigned b) { return idx(k.mul(el(a), el(b))); }, [&](unsigned a) { return idx(k.neg(el(a))); });
  return t;
}

TableField::Elt TableField::inv(Elt a) const {
  if (a == 0) throw Error(Errc::ZeroElement, "inverse of 0");
  return inv_[a];
}

}  // namespace charq
