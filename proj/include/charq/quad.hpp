#pragma once
#include <string>
#include <utility>

#include "charq/gf.hpp"

namespace charq {

/// a + b*T in k0[T]/(T^2 - sT + 1).
struct QElt {
  FiniteField::Elt a = 0, b = 0;
  friend bool operator==(const QElt&, const QElt&) = default;
};

/// The quadratic k0-algebra k = k0[T]/(T^2 - sT + 1) with involution T -> s - T.
/// T is the distinguished root t; its conjugate is t^-1.
class QuadAlgebra {
 public:
  using Elt = QElt;

  QuadAlgebra(FieldPtr base, FiniteField::Elt s);

  const FiniteField& base() const { return *base_; }
  const FieldPtr& base_ptr() const { return base_; }
  FiniteField::Elt s() const { return s_; }
  QuadKind kind() const { return kind_; }

  Elt zero() const { return {}; }
  Elt one() const { return {1, 0}; }
  Elt t() const { return {0, 1}; }
  Elt from_base(FiniteField::Elt x) const { return {x, 0}; }

  Elt add(Elt x, Elt y) const { return {base_->add(x.a, y.a), base_->add(x.b, y.b)}; }
  Elt sub(Elt x, Elt y) const { return {base_->sub(x.a, y.a), base_->sub(x.b, y.b)}; }
  Elt neg(Elt x) const { return {base_->neg(x.a), base_->neg(x.b)}; }
  Elt mul(Elt x, Elt y) const;
  /// Involution a + bT -> (a + bs) - bT.
  Elt conj(Elt x) const;
  /// x * conj(x), an element of k0.
  FiniteField::Elt norm(Elt x) const;
  bool is_unit(Elt x) const { return norm(x) != 0; }
  /// Throws NotAUnit.
  Elt inv(Elt x) const;
  Elt pow(Elt x, long long e) const;
  /// Exponent of the unit group.
  u64 unit_exponent() const;
  /// Multiplicative order of a unit.
  u64 order(Elt x) const;

  /// Split: the root t0 in k0 with T -> (t0, 1/t0). Ramified: the double root.
  FiniteField::Elt base_root() const;
  /// Split only: coordinates under k = k0 x k0.
  std::pair<FiniteField::Elt, FiniteField::Elt> split(Elt x) const;
  /// Index a + |k0| * b; a bijection onto [0, |k0|^2).
  u64 index(Elt x) const { return x.a + base_->order() * x.b; }

  std::string str(Elt x) const;

 private:
  FieldPtr base_;
  FiniteField::Elt s_;
  QuadKind kind_;
  FiniteField::Elt root_ = 0;
};

/// Inert case: the root of T^2 - sT + 1 in GF(|k0|^2) with the smaller discrete log.
FiniteField::Elt inert_root_in(const QuadAlgebra& k, const FiniteField& big);
/// a + bT -> a + b * root, through the Conway subfield embedding.
FiniteField::Elt to_big_field(const QuadAlgebra& k, const FiniteField& big, FiniteField::Elt root, QElt x);

}  // namespace charq
