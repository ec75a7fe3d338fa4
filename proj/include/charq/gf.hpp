#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charq/numtheory.hpp"

namespace charq {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^d). An element is the integer sum c_i p^i of its coefficient vector
/// modulo the defining polynomial; 0 and 1 are the field's zero and one.
class FiniteField {
 public:
  using Elt = std::uint32_t;
  static constexpr u64 kMaxOrder = 1u << 16;

  /// Cached instance. Uses the Conway polynomial when the shipped table has one.
  static FieldPtr get(u64 p, unsigned d);
  /// Same, from the field order.
  static FieldPtr of_order(u64 q);
  /// Field with an explicit monic modulus c0..cd (checked irreducible).
  static FieldPtr with_modulus(u64 p, std::vector<std::uint32_t> modulus);

  u64 p() const { return p_; }
  unsigned d() const { return d_; }
  u64 order() const { return q_; }
  bool is_conway() const { return conway_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Non-empty when Z(q) does not follow the GAP normalization.
  const std::string& warning() const { return warning_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  /// The designated generator Z of the multiplicative group.
  Elt gen() const { return exp_[1 % (q_ - 1)]; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    u64 s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  /// Throws Error(ZeroElement) for 0.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long long e) const;
  Elt from_int(long long n) const;
  /// Z^k for any integer k.
  Elt z_pow(long long k) const;
  /// Discrete log relative to gen(); throws for 0.
  u64 log(Elt a) const;
  bool is_unit(Elt a) const { return a != 0; }
  bool is_square(Elt a) const;
  Elt frobenius(Elt a) const { return pow(a, static_cast<long long>(p_)); }

  std::vector<std::uint32_t> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// "0" or "Z(q)^k".
  std::string str(Elt a) const;

 private:
  FiniteField(u64 p, unsigned d, std::vector<std::uint32_t> modulus, bool conway);
  Elt add_digits(Elt a, Elt b) const;

  u64 p_;
  unsigned d_;
  u64 q_;
  bool conway_;
  std::vector<std::uint32_t> modulus_;
  std::string warning_;
  std::vector<Elt> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elt> neg_;
  std::vector<std::uint16_t> add_table_;
};

/// Conway polynomial c0..cd from the shipped table, empty if absent.
std::vector<std::uint32_t> conway_polynomial(u64 p, unsigned d);

/// Image of x under the subfield inclusion GF(p^a) -> GF(p^b), a | b, both
/// Conway models: Z_small maps to Z_big^((|big|-1)/(|small|-1)).
FiniteField::Elt embed(const FiniteField& small, const FiniteField& big, FiniteField::Elt x);
/// Inverse of embed; throws BadParameter when y is outside the subfield.
FiniteField::Elt restrict_to(const FiniteField& big, const FiniteField& small, FiniteField::Elt y);

/// Least n >= 1 with a^n = 1.
u64 element_order(const FiniteField& k, FiniteField::Elt a);
/// Sum of a^(2^i), i < d, as 0 or 1; characteristic 2 only.
unsigned absolute_trace(const FiniteField& k, FiniteField::Elt a);

enum class QuadKind { Split, Inert, Ramified };
const char* kind_name(QuadKind k);

/// Behaviour of T^2 - sT + 1 over k.
QuadKind classify_quadratic(const FiniteField& k, FiniteField::Elt s);
/// Same question answered by searching k for roots.
QuadKind classify_quadratic_bruteforce(const FiniteField& k, FiniteField::Elt s);

/// Prime powers q with 2 <= q <= bound, ascending.
std::vector<u64> prime_powers_upto(u64 bound);

}  // namespace charq
