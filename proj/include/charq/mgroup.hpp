#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charq/speckit.hpp"

namespace charq {

/// Field of order <= 128 with dense add/mul tables; the coefficient field for closures.
class TableField {
 public:
  using Elt = std::uint8_t;
  static constexpr unsigned kMaxSize = 128;

  /// Element indices agree with FiniteField's.
  static TableField from_field(const FiniteField& f);
  /// Inert k = k0[T]/(T^2 - sT + 1) as a field; index of a + bT is a + |k0| b.
  static TableField from_inert(const QuadAlgebra& k);

  unsigned size() const { return n_; }
  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt add(Elt a, Elt b) const { return add_[(a << 7) | b]; }
  Elt mul(Elt a, Elt b) const { return mul_[(a << 7) | b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  /// Throws ZeroElement.
  Elt inv(Elt a) const;
  std::string str(Elt a) const { return std::to_string(a); }

 private:
  unsigned n_ = 0;
  std::vector<Elt> add_, mul_, neg_, inv_;
};

using PMat = std::array<std::uint8_t, 9>;

/// 9 entries of 7 bits each.
inline std::uint64_t pack(const PMat& m) {
  std::uint64_t k = 0;
  for (int i = 8; i >= 0; --i) k = (k << 7) | m[i];
  return k;
}
inline PMat unpack(std::uint64_t k) {
  PMat m;
  for (int i = 0; i < 9; ++i) {
    m[i] = static_cast<std::uint8_t>(k & 127);
    k >>= 7;
  }
  return m;
}

/// Default closure cap, overridable through BURAU_CLOSURE_CAP.
std::uint64_t default_closure_cap();

/// Exact |<gens>| by breadth-first closure. Throws CapExceeded past `cap`.
std::uint64_t closure_order(const TableField& f, const std::vector<PMat>& gens, std::uint64_t cap,
                            unsigned threads = 1);

/// All elements of <gens> in BFS order (identity first); for small groups and tests.
std::vector<PMat> closure_elements(const TableField& f, const std::vector<PMat>& gens, std::uint64_t cap);

enum class GroupKind { SL3, SU3, GL3, U3, PSL3, PSU3 };
std::uint64_t target_order(GroupKind kind, std::uint64_t q);

/// Least n >= 1 with M^n = 1; throws CapExceeded after `cap` steps.
std::uint64_t element_order_mat(const TableField& f, const PMat& m, std::uint64_t cap = 1u << 20);

/// Lower bound for |<gens>| from a stabilizer chain along e1, e2, e3.
struct ChainBound {
  std::uint64_t bound = 0;
  std::array<std::uint64_t, 3> orbits{};
  unsigned stabilizer_gens = 0;  // random stabilizer elements per level in the last round
};
/// Stops once the bound reaches `target` (or after the last round).
ChainBound chain_lower_bound(const TableField& f, const std::vector<PMat>& gens, std::uint64_t target,
                             std::uint64_t seed = 0x5eed);

/// m with m A1 m^-1 = B1 and m A2 m^-1 = B2, or nullopt. Throws Inconclusive when the
/// solution space of the linear system has dimension above 2.
std::optional<PMat> simultaneous_conjugacy(const TableField& f, const PMat& a1, const PMat& a2, const PMat& b1,
                                           const PMat& b2);

/// Coefficient field and the map SpecMatrix3 -> PMat used for the closure:
/// split: the first component over k0; inert: k itself.
struct ClosureModel {
  TableField field;
  bool split = true;
  PMat convert(const Specialization& sp, const SpecMatrix3& m) const;
};
ClosureModel closure_model(const Specialization& sp);

enum class Verdict { CharacteristicQuotient, NotSurjective, WitnessFailure, Inconclusive };
const char* verdict_name(Verdict v);

struct BraidWitness {
  int generator = 0;  // i in s_i
  std::string word;   // "x" or "y"
  std::string image;  // xi(s_i)(w)
  bool holds = false;
};

struct Certificate {
  u64 p = 0;
  unsigned d = 0;
  std::string s;
  Target target = Target::SL3;
  std::string group;  // e.g. "SL3(7)"
  u64 target_order = 0;
  u64 order = 0;            // exact order, or the proven lower bound
  std::string order_method;  // "bfs" or "orbit-chain"
  bool surjective = false;
  std::vector<BraidWitness> braid_witnesses;
  bool alpha_ok = false;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

struct CertifyOptions {
  u64 cap = default_closure_cap();
  unsigned threads = 1;
  bool chain_fallback = true;
};

/// Throws WrongKind unless the specialization targets SL3 or SU3.
Certificate certify_characteristic(const FieldPtr& k0, FiniteField::Elt s, const CertifyOptions& opts = {});

}  // namespace charq
