#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace charq {

/// Finite permutation group with all elements enumerated and a full Cayley table.
/// Elements are indices in breadth-first order from the identity (index 0).
class PermGroup {
 public:
  using Elt = std::uint16_t;
  static constexpr std::uint64_t kDefaultCap = 10000;

  /// First line the degree, then one generator per line in cycle notation (1-based).
  static PermGroup parse(const std::string& text, std::uint64_t cap = kDefaultCap);
  /// A bundled model by name (e.g. "A5", "PSL2_7") or a path to a group file.
  static PermGroup load(const std::string& name_or_path, std::uint64_t cap = kDefaultCap);
  static std::vector<std::string> model_names();

  size_t order() const { return perms_.size(); }
  unsigned degree() const { return degree_; }
  Elt identity() const { return 0; }
  const std::vector<Elt>& generators() const { return gens_; }

  /// Left-to-right product: (ab)(i) = b(a(i)).
  Elt mul(Elt a, Elt b) const { return table_[static_cast<size_t>(a) * perms_.size() + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  /// g x g^-1.
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt pow(Elt a, long long e) const;
  unsigned elt_order(Elt a) const { return order_[a]; }
  bool is_abelian() const;

  const std::vector<std::uint16_t>& perm(Elt a) const { return perms_[a]; }
  /// Cycle notation, 1-based; "()" for the identity.
  std::string str(Elt a) const;
  /// Throws Parse when the text is malformed or the permutation is not in the group.
  Elt parse_element(const std::string& cycles) const;

  size_t class_count() const { return class_reps_.size(); }
  unsigned class_of(Elt x) const { return class_of_[x]; }
  Elt class_rep(unsigned c) const { return class_reps_[c]; }
  size_t class_size(unsigned c) const { return class_sizes_[c]; }
  /// Some g with g x g^-1 equal to the representative of x's class.
  Elt to_rep(Elt x) const { return to_rep_[x]; }
  const std::vector<Elt>& centralizer(unsigned c) const { return centralizers_[c]; }

  /// Whether <a, b> is the whole group.
  bool generates(Elt a, Elt b) const;
  /// |<gens>|.
  size_t subgroup_order(const std::vector<Elt>& gens) const;

 private:
  unsigned degree_ = 0;
  std::vector<Elt> gens_;
  std::vector<std::vector<std::uint16_t>> perms_;
  std::vector<Elt> table_, inv_;
  std::vector<unsigned> order_;
  std::vector<unsigned> class_of_;
  std::vector<Elt> class_reps_, to_rep_;
  std::vector<size_t> class_sizes_;
  std::vector<std::vector<Elt>> centralizers_;
};

}  // namespace charq
