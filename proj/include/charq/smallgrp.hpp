#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "charq/burau.hpp"
#include "charq/permgroup.hpp"

namespace charq {

using u64 = std::uint64_t;

/// Images (g1, g2) of x and y under a map F2 -> G.
struct GenPair {
  PermGroup::Elt a = 0, b = 0;
  friend auto operator<=>(const GenPair&, const GenPair&) = default;
};

enum class EpiMode { ModInn, ModAut };
const char* mode_name(EpiMode m);

struct EpiClass {
  GenPair rep;
  EpiMode mode = EpiMode::ModAut;
};

/// Every generating pair; throws CapExceeded when |G| > full_cap.
std::vector<GenPair> generating_pairs(const PermGroup& g, unsigned threads = 1, u64 full_cap = 2000);
/// Generating pairs whose first entry is a conjugacy class representative, sorted.
std::vector<GenPair> class_rep_pairs(const PermGroup& g, unsigned threads = 1);
/// |Epi(F2, G)|, from class_rep_pairs weighted by class sizes.
u64 count_generating_pairs(const PermGroup& g, const std::vector<GenPair>& rep_pairs);

/// Whether pA -> pB extends to an automorphism: the subgroup of G x G generated by
/// (a1, b1), (a2, b2) must be the graph of a map.
bool pair_isomorphic(const PermGroup& g, GenPair pa, GenPair pb);
/// Some h with h pA h^-1 = pB componentwise.
std::optional<PermGroup::Elt> pair_conjugate(const PermGroup& g, GenPair pa, GenPair pb);
/// Images under r, s, t: (a^-1, b), (b, a), (a^-1, ab).
std::array<GenPair, 3> nielsen_moves(const PermGroup& g, GenPair p);
/// The pair of phi o alpha, where phi sends (x, y) to p.
GenPair apply_aut(const PermGroup& g, const FreeAut& alpha, GenPair p);
/// Least conjugate with first entry a class representative.
GenPair inn_normal_form(const PermGroup& g, GenPair p);

/// Epimorphism classes up to Inn(G) or Aut(G), with lookup of arbitrary generating pairs.
class EpiClassifier {
 public:
  EpiClassifier(const PermGroup& g, EpiMode mode, unsigned threads = 1);
  const PermGroup& group() const { return *g_; }
  EpiMode mode() const { return mode_; }
  const std::vector<EpiClass>& classes() const { return classes_; }
  u64 pair_count() const { return pair_count_; }
  /// Index of the class of p; throws BadParameter when p does not generate.
  size_t find(GenPair p) const;

 private:
  const PermGroup* g_;
  EpiMode mode_;
  std::vector<EpiClass> classes_;
  std::map<GenPair, size_t> index_;  // every class-representative pair -> class
  u64 pair_count_ = 0;
};

std::vector<EpiClass> epi_classes(const PermGroup& g, EpiMode mode, unsigned threads = 1);

struct AutF2Analysis {
  u64 order = 0;
  u64 pair_count = 0;
  size_t inn_class_count = 0;
  size_t aut_class_count = 0;
  EpiMode mode = EpiMode::ModAut;  // classes the orbits are taken on
  size_t orbit_count = 0;
  std::vector<size_t> orbit_sizes;  // descending
  std::vector<EpiClass> fixed_classes;
};

/// Orbits of the moves r, s, t on Aut(G)-classes (or Inn(G)-classes); fixed classes are the
/// one-element orbits.
AutF2Analysis aut_f2_analysis(const PermGroup& g, unsigned threads = 1, EpiMode mode = EpiMode::ModAut);

}  // namespace charq
