#pragma once
#include <array>
#include <string>
#include <vector>

#include "charq/burau.hpp"
#include "charq/smallgrp.hpp"

namespace charq {

/// 2x2 integer matrix [[a, b], [c, d]].
struct SL2Mat {
  long long a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const SL2Mat&, const SL2Mat&) = default;
  long long det() const { return a * d - b * c; }
  std::string str() const;
};
SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
/// Entries reduced into [0, m).
SL2Mat reduce(const SL2Mat& x, long long m);
/// Inverse of a determinant-one matrix (entries not reduced).
SL2Mat sl2_inverse(const SL2Mat& x);

/// Induced map on Z^2; columns are the exponent vectors of the images of x and y.
SL2Mat abelianize(const FreeAut& alpha);
SL2Mat abelianize(const BraidWord& w);

struct StWords {
  BraidWord s, t;  // abelianizing to [[0,-1],[1,0]] and [[1,1],[0,1]]
};
/// Shortest braid words (length <= 8) with the standard abelianizations; throws SearchFailed.
const StWords& st_words();

/// The orbit of an Inn-class under SL2(Z) = Out+(F2) acting on the right by phi -> phi o alpha.
struct ClassAction {
  std::vector<GenPair> classes;   // Inn normal forms; index 0 is the base class
  std::vector<size_t> perm_s, perm_t;
  std::vector<size_t> parent;     // BFS tree: class i = class parent[i] moved by letter[i]
  std::vector<char> letter;       // 'S', 'T' or 0 at the root
  /// Word in S and T carrying the base class to class i.
  std::string coset_word(size_t i) const;
  SL2Mat coset_matrix(size_t i, long long modulus) const;
};

/// Throws BadParameter unless base generates; CapExceeded past `cap` classes.
ClassAction build_class_action(const PermGroup& g, GenPair base, size_t cap = 1u << 20);

enum class CongruenceVerdict { Congruence, Noncongruence, TotallyNoncongruence };
const char* verdict_name(CongruenceVerdict v);

struct CongruenceResult {
  size_t index = 0;        // orbit size = [SL2(Z) : stabilizer]
  long long level = 0;     // lcm of the cycle lengths of T
  long long modulus = 0;   // level, doubled when -I acts nontrivially
  bool minus_one_trivial = true;
  u64 sl2_order = 0;       // |SL2(Z/modulus)|
  u64 image_order = 0;     // |image of the stabilizer in SL2(Z/modulus)|
  u64 degree = 0;          // index of the congruence closure
  size_t schreier_count = 0;
  bool relations_ok = false;  // S^4 = (ST)^6 = 1 and S^2 central on the orbit
  CongruenceVerdict verdict = CongruenceVerdict::Congruence;
};

/// |SL2(Z/m)| = m^3 prod_{p | m} (1 - p^-2).
u64 sl2_order(long long m);

/// Throws LevelTooLarge when modulus^2 exceeds `cap`.
CongruenceResult congruence_degree(const ClassAction& ca, u64 cap = 1u << 25);

/// Every Inn-class orbit of a group, with the Aut-class picture alongside.
struct CongruenceSurvey {
  size_t inn_class_count = 0;
  size_t aut_class_count = 0;
  size_t inn_orbit_count = 0;  // SL2(Z)-orbits on Inn-classes
  size_t aut_orbit_count = 0;  // SL2(Z)-orbits on Aut-classes
  std::vector<GenPair> orbit_bases;
  std::vector<CongruenceResult> results;  // one per Inn-class orbit
};
CongruenceSurvey congruence_survey(const PermGroup& g, unsigned threads = 1);

}  // namespace charq
