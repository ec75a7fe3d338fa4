#pragma once
#include <array>
#include <string>
#include <vector>

#include "charq/gf.hpp"

namespace charq {

/// Fricke trace coordinates (tr A, tr B, tr AB).
struct TraceTriple {
  FiniteField::Elt x = 0, y = 0, z = 0;
  friend auto operator<=>(const TraceTriple&, const TraceTriple&) = default;
};

/// r: (x, y, xy - z), s: (y, x, z), t: (x, z, y). Throws BadParameter for other letters.
TraceTriple apply_generator(const FiniteField& f, char g, TraceTriple v);
/// x^2 + y^2 + z^2 - xyz = 4.
bool on_fricke_surface(const FiniteField& f, TraceTriple v);
/// Least member of the orbit under negating two coordinates, ordered by element index.
TraceTriple canonical(const FiniteField& f, TraceTriple v);

/// Canonical representatives of the sign-change orbits fixed by r, s and t, over all q^3 triples.
/// Throws CapExceeded when q > cap.
std::vector<TraceTriple> scan_fixed_orbits(const FiniteField& f, unsigned threads = 1, u64 cap = 1024);

using Mat2 = std::array<FiniteField::Elt, 4>;

struct FixedOrbit {
  TraceTriple rep;
  bool on_surface = false;
  std::string branch;  // "reducible" or "klein-four"
  Mat2 witness_a{}, witness_b{};
  u64 image_order = 0;  // order of <A, B> in PSL2 for the klein-four branch
};

struct CharvarReport {
  u64 q = 0;
  std::vector<FixedOrbit> orbits;
  bool expected_orbits = false;  // exactly the orbits of (0,0,0) and (2,2,2)
  std::string verdict;           // "NoCharacteristicPSL2Quotient" or "Unexpected"
};

CharvarReport classify_fixed(const FiniteField& f, unsigned threads = 1);

/// Order of <gens> in PSL2(F), by closure of the images mod {1, -1}.
u64 psl2_image_order(const FiniteField& f, const std::vector<Mat2>& gens);

}  // namespace charq
