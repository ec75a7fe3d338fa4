#pragma once
#include <array>
#include <string>
#include <vector>

#include "charq/laurent.hpp"

namespace charq {

/// Word in s1, s2, s3 and inverses; letter +-i stands for s_i^{+-1}.
struct BraidWord {
  std::vector<int> letters;

  /// Grammar: whitespace-separated `s1`, `s3^-1`, `s2^3`.
  static BraidWord parse(const std::string& text);
  static BraidWord gen(int i) { return BraidWord{{i}}; }
  /// Exponent sum.
  int word_length() const;
  BraidWord inverse() const;
  std::string str() const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Freely reduced word in x = 1, y = 2 and their inverses (negated).
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters.
  explicit FreeWord(const std::vector<int>& letters);
  static FreeWord x() { return FreeWord({1}); }
  static FreeWord y() { return FreeWord({2}); }
  /// Grammar: whitespace-separated `x`, `y^-2`; `1` or empty is the identity.
  static FreeWord parse(const std::string& text);

  const std::vector<int>& letters() const { return w_; }
  bool empty() const { return w_.empty(); }
  size_t size() const { return w_.size(); }
  FreeWord inverse() const;
  FreeWord pow(int n) const;
  /// Exponent sums of x and y.
  std::array<long long, 2> abelianize() const;
  std::string str() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) { return a.w_ <=> b.w_; }

  /// Evaluates the word in any group given images of x, y and their inverses.
  template <class G, class Mul>
  G eval(const G& one, const G& xg, const G& xinv, const G& yg, const G& yinv, Mul mul) const {
    G r = one;
    for (int l : w_) r = mul(r, l == 1 ? xg : l == -1 ? xinv : l == 2 ? yg : yinv);
    return r;
  }

 private:
  std::vector<int> w_;
};

/// Automorphism of F = <x, y>, given by the images of x and y.
struct FreeAut {
  FreeWord x_image = FreeWord::x();
  FreeWord y_image = FreeWord::y();

  static FreeAut identity() { return {}; }
  FreeWord apply(const FreeWord& w) const;
  /// (this o other)(w) = this(other(w)).
  FreeAut compose(const FreeAut& other) const;
  std::string str() const;
  friend bool operator==(const FreeAut&, const FreeAut&) = default;
};

/// xi(s_i^{+-1}) as an automorphism of F; letter as in BraidWord.
FreeAut xi_letter(int letter);
/// xi(b) = xi(b_1) o xi(b_2) o ...
FreeAut xi(const BraidWord& b);
/// xi(b)(w), reduced.
FreeWord xi_apply(const BraidWord& b, const FreeWord& w);

/// Symbolic constants of the 3-dimensional reduced Burau representation of B4.
struct BurauData {
  std::array<RingMatrix3, 3> rho;  // images of s1, s2, s3
  RingMatrix3 X, Y, S2, H, O, D, delta;
  RingVector3 v1, v2, v3;
};

const BurauData& burau();

RingMatrix3 eval_braid(const BraidWord& w);
RingMatrix3 eval_fword(const FreeWord& w);

/// delta^-1 O conj(O^-1 M O) O^-1 delta.
RingMatrix3 alpha_bar(const RingMatrix3& m);

/// Trace of Ad(rho(w)) on trace-zero matrices, as tr(M) tr(M^-1) - 1.
LaurentPoly trace_ad(const FreeWord& w);
/// Same quantity from the explicit 8x8 matrix of M A M^-1 on a basis of sl3.
LaurentPoly trace_ad_explicit(const FreeWord& w);

}  // namespace charq
