#pragma once
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charq {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1], stored densely from the lowest nonzero exponent.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& c);

  static LaurentPoly monomial(const BigInt& c, int e);
  static LaurentPoly q(int e = 1) { return monomial(1, e); }
  static LaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  bool is_zero() const { return c_.empty(); }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int e) const;

  /// Sorted (exponent, coefficient) pairs, ascending exponent; the serialized form.
  std::vector<std::pair<int, BigInt>> terms() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }

  LaurentPoly pow(unsigned n) const;
  /// q -> q^-1.
  LaurentPoly involve() const;
  /// Multiply by q^k.
  LaurentPoly shift(int k) const;
  /// Exact quotient by (q+1), if it exists.
  std::optional<LaurentPoly> div_q_plus_1() const;
  /// +-q^a ?
  bool is_signed_monomial() const;

  /// Rendering such as `3*q^2 - q + 5*q^-1`.
  std::string str() const;

 private:
  int lo_ = 0;
  std::vector<BigInt> c_;
  void trim();
};

/// numerator / (q+1)^denom_power, an element of R[1/(q+1)].
class Localized {
 public:
  Localized() = default;
  Localized(long long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Localized(LaurentPoly n, int k = 0);  // NOLINT(google-explicit-constructor)

  const LaurentPoly& numerator() const { return num_; }
  int denom_power() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Localized operator+(const Localized& a, const Localized& b);
  friend Localized operator-(const Localized& a, const Localized& b);
  friend Localized operator*(const Localized& a, const Localized& b);
  Localized operator-() const { return Localized(-num_, k_); }
  Localized& operator+=(const Localized& o) { return *this = *this + o; }
  Localized& operator-=(const Localized& o) { return *this = *this - o; }
  Localized& operator*=(const Localized& o) { return *this = *this * o; }
  friend bool operator==(const Localized& a, const Localized& b);

  Localized involve() const;
  /// Divides out common (q+1) factors; same value.
  Localized normalized() const;
  /// Units of R[1/(q+1)] are +-q^a (q+1)^b.
  bool is_unit() const;
  /// Throws Error(NotAUnit) unless is_unit().
  Localized inverse() const;
  /// Numerator if the denominator cancels completely.
  std::optional<LaurentPoly> as_laurent() const;

  std::string str() const;

 private:
  LaurentPoly num_;
  int k_ = 0;
};

/// Row-major 3x3 matrix over any ring with value semantics.
template <class T>
struct Mat3 {
  std::array<T, 9> a{};

  T& operator()(int i, int j) { return a[3 * i + j]; }
  const T& operator()(int i, int j) const { return a[3 * i + j]; }

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat3 from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Mat3 m;
    int i = 0;
    for (const auto& r : rows) {
      int j = 0;
      for (const auto& x : r) m(i, j++) = x;
      ++i;
    }
    return m;
  }
  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T s = x(i, 0) * y(0, j);
        s += x(i, 1) * y(1, j);
        s += x(i, 2) * y(2, j);
        r(i, j) = s;
      }
    return r;
  }
  friend Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
  }
  friend Mat3 operator*(const T& c, const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = c * x.a[i];
    return r;
  }
  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  T trace() const { return a[0] + a[4] + a[8]; }
  T det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  Mat3 adjugate() const {
    const Mat3& m = *this;
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        r(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
      }
    return r;
  }
  bool is_scalar() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !((*this)(i, j) == T(0))) return false;
    return a[0] == a[4] && a[4] == a[8];
  }
};

using RingMatrix3 = Mat3<Localized>;
using RingVector3 = std::array<Localized, 3>;

RingMatrix3 involve(const RingMatrix3& m);
/// Adjugate over det; throws NotAUnit when det is not +-q^a (q+1)^b.
RingMatrix3 inverse(const RingMatrix3& m);
RingVector3 operator*(const RingMatrix3& m, const RingVector3& v);
RingMatrix3 from_laurent(const Mat3<LaurentPoly>& m);
std::string str(const RingMatrix3& m);

}  // namespace charq
