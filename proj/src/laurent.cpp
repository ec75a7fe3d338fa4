#include "charq/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "charq/error.hpp"

namespace charq {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) c_.push_back(BigInt(c));
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::trim() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<BigInt>(c_.begin() + first, c_.begin() + last);
    lo_ += static_cast<int>(first);
  }
}

BigInt LaurentPoly::coeff(int e) const {
  if (is_zero() || e < lo_ || e > high()) return 0;
  return c_[e - lo_];
}

std::vector<std::pair<int, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_), hi = std::max(high(), o.high());
  std::vector<BigInt> c(hi - lo + 1);
  for (size_t i = 0; i < c_.size(); ++i) c[lo_ - lo + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[o.lo_ - lo + i] += o.c_[i];
  lo_ = lo;
  c_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::involve() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.lo_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

std::optional<LaurentPoly> LaurentPoly::div_q_plus_1() const {
  if (is_zero()) return LaurentPoly();
  // synthetic division from the top: p = (q+1) * r
  size_t n = c_.size();
  if (n < 2) return std::nullopt;
  std::vector<BigInt> r(n - 1);
  BigInt carry = 0;
  for (size_t i = n; i-- > 1;) {
    r[i - 1] = c_[i] - carry;
    carry = r[i - 1];
  }
  if (c_[0] != carry) return std::nullopt;
  LaurentPoly out;
  out.lo_ = lo_;
  out.c_ = std::move(r);
  out.trim();
  return out;
}

bool LaurentPoly::is_signed_monomial() const {
  return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    int e = lo_ + static_cast<int>(i);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---- Localized ----

namespace {
const LaurentPoly& q_plus_1() {
  static const LaurentPoly p = LaurentPoly::q() + LaurentPoly(1);
  return p;
}
LaurentPoly times_qp1(const LaurentPoly& p, int k) {
  return k == 0 ? p : p * q_plus_1().pow(static_cast<unsigned>(k));
}
}  // namespace

Localized::Localized(LaurentPoly n, int k) : num_(std::move(n)), k_(k) {
  if (k < 0) {
    num_ = times_qp1(num_, -k);
    k_ = 0;
  }
  if (num_.is_zero()) k_ = 0;
}

Localized operator+(const Localized& a, const Localized& b) {
  int k = std::max(a.k_, b.k_);
  return Localized(times_qp1(a.num_, k - a.k_) + times_qp1(b.num_, k - b.k_), k);
}

Localized operator-(const Localized& a, const Localized& b) { return a + (-b); }

Localized operator*(const Localized& a, const Localized& b) {
  return Localized(a.num_ * b.num_, a.k_ + b.k_);
}

bool operator==(const Localized& a, const Localized& b) {
  if (a.k_ == b.k_) return a.num_ == b.num_;
  return times_qp1(a.num_, b.k_) == times_qp1(b.num_, a.k_);
}

Localized Localized::involve() const {
  // (q^-1 + 1)^k = q^-k (q+1)^k
  return Localized(num_.involve().shift(k_), k_);
}

Localized Localized::normalized() const {
  Localized r = *this;
  while (r.k_ > 0) {
    auto d = r.num_.div_q_plus_1();
    if (!d) break;
    r.num_ = std::move(*d);
    --r.k_;
  }
  return r;
}

namespace {
// num = core * (q+1)^m with core not divisible by q+1
std::pair<LaurentPoly, int> strip_qp1(LaurentPoly num) {
  int m = 0;
  if (num.is_zero()) return {num, 0};
  for (;;) {
    auto d = num.div_q_plus_1();
    if (!d) break;
    num = std::move(*d);
    ++m;
  }
  return {num, m};
}
}  // namespace

bool Localized::is_unit() const { return strip_qp1(num_).first.is_signed_monomial(); }

Localized Localized::inverse() const {
  auto [core, m] = strip_qp1(num_);
  if (!core.is_signed_monomial()) throw Error(Errc::NotAUnit, str());
  // value = c q^a (q+1)^(m-k), c = +-1
  LaurentPoly inv = LaurentPoly::monomial(core.coeff(core.low()), -core.low());
  return Localized(inv, m - k_);
}

std::optional<LaurentPoly> Localized::as_laurent() const {
  Localized n = normalized();
  if (n.k_ != 0) return std::nullopt;
  return n.num_;
}

std::string Localized::str() const {
  Localized n = normalized();
  if (n.k_ == 0) return n.num_.str();
  std::string d = n.k_ == 1 ? "(q + 1)" : "(q + 1)^" + std::to_string(n.k_);
  return "(" + n.num_.str() + ")/" + d;
}

RingMatrix3 involve(const RingMatrix3& m) {
  RingMatrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = m.a[i].involve();
  return r;
}

RingMatrix3 inverse(const RingMatrix3& m) {
  Localized dinv = m.det().inverse();
  return dinv * m.adjugate();
}

RingVector3 operator*(const RingMatrix3& m, const RingVector3& v) {
  RingVector3 r;
  for (int i = 0; i < 3; ++i) r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

RingMatrix3 from_laurent(const Mat3<LaurentPoly>& m) {
  RingMatrix3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = Localized(m.a[i]);
  return r;
}

std::string str(const RingMatrix3& m) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

}  // namespace charq
