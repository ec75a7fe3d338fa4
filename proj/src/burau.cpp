#include "charq/burau.hpp"

#include <cstdlib>
#include <sstream>

#include "charq/error.hpp"

namespace charq {

namespace {

// token "<name>" or "<name>^<int>"
std::pair<std::string, int> split_power(const std::string& tok) {
  auto hat = tok.find('^');
  if (hat == std::string::npos) return {tok, 1};
  std::string e = tok.substr(hat + 1);
  char* end = nullptr;
  long v = std::strtol(e.c_str(), &end, 10);
  if (e.empty() || *end != '\0') throw Error(Errc::Parse, "bad exponent in '" + tok + "'");
  return {tok.substr(0, hat), static_cast<int>(v)};
}

void push_power(std::vector<int>& out, int letter, int e) {
  for (int i = 0; i < std::abs(e); ++i) out.push_back(e > 0 ? letter : -letter);
}

}  // namespace

// ---- BraidWord ----

BraidWord BraidWord::parse(const std::string& text) {
  BraidWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto [name, e] = split_power(tok);
    if (name.size() != 2 || name[0] != 's' || name[1] < '1' || name[1] > '3')
      throw Error(Errc::Parse, "unknown braid letter '" + tok + "'");
    push_power(w.letters, name[1] - '0', e);
  }
  return w;
}

int BraidWord::word_length() const {
  int n = 0;
  for (int l : letters) n += l > 0 ? 1 : -1;
  return n;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

std::string BraidWord::str() const {
  std::string s;
  for (int l : letters) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(std::abs(l)) + (l < 0 ? "^-1" : "");
  }
  return s;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

// ---- FreeWord ----

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int l : letters) {
    if (!w_.empty() && w_.back() == -l)
      w_.pop_back();
    else
      w_.push_back(l);
  }
}

FreeWord FreeWord::parse(const std::string& text) {
  std::vector<int> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto [name, e] = split_power(tok);
    if (name == "1") continue;
    if (name == "x")
      push_power(letters, 1, e);
    else if (name == "y")
      push_power(letters, 2, e);
    else
      throw Error(Errc::Parse, "unknown letter '" + tok + "'");
  }
  return FreeWord(letters);
}

FreeWord FreeWord::inverse() const {
  std::vector<int> r;
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) r.push_back(-*it);
  return FreeWord(r);
}

FreeWord FreeWord::pow(int n) const {
  FreeWord base = n < 0 ? inverse() : *this, r;
  for (int i = 0; i < std::abs(n); ++i) r = r * base;
  return r;
}

std::array<long long, 2> FreeWord::abelianize() const {
  std::array<long long, 2> v{0, 0};
  for (int l : w_) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

std::string FreeWord::str() const {
  if (w_.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w_.size()) {
    size_t j = i;
    while (j < w_.size() && w_[j] == w_[i]) ++j;
    int e = static_cast<int>(j - i) * (w_[i] > 0 ? 1 : -1);
    if (!s.empty()) s += ' ';
    s += std::abs(w_[i]) == 1 ? "x" : "y";
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<int> l = a.w_;
  l.insert(l.end(), b.w_.begin(), b.w_.end());
  return FreeWord(l);
}

// ---- FreeAut ----

FreeWord FreeAut::apply(const FreeWord& w) const {
  FreeWord xi = x_image.inverse(), yi = y_image.inverse();
  return w.eval(FreeWord(), x_image, xi, y_image, yi, [](const FreeWord& a, const FreeWord& b) { return a * b; });
}

FreeAut FreeAut::compose(const FreeAut& other) const { return {apply(other.x_image), apply(other.y_image)}; }

std::string FreeAut::str() const { return "(x, y) -> (" + x_image.str() + ", " + y_image.str() + ")"; }

FreeAut xi_letter(int letter) {
  const FreeWord x = FreeWord::x(), y = FreeWord::y(), X = x.inverse(), Y = y.inverse();
  switch (letter) {
    case 1: return {x, y * X};
    case -1: return {x, y * x};
    case 2: return {y, y * X * y};
    case -2: return {x * Y * x, x};
    case 3: return {x, X * y};
    case -3: return {x, x * y};
    default: throw Error(Errc::BadParameter, "braid letter out of range");
  }
}

FreeAut xi(const BraidWord& b) {
  FreeAut r;
  for (int l : b.letters) r = r.compose(xi_letter(l));
  return r;
}

FreeWord xi_apply(const BraidWord& b, const FreeWord& w) {
  FreeWord r = w;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r = xi_letter(*it).apply(r);
  return r;
}

// ---- Burau constants ----

namespace {

BurauData make_burau() {
  using L = LaurentPoly;
  const L q = L::q(), qi = L::q(-1), one(1), zero(0);
  auto M = [](std::initializer_list<std::initializer_list<L>> rows) {
    Mat3<L> m;
    int i = 0;
    for (const auto& r : rows) {
      int j = 0;
      for (const auto& x : r) m(i, j++) = x;
      ++i;
    }
    return from_laurent(m);
  };
  BurauData b;
  b.rho[0] = M({{-q, one, zero}, {zero, one, zero}, {zero, zero, one}});
  b.rho[1] = M({{one, zero, zero}, {q, -q, one}, {zero, zero, one}});
  b.rho[2] = M({{one, zero, zero}, {zero, one, zero}, {zero, q, -q}});
  b.S2 = b.rho[1];
  b.X = b.rho[0] * inverse(b.rho[2]);
  b.Y = b.S2 * b.X * inverse(b.S2);
  const L diag = q + L(2) + qi;  // (q+1)^2 / q
  const L off = -q - one, offbar = -qi - one;
  b.H = M({{diag, off, zero}, {offbar, diag, off}, {zero, offbar, diag}});
  b.v1 = {Localized(1), Localized(q + one), Localized(q)};
  b.v2 = {Localized(1), Localized(0), Localized(0)};
  b.v3 = {Localized(0), Localized(0), Localized(1)};
  for (int i = 0; i < 3; ++i) {
    b.O(i, 0) = b.v1[i];
    b.O(i, 1) = b.v2[i];
    b.O(i, 2) = b.v3[i];
  }
  const L r = q + qi;
  b.D = M({{r * r + L(2) * r, zero, zero}, {zero, diag, zero}, {zero, zero, diag}});
  const L qi2 = L::q(-2), qi3 = L::q(-3);
  b.delta = M({{qi, -qi2, zero}, {zero, -qi2, zero}, {zero, -qi2, qi3}});
  return b;
}

}  // namespace

const BurauData& burau() {
  static const BurauData data = make_burau();
  return data;
}

RingMatrix3 eval_braid(const BraidWord& w) {
  const auto& b = burau();
  static const std::array<RingMatrix3, 3> inv = {inverse(b.rho[0]), inverse(b.rho[1]), inverse(b.rho[2])};
  RingMatrix3 r = RingMatrix3::identity();
  for (int l : w.letters) r = r * (l > 0 ? b.rho[l - 1] : inv[-l - 1]);
  return r;
}

RingMatrix3 eval_fword(const FreeWord& w) {
  const auto& b = burau();
  static const RingMatrix3 xi = inverse(b.X), yi = inverse(b.Y);
  return w.eval(RingMatrix3::identity(), b.X, xi, b.Y, yi,
                [](const RingMatrix3& a, const RingMatrix3& c) { return a * c; });
}

RingMatrix3 alpha_bar(const RingMatrix3& m) {
  const auto& b = burau();
  static const RingMatrix3 oi = inverse(b.O), di = inverse(b.delta);
  return di * b.O * involve(oi * m * b.O) * oi * b.delta;
}

LaurentPoly trace_ad(const FreeWord& w) {
  RingMatrix3 m = eval_fword(w);
  Localized t = m.trace() * inverse(m).trace() - Localized(1);
  auto l = t.as_laurent();
  if (!l) throw Error(Errc::NotAUnit, "trace left the Laurent ring");
  return *l;
}

LaurentPoly trace_ad_explicit(const FreeWord& w) {
  RingMatrix3 m = eval_fword(w), mi = inverse(m);
  Localized total(0);
  // off-diagonal units E_ij: coefficient of E_ij in M E_ij M^-1 is its (i,j) entry
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      RingMatrix3 e;
      e(i, j) = Localized(1);
      total += (m * e * mi)(i, j);
    }
  // E11 - E22 has coordinate c11 on itself; E22 - E33 has coordinate -c33
  RingMatrix3 h1, h2;
  h1(0, 0) = Localized(1);
  h1(1, 1) = Localized(-1);
  h2(1, 1) = Localized(1);
  h2(2, 2) = Localized(-1);
  total += (m * h1 * mi)(0, 0);
  total -= (m * h2 * mi)(2, 2);
  auto l = total.as_laurent();
  if (!l) throw Error(Errc::NotAUnit, "trace left the Laurent ring");
  return *l;
}

}  // namespace charq
