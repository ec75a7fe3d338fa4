#include "charq/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "charq/error.hpp"
#include "charq/resources.hpp"

namespace charq {

namespace {

using Poly = std::vector<u64>;  // coefficients mod p, low degree first

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  poly_trim(a);
  size_t dm = m.size() - 1;
  u64 lead_inv = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    u64 c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    poly_trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  poly_trim(r);
  return r;
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool irreducible(const Poly& f, u64 p) {
  size_t d = f.size() - 1;
  if (d == 1) return true;
  if (d <= 3) {
    // no roots in GF(p)
    for (u64 x = 0; x < p; ++x) {
      u64 v = 0;
      for (size_t i = f.size(); i-- > 0;) v = (mulmod(v, x, p) + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // gcd(f, X^(p^i) - X) = 1 for i <= d/2
  Poly xp{0, 1};
  for (size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly g = xp;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    poly_trim(g);
    if (g.empty() || poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

std::map<std::pair<u64, unsigned>, std::vector<std::uint32_t>> load_conway() {
  std::map<std::pair<u64, unsigned>, std::vector<std::uint32_t>> out;
  std::istringstream in{std::string(conway_table_text())};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    u64 p;
    unsigned d;
    if (!(ls >> p >> d)) continue;
    std::vector<std::uint32_t> c(d + 1);
    for (auto& x : c) ls >> x;
    out[{p, d}] = c;
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> conway_polynomial(u64 p, unsigned d) {
  static const auto table = load_conway();
  auto it = table.find({p, d});
  return it == table.end() ? std::vector<std::uint32_t>{} : it->second;
}

FiniteField::FiniteField(u64 p, unsigned d, std::vector<std::uint32_t> modulus, bool conway)
    : p_(p), d_(d), q_(ipow(p, d)), conway_(conway), modulus_(std::move(modulus)) {
  Poly f(modulus_.begin(), modulus_.end());
  auto to_int = [&](const Poly& a) {
    Elt v = 0;
    for (size_t i = a.size(); i-- > 0;) v = static_cast<Elt>(v * p + a[i]);
    return v;
  };
  auto to_poly = [&](Elt v) {
    Poly a(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      a[i] = v % p;
      v /= static_cast<Elt>(p);
    }
    poly_trim(a);
    return a;
  };
  // generator: class of X when primitive (always for Conway), else least primitive element
  auto factors = factor(q_ - 1);
  auto primitive = [&](const Poly& g) {
    if (g.empty()) return false;
    for (auto [l, e] : factors)
      if (poly_powmod(g, (q_ - 1) / l, f, p) == Poly{1}) return false;
    return true;
  };
  Poly g = poly_mod(Poly{0, 1}, f, p);
  if (!primitive(g)) {
    if (conway_) throw Error(Errc::BadParameter, "Conway polynomial is not primitive");
    for (Elt v = 2; v < q_; ++v) {
      if (primitive(to_poly(v))) {
        g = to_poly(v);
        break;
      }
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Poly cur{1};
  for (u64 k = 0; k + 1 < q_; ++k) {
    Elt v = to_int(cur);
    exp_[k] = v;
    log_[v] = static_cast<std::uint32_t>(k);
    cur = poly_mod(poly_mul(cur, g, p), f, p);
  }
  neg_.resize(q_);
  for (Elt v = 0; v < q_; ++v) {
    Elt r = 0, m = 1;
    Elt x = v;
    for (unsigned i = 0; i < d; ++i) {
      Elt c = x % p;
      x /= static_cast<Elt>(p);
      r += static_cast<Elt>(((p - c) % p) * m);
      m *= static_cast<Elt>(p);
    }
    neg_[v] = r;
  }
  if (d_ > 1 && p_ != 2 && q_ <= 256) {
    add_table_.resize(q_ * q_);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
  }
  if (!conway_) {
    warning_ = "GF(" + std::to_string(q_) +
               ") uses the least irreducible polynomial; Z(q) may differ from GAP";
  }
}

FieldPtr FiniteField::with_modulus(u64 p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::BadParameter, "characteristic must be prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw Error(Errc::BadParameter, "modulus must be monic");
  unsigned d = static_cast<unsigned>(modulus.size() - 1);
  if (ipow(p, d) > kMaxOrder) throw Error(Errc::Unsupported, "field order above 65536");
  Poly f(modulus.begin(), modulus.end());
  if (!irreducible(f, p)) throw Error(Errc::BadParameter, "modulus is reducible");
  bool conway = conway_polynomial(p, d) == modulus;
  return FieldPtr(new FiniteField(p, d, std::move(modulus), conway));
}

FieldPtr FiniteField::get(u64 p, unsigned d) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, d});
  if (it != cache.end()) return it->second;
  if (!is_prime(p) || d == 0) throw Error(Errc::BadParameter, "need prime p and d >= 1");
  if (ipow(p, d) > kMaxOrder) throw Error(Errc::Unsupported, "field order above 65536");
  auto mod = conway_polynomial(p, d);
  FieldPtr f;
  if (!mod.empty()) {
    f = with_modulus(p, mod);
  } else {
    // lexicographically least irreducible monic, comparing c_{d-1} first
    u64 count = ipow(p, d);
    for (u64 code = 0; code < count && !f; ++code) {
      std::vector<std::uint32_t> c(d + 1, 0);
      c[d] = 1;
      u64 x = code;
      for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (c[0] == 0) continue;
      if (irreducible(Poly(c.begin(), c.end()), p)) f = FieldPtr(new FiniteField(p, d, c, false));
    }
  }
  cache[{p, d}] = f;
  return f;
}

FieldPtr FiniteField::of_order(u64 q) {
  auto pp = prime_power(q);
  if (!pp) throw Error(Errc::BadParameter, std::to_string(q) + " is not a prime power");
  return get(pp->first, static_cast<unsigned>(pp->second));
}

FiniteField::Elt FiniteField::add_digits(Elt a, Elt b) const {
  Elt r = 0, m = 1;
  for (unsigned i = 0; i < d_; ++i) {
    Elt x = a % p_, y = b % p_;
    a /= static_cast<Elt>(p_);
    b /= static_cast<Elt>(p_);
    r += static_cast<Elt>((x + y) % p_) * m;
    m *= static_cast<Elt>(p_);
  }
  return r;
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  if (d_ == 1) {
    u64 s = static_cast<u64>(a) + b;
    return static_cast<Elt>(s >= p_ ? s - p_ : s);
  }
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  return add_digits(a, b);
}

FiniteField::Elt FiniteField::neg(Elt a) const { return neg_[a]; }

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw Error(Errc::ZeroElement, "inverse of 0");
  u64 l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FiniteField::Elt FiniteField::pow(Elt a, long long e) const {
  if (a == 0) {
    if (e < 0) throw Error(Errc::ZeroElement, "negative power of 0");
    return e == 0 ? 1 : 0;
  }
  long long n = static_cast<long long>(q_ - 1);
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

FiniteField::Elt FiniteField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Elt>(r);
}

FiniteField::Elt FiniteField::z_pow(long long k) const {
  long long n = static_cast<long long>(q_ - 1);
  k %= n;
  if (k < 0) k += n;
  return exp_[k];
}

u64 FiniteField::log(Elt a) const {
  if (a == 0) throw Error(Errc::ZeroElement, "log of 0");
  return log_[a];
}

bool FiniteField::is_square(Elt a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return log_[a] % 2 == 0;
}

std::vector<std::uint32_t> FiniteField::coeffs(Elt a) const {
  std::vector<std::uint32_t> c(d_);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = static_cast<std::uint32_t>(a % p_);
    a /= static_cast<Elt>(p_);
  }
  return c;
}

FiniteField::Elt FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elt v = 0;
  for (size_t i = c.size(); i-- > 0;) v = static_cast<Elt>(v * p_ + c[i] % p_);
  return v;
}

std::string FiniteField::str(Elt a) const {
  if (a == 0) return "0";
  return "Z(" + std::to_string(q_) + ")^" + std::to_string(log_[a]);
}

FiniteField::Elt embed(const FiniteField& small, const FiniteField& big, FiniteField::Elt x) {
  if (small.p() != big.p() || big.d() % small.d() != 0)
    throw Error(Errc::BadParameter, "not a subfield");
  if (x == 0) return 0;
  u64 ratio = (big.order() - 1) / (small.order() - 1);
  return big.z_pow(static_cast<long long>(small.log(x) * ratio));
}

FiniteField::Elt restrict_to(const FiniteField& big, const FiniteField& small, FiniteField::Elt y) {
  if (small.p() != big.p() || big.d() % small.d() != 0)
    throw Error(Errc::BadParameter, "not a subfield");
  if (y == 0) return 0;
  u64 ratio = (big.order() - 1) / (small.order() - 1);
  u64 l = big.log(y);
  if (l % ratio != 0) throw Error(Errc::BadParameter, big.str(y) + " is not in the subfield");
  return small.z_pow(static_cast<long long>(l / ratio));
}

u64 element_order(const FiniteField& k, FiniteField::Elt a) {
  if (a == 0) throw Error(Errc::ZeroElement, "order of 0");
  u64 n = k.order() - 1;
  for (auto [l, e] : factor(k.order() - 1)) {
    for (int i = 0; i < e && k.pow(a, static_cast<long long>(n / l)) == k.one(); ++i) n /= l;
  }
  return n;
}

unsigned absolute_trace(const FiniteField& k, FiniteField::Elt a) {
  if (k.p() != 2) throw Error(Errc::WrongCharacteristic, "absolute trace needs characteristic 2");
  FiniteField::Elt s = 0, x = a;
  for (unsigned i = 0; i < k.d(); ++i) {
    s = k.add(s, x);
    x = k.mul(x, x);
  }
  return s;
}

const char* kind_name(QuadKind k) {
  switch (k) {
    case QuadKind::Split: return "Split";
    case QuadKind::Inert: return "Inert";
    case QuadKind::Ramified: return "Ramified";
  }
  return "?";
}

QuadKind classify_quadratic(const FiniteField& k, FiniteField::Elt s) {
  if (k.p() == 2) {
    if (s == 0) return QuadKind::Ramified;
    return absolute_trace(k, k.inv(s)) == 0 ? QuadKind::Split : QuadKind::Inert;
  }
  auto disc = k.sub(k.mul(s, s), k.from_int(4));
  if (disc == 0) return QuadKind::Ramified;
  return k.is_square(disc) ? QuadKind::Split : QuadKind::Inert;
}

QuadKind classify_quadratic_bruteforce(const FiniteField& k, FiniteField::Elt s) {
  int roots = 0;
  FiniteField::Elt first = 0;
  for (FiniteField::Elt x = 0; x < k.order(); ++x) {
    auto v = k.add(k.sub(k.mul(x, x), k.mul(s, x)), k.one());
    if (v == 0) {
      if (roots == 0) first = x;
      ++roots;
    }
  }
  if (roots == 0) return QuadKind::Inert;
  if (roots == 2) return QuadKind::Split;
  // one root: double iff the derivative 2x - s vanishes there
  return k.sub(k.add(first, first), s) == 0 ? QuadKind::Ramified : QuadKind::Split;
}

std::vector<u64> prime_powers_upto(u64 bound) {
  std::vector<u64> out;
  for (u64 q = 2; q <= bound; ++q)
    if (prime_power(q)) out.push_back(q);
  return out;
}

}  // namespace charq
