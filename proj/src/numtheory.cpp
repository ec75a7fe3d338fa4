#include "charq/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "charq/error.hpp"

namespace charq {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 ipow(u64 base, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw Error(Errc::Overflow, "ipow");
    r *= base;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factor(u64 n) {
  std::vector<u64> ps;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  }
  factor_into(n, ps);
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : ps) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::optional<std::pair<u64, int>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factor(n);
  if (f.size() != 1) return std::nullopt;
  return f[0];
}

u64 order_mod(u64 a, u64 l) {
  u64 n = l - 1;
  for (auto [p, e] : factor(n)) {
    for (int i = 0; i < e && n % p == 0 && powmod(a, n / p, l) == 1; ++i) n /= p;
  }
  return n;
}

std::optional<u64> primitive_prime_divisor(u64 a, unsigned d) {
  u64 n = ipow(a, d) - 1;
  for (auto [l, e] : factor(n)) {
    if (a % l != 0 && order_mod(a % l, l) == d) return l;
  }
  return std::nullopt;
}

}  // namespace charq
