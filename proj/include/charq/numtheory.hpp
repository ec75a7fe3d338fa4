#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace charq {

using u64 = std::uint64_t;

bool is_prime(u64 n);
/// Prime factorization, ascending primes. Trial division then Pollard rho.
std::vector<std::pair<u64, int>> factor(u64 n);
/// (p, d) with n = p^d, if n is a prime power.
std::optional<std::pair<u64, int>> prime_power(u64 n);
/// Throws Error(Overflow) past 2^64.
u64 ipow(u64 base, unsigned e);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
/// Multiplicative order of a modulo prime l (a coprime to l).
u64 order_mod(u64 a, u64 l);

/// Least prime dividing a^d - 1 but no a^i - 1 with i < d; nullopt if none exists.
std::optional<u64> primitive_prime_divisor(u64 a, unsigned d);

}  // namespace charq
