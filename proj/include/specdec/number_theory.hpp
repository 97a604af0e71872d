#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace specdec::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

// Trial-division factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// (p, e) with n = p^e, e >= 1; nothing when n is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Multiplicative order of k modulo m, or 0 when gcd(k, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m);

}  // namespace specdec::nt
