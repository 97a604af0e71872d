#include "specdec/number_theory.hpp"

namespace specdec::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t m) {
  if (m == 1) return 1;
  if (gcd(k % m, m) != 1) return 0;
  std::uint64_t x = k % m;
  std::uint64_t ord = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * (k % m) % m);
    ++ord;
  }
  return ord;
}

}  // namespace specdec::nt
