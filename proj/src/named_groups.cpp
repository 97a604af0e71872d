#include "specdec/named_groups.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "specdec/error.hpp"
#include "specdec/number_theory.hpp"

namespace specdec {

namespace {

// Builds a group from a product rule on indices 0..n-1.
template <typename Product>
FiniteGroup tabulate(std::size_t n, Product product, std::string name) {
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = static_cast<Element>(product(a, b));
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(name));
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::uint64_t> parse_numbers(std::string_view args,
                                         std::string_view spec) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    const auto comma = args.find(',', pos);
    const std::string token =
        trim(args.substr(pos, comma == std::string_view::npos
                                  ? std::string_view::npos
                                  : comma - pos));
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw Error(ErrorKind::kInputParseError,
                  "bad number in group spec '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

FiniteGroup build_term(std::string_view term) {
  const std::string t = trim(term);
  if (t == "trivial") return trivial_group();
  const auto colon = t.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorKind::kInputParseError, "unknown group spec '" + t + "'");
  }
  const std::string kind = t.substr(0, colon);
  const auto args = parse_numbers(std::string_view(t).substr(colon + 1), t);
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw Error(ErrorKind::kInputParseError,
                  "'" + kind + "' expects " + std::to_string(count) +
                      " parameter(s)");
    }
  };
  if (kind == "cyclic") {
    need(1);
    return cyclic(args[0]);
  }
  if (kind == "dihedral") {
    need(1);
    return dihedral(args[0]);
  }
  if (kind == "quaternion") {
    need(1);
    return generalized_quaternion(static_cast<unsigned>(args[0]));
  }
  if (kind == "symmetric") {
    need(1);
    return symmetric(args[0]);
  }
  if (kind == "alternating") {
    need(1);
    return alternating(args[0]);
  }
  if (kind == "metacyclic") {
    need(5);
    return metacyclic(args[0], static_cast<unsigned>(args[1]), args[2],
                      static_cast<unsigned>(args[3]), args[4]);
  }
  if (kind == "abelian") {
    return abelian(std::vector<std::size_t>(args.begin(), args.end()));
  }
  throw Error(ErrorKind::kInputParseError, "unknown group family '" + kind + "'");
}

void require_order(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::kUnsupportedParameter, "group order must be >= 1");
  }
  if (n > default_caps().group_order) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap");
  }
}

}  // namespace

FiniteGroup trivial_group() { return cyclic(1); }

FiniteGroup cyclic(std::size_t n) {
  require_order(n);
  return tabulate(
      n, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      n == 1 ? "1" : "Z/" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n) {
  require_order(2 * n);
  return tabulate(
      2 * n,
      [n](std::size_t a, std::size_t b) {
        const std::size_t i = a % n, j = a / n;
        const std::size_t i2 = b % n, j2 = b / n;
        const std::size_t rot = j == 0 ? (i + i2) % n : (i + n - i2) % n;
        return rot + n * ((j + j2) % 2);
      },
      "D" + std::to_string(n));
}

FiniteGroup generalized_quaternion(unsigned n) {
  if (n < 3) {
    throw Error(ErrorKind::kUnsupportedParameter,
                "generalized quaternion needs n >= 3");
  }
  if (n > 20) throw Error(ErrorKind::kOrderCapExceeded, "quaternion order");
  const std::size_t order = std::size_t{1} << n;
  require_order(order);
  const std::size_t m = order / 2;
  return tabulate(
      order,
      [m](std::size_t a, std::size_t b) {
        const std::size_t i = a % m, j = a / m;
        const std::size_t i2 = b % m, j2 = b / m;
        std::size_t exp = j == 0 ? (i + i2) % m : (i + m - i2) % m;
        std::size_t y = j + j2;
        if (y == 2) {
          exp = (exp + m / 2) % m;
          y = 0;
        }
        return exp + m * y;
      },
      "Q" + std::to_string(order));
}

FiniteGroup symmetric(std::size_t k) {
  std::vector<Permutation> gens;
  if (k >= 2) {
    Permutation cycle(k);
    for (std::size_t i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
    Permutation swap(k);
    std::iota(swap.begin(), swap.end(), std::size_t{0});
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return FiniteGroup::from_permutation_generators(k, gens,
                                                  "S" + std::to_string(k));
}

FiniteGroup alternating(std::size_t k) {
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < k; ++i) {
    Permutation c(k);
    std::iota(c.begin(), c.end(), std::size_t{0});
    c[0] = 1;
    c[1] = i;
    c[i] = 0;
    gens.push_back(std::move(c));
  }
  return FiniteGroup::from_permutation_generators(k, gens,
                                                  "A" + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  require_order(g.order() * m);
  return tabulate(
      g.order() * m,
      [&](std::size_t a, std::size_t b) {
        return g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
      },
      g.name() + "x" + h.name());
}

FiniteGroup metacyclic(std::uint64_t p, unsigned a, std::uint64_t q,
                       unsigned b, std::uint64_t k) {
  if (!nt::is_prime(p) || !nt::is_prime(q) || p == q || a == 0 || b == 0) {
    throw Error(ErrorKind::kUnsupportedParameter,
                "metacyclic needs distinct primes p, q and a, b >= 1");
  }
  const std::uint64_t m = nt::ipow(p, a);
  const std::uint64_t t = nt::ipow(q, b);
  require_order(m * t);
  if (nt::multiplicative_order(k, m) != t) {
    throw Error(ErrorKind::kInvalidActionOrder,
                std::to_string(k) + " does not have order " +
                    std::to_string(t) + " modulo " + std::to_string(m));
  }
  // k^j mod m for j < t
  std::vector<std::uint64_t> kpow(t);
  for (std::uint64_t j = 0; j < t; ++j) kpow[j] = nt::pow_mod(k, j, m);
  return tabulate(
      m * t,
      [&](std::size_t x, std::size_t y) {
        const std::uint64_t i = x % m, j = x / m;
        const std::uint64_t i2 = y % m, j2 = y / m;
        return (i + i2 * kpow[j]) % m + m * ((j + j2) % t);
      },
      "Z/" + std::to_string(m) + ":Z/" + std::to_string(t) + "(" +
          std::to_string(k % m) + ")");
}

FiniteGroup abelian(const std::vector<std::size_t>& factors) {
  FiniteGroup g = trivial_group();
  bool first = true;
  for (std::size_t f : factors) {
    if (first) {
      g = cyclic(f);
      first = false;
    } else {
      g = direct_product(g, cyclic(f));
    }
  }
  return g;
}

FiniteGroup build_named(std::string_view spec) {
  std::vector<std::string_view> terms;
  std::size_t pos = 0;
  while (true) {
    const auto sep = spec.find_first_of("x*", pos);
    terms.push_back(spec.substr(pos, sep == std::string_view::npos
                                         ? std::string_view::npos
                                         : sep - pos));
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  FiniteGroup g = build_term(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    g = direct_product(g, build_term(terms[i]));
  }
  return g;
}

}  // namespace specdec
