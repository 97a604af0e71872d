#include "specdec/classification.hpp"

#include <algorithm>

#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"
#include "specdec/number_theory.hpp"

namespace specdec {

namespace {

bool is_cyclic(const FiniteGroup& g) {
  for (Element e = 0; e < g.order(); ++e) {
    if (g.element_order(e) == g.order()) return true;
  }
  return false;
}

std::optional<MarinClass> structural_match(const FiniteGroup& g,
                                           const Caps& caps) {
  using Kind = MarinClass::Kind;
  const std::uint64_t n = g.order();
  if (n == 1) return MarinClass{};
  if (const auto pp = nt::prime_power(n)) {
    if (is_cyclic(g)) {
      MarinClass c;
      c.kind = Kind::kCyclicPrimePower;
      c.p = pp->first;
      c.n = pp->second;
      return c;
    }
    if (pp->first == 2 && pp->second >= 3 &&
        are_isomorphic(g, generalized_quaternion(pp->second), caps)) {
      MarinClass c;
      c.kind = Kind::kGeneralizedQuaternion;
      c.p = 2;
      c.n = pp->second;
      return c;
    }
    return std::nullopt;
  }
  const auto f = nt::factorize(n);
  if (f.size() != 2 || g.is_abelian()) return std::nullopt;
  for (int swap = 0; swap < 2; ++swap) {
    const auto [p, a] = f[swap];
    const auto [q, b] = f[1 - swap];
    const std::uint64_t pa = nt::ipow(p, a);
    const std::uint64_t qb = nt::ipow(q, b);
    if (p == 2 || (p - 1) % qb != 0) continue;
    for (std::uint64_t k = 2; k < pa; ++k) {
      if (nt::multiplicative_order(k, pa) != qb) continue;
      if (are_isomorphic(g, metacyclic(p, a, q, b, k), caps)) {
        MarinClass c;
        c.kind = Kind::kMetacyclicPQ;
        c.p = p;
        c.a = a;
        c.q = q;
        c.b = b;
        return c;
      }
    }
  }
  return std::nullopt;
}

struct Draft {
  std::size_t order;
  int rank;
  CorpusEntry entry;
};

void add(std::vector<Draft>& out, int rank, FiniteGroup g,
         std::vector<std::string> tags) {
  if (g.is_abelian()) tags.push_back("abelian");
  if (g.order() > 1 && nt::prime_power(g.order())) tags.push_back("p-group");
  const std::size_t order = g.order();
  std::string name = g.name();
  out.push_back({order, rank, CorpusEntry{std::move(name), std::move(g),
                                          std::move(tags)}});
}

// Invariant factor lists d1 | d2 | ... with at least two factors.
void invariant_factors(std::size_t remaining, std::size_t min_factor,
                       std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 1) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (std::size_t d = std::max<std::size_t>(min_factor, 2); d <= remaining; ++d) {
    if (remaining % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    cur.push_back(d);
    invariant_factors(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const char* marin_kind_name(MarinClass::Kind kind) {
  using Kind = MarinClass::Kind;
  switch (kind) {
    case Kind::kTrivial: return "Trivial";
    case Kind::kCyclicPrimePower: return "CyclicPrimePower";
    case Kind::kGeneralizedQuaternion: return "GeneralizedQuaternion";
    case Kind::kMetacyclicPQ: return "MetacyclicPQ";
    case Kind::kNotStronglyIndecomposable: return "NotStronglyIndecomposable";
  }
  return "?";
}

std::string MarinClass::label() const {
  const std::string name = marin_kind_name(kind);
  switch (kind) {
    case Kind::kCyclicPrimePower:
      return name + "(" + std::to_string(p) + "," + std::to_string(n) + ")";
    case Kind::kGeneralizedQuaternion:
      return name + "(" + std::to_string(n) + ")";
    case Kind::kMetacyclicPQ:
      return name + "(" + std::to_string(p) + "," + std::to_string(a) + "," +
             std::to_string(q) + "," + std::to_string(b) + ")";
    default:
      return name;
  }
}

MarinClass marin_class(const FiniteGroup& g, const Caps& caps) {
  const auto witness = find_zero_divisor_pair(GGroup::plain(g), caps);
  auto match = structural_match(g, caps);
  if (match && witness) {
    throw Error(ErrorKind::kClassifierInconsistency,
                g.name() + " matches " + match->label() +
                    " but has divisors of zero (" + std::to_string(witness->x) +
                    ", " + std::to_string(witness->y) + ")");
  }
  if (!match && !witness) {
    throw Error(ErrorKind::kClassifierInconsistency,
                g.name() + " has no divisors of zero but matches no archetype");
  }
  if (match) return *match;
  MarinClass c;
  c.kind = MarinClass::Kind::kNotStronglyIndecomposable;
  c.witness = witness;
  return c;
}

ElementOrderCheck prime_power_orders(const FiniteGroup& g) {
  for (Element e = 0; e < g.order(); ++e) {
    const std::size_t o = g.element_order(e);
    if (o != 1 && !nt::prime_power(o)) return {false, e};
  }
  return {};
}

std::vector<CorpusEntry> corpus(std::size_t max_order) {
  std::vector<Draft> base;
  for (std::size_t n = 1; n <= max_order; ++n) {
    add(base, 0, n == 1 ? trivial_group() : cyclic(n), {"cyclic"});
    std::vector<std::vector<std::size_t>> lists;
    std::vector<std::size_t> cur;
    invariant_factors(n, 2, cur, lists);
    std::sort(lists.begin(), lists.end());
    for (const auto& l : lists) add(base, 1, abelian(l), {});
  }
  for (std::size_t n = 3; 2 * n <= max_order; ++n) {
    add(base, 2, dihedral(n), {"dihedral"});
  }
  for (unsigned k = 3; nt::ipow(2, k) <= max_order; ++k) {
    add(base, 3, generalized_quaternion(k), {"quaternion"});
  }
  std::size_t fact = 6;
  for (std::size_t k = 3; fact <= max_order; fact *= ++k) {
    add(base, 4, symmetric(k), {"symmetric"});
  }
  fact = 12;
  for (std::size_t k = 4; fact <= max_order; fact *= ++k) {
    add(base, 5, alternating(k), k >= 5 ? std::vector<std::string>{"alternating", "simple"}
                                        : std::vector<std::string>{"alternating"});
  }
  for (std::uint64_t p = 3; p * 2 <= max_order; p += 2) {
    if (!nt::is_prime(p)) continue;
    for (unsigned a = 1; nt::ipow(p, a) * 2 <= max_order; ++a) {
      const std::uint64_t pa = nt::ipow(p, a);
      for (std::uint64_t q = 2; q < p; ++q) {
        if (!nt::is_prime(q)) continue;
        for (unsigned b = 1; pa * nt::ipow(q, b) <= max_order; ++b) {
          const std::uint64_t qb = nt::ipow(q, b);
          if (qb <= 2 || (p - 1) % qb != 0) continue;
          for (std::uint64_t k = 2; k < pa; ++k) {
            if (nt::multiplicative_order(k, pa) == qb) {
              add(base, 6, metacyclic(p, a, q, b, k), {"metacyclic"});
              break;
            }
          }
        }
      }
    }
  }
  std::vector<Draft> all = base;
  for (const Draft& d : base) {
    if (d.entry.group.is_abelian()) continue;
    for (std::size_t m = 2; d.order * m <= max_order; ++m) {
      add(all, 7, direct_product(d.entry.group, cyclic(m)), {"product"});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const Draft& x, const Draft& y) {
    return x.order != y.order ? x.order < y.order : x.rank < y.rank;
  });
  std::vector<CorpusEntry> out;
  for (Draft& d : all) out.push_back(std::move(d.entry));
  return out;
}

}  // namespace specdec
