#pragma once

// Brute-force reference computations used only by the tests. They work from
// the raw multiplication table and never call the library's enumeration or
// search routines, so they can check them.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "specdec/ggroup.hpp"
#include "specdec/group.hpp"

namespace specdec::oracle {

inline bool group_axioms_hold(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
      }
    }
  }
  return true;
}

inline bool closed_subset(const FiniteGroup& g, const std::vector<Element>& s) {
  std::vector<bool> in(g.order());
  for (Element e : s) in[e] = true;
  if (!in[0]) return false;
  for (Element a : s) {
    for (Element b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

inline bool normal_subset(const FiniteGroup& g, const std::vector<Element>& s) {
  std::vector<bool> in(g.order());
  for (Element e : s) in[e] = true;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element a : s) {
      if (!in[g.mul(g.mul(x, a), g.inv(x))]) return false;
    }
  }
  return true;
}

// Every subset containing 0 is tried, so keep the order small (<= 16).
inline std::vector<std::vector<Element>> subsets_subgroups(
    const FiniteGroup& g, bool normal_only) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    std::vector<Element> s{0};
    for (std::size_t i = 1; i < n; ++i) {
      if (bits >> (i - 1) & 1) s.push_back(static_cast<Element>(i));
    }
    if (!closed_subset(g, s)) continue;
    if (normal_only && !normal_subset(g, s)) continue;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Fixed-point iteration of the product closure of a set.
inline std::vector<Element> closure(const FiniteGroup& g,
                                    std::vector<Element> s) {
  std::set<Element> cur(s.begin(), s.end());
  cur.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Element> snapshot(cur.begin(), cur.end());
    for (Element a : snapshot) {
      for (Element b : snapshot) grew |= cur.insert(g.mul(a, b)).second;
    }
  }
  return {cur.begin(), cur.end()};
}

// Normal closure of a set, by closing under products and conjugation.
inline std::vector<Element> normal_closure(const FiniteGroup& g,
                                           const std::vector<Element>& s) {
  std::vector<Element> conjugates;
  for (Element a : s) {
    for (Element x = 0; x < g.order(); ++x) {
      conjugates.push_back(g.mul(g.mul(x, a), g.inv(x)));
    }
  }
  return closure(g, conjugates);
}

inline bool subset_of(const std::vector<Element>& a,
                      const std::vector<Element>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<Element> meet(const std::vector<Element>& a,
                                 const std::vector<Element>& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Zero divisors of the G-group x modulo the normal subgroup p, computed on
// preimages in the carrier: x, y outside p with <orbit(x), p> ∩ <orbit(y), p>
// = p and [<orbit(x), p>, <orbit(y), p>] ⊆ p. Pass p = {0} for x itself.
inline std::optional<std::pair<Element, Element>> zero_divisor_mod(
    const GGroup& x, const std::vector<Element>& p) {
  const FiniteGroup& h = x.carrier();
  std::vector<bool> in_p(h.order());
  for (Element e : p) in_p[e] = true;
  std::vector<std::vector<Element>> lifted(h.order());
  for (Element e = 0; e < h.order(); ++e) {
    std::vector<Element> gens = p;
    for (Element g = 0; g < x.base().order(); ++g) {
      const Element fg = x.morphism()(g);
      gens.push_back(h.mul(h.mul(fg, e), h.inv(fg)));
    }
    lifted[e] = closure(h, gens);
  }
  for (Element a = 1; a < h.order(); ++a) {
    if (in_p[a]) continue;
    for (Element b = a + 1; b < h.order(); ++b) {
      if (in_p[b]) continue;
      if (meet(lifted[a], lifted[b]).size() != p.size()) continue;
      bool commute = true;
      for (Element u : lifted[a]) {
        for (Element v : lifted[b]) {
          if (!in_p[h.commutator(u, v)]) commute = false;
        }
      }
      if (commute) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

// Elementwise intersection primality: for x, y outside p, u(x) ∩ u(y) ⊄ p.
inline bool intersection_prime_elementwise(const FiniteGroup& g,
                                           const std::vector<Element>& p) {
  std::vector<std::vector<Element>> u(g.order());
  for (Element e = 0; e < g.order(); ++e) u[e] = normal_closure(g, {e});
  std::vector<bool> in_p(g.order());
  for (Element e : p) in_p[e] = true;
  for (Element a = 1; a < g.order(); ++a) {
    for (Element b = a; b < g.order(); ++b) {
      if (in_p[a] || in_p[b]) continue;
      if (subset_of(meet(u[a], u[b]), p)) return false;
    }
  }
  return true;
}

// Relabels the non-identity elements of g by a random permutation.
inline FiniteGroup shuffled(const FiniteGroup& g, std::mt19937& rng) {
  const std::size_t n = g.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[perm[a]][perm[b]] = perm[g.mul(a, b)];
    }
  }
  return FiniteGroup::from_cayley_table(t, g.name() + "~");
}

}  // namespace specdec::oracle
