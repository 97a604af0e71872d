#pragma once

// Finite rings given by tables, their two-sided ideals, p-prime ideals and
// the closed sets V(I); bounded-window checks over Z.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specdec/axiom_report.hpp"
#include "specdec/caps.hpp"
#include "specdec/group.hpp"

namespace specdec {

class FiniteRing {
 public:
  // Z/m with residues as indices. m >= 1.
  static FiniteRing modular(std::size_t m, const Caps& caps = default_caps());
  // Validates the abelian group under `add` with identity 0, associativity
  // of `mul` and both distributive laws. Detects a two-sided unit if any.
  static FiniteRing from_tables(const CayleyTable& add, const CayleyTable& mul,
                                std::string name = "R",
                                const Caps& caps = default_caps());

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  bool is_modular() const { return modular_; }
  std::optional<Element> one() const { return one_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }

 private:
  FiniteRing() = default;
  void finish();

  std::size_t order_ = 0;
  std::string name_;
  bool modular_ = false;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::optional<Element> one_;
};

// Ideals reuse Subgroup as a canonical sorted index set; they are additive
// subgroups, and the ordering is the same (size, then lexicographic).
using TwoSidedIdeal = Subgroup;

bool is_two_sided_ideal(const FiniteRing& r, const std::vector<Element>& s);

// Smallest two-sided ideal containing a. Without a unit this includes the
// integer multiples of a.
TwoSidedIdeal principal_two_sided_ideal(const FiniteRing& r, Element a);

// Canonically ordered. Capped at ring_modular for Z/m and ring_tables
// otherwise.
std::vector<TwoSidedIdeal> two_sided_ideals(const FiniteRing& r,
                                            const Caps& caps = default_caps());

struct PPrimeResult {
  bool prime = true;
  std::optional<std::pair<Element, Element>> witness;  // first (a, b) in index order
};

// I(a) ∩ I(b) ⊆ P forces a ∈ P or b ∈ P. Throws kNotAnIdeal.
PPrimeResult is_p_prime(const FiniteRing& r, const TwoSidedIdeal& p);

std::vector<TwoSidedIdeal> p_prime_ideals(const FiniteRing& r,
                                          const Caps& caps = default_caps());

// "union": V(I ∩ J) = V(I) ∪ V(J) over ideal pairs; "family": V(I + J + K)
// = V(I) ∩ V(J) ∩ V(K) over families of up to three ideals. V ranges over the
// p-prime ideals.
std::vector<AxiomReport> verify_ring_topology(const FiniteRing& r,
                                              const Caps& caps = default_caps());

struct WindowResult {
  bool violation = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
};

// Is (n) p-prime in Z, checked for a, b in [-bound, bound] \ {0}, with
// I(a) ∩ I(b) = (lcm(a, b)). Scans a and b in the order 1, -1, 2, -2, ...
// Throws kInvalidArgument unless n >= 2 and bound >= n.
WindowResult z_pprime_window_check(std::int64_t n, std::int64_t bound);

}  // namespace specdec
