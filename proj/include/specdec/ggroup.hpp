#pragma once

// Objects of the comma category over a base group G: a carrier H together
// with a structural homomorphism f: G -> H. G acts on H through f by
// conjugation, Ad(g)(h) = f(g) h f(g)^-1.

#include <optional>
#include <vector>

#include "specdec/axiom_report.hpp"
#include "specdec/caps.hpp"
#include "specdec/group.hpp"

namespace specdec {

class GGroup {
 public:
  // Validates `images` as a homomorphism base -> carrier.
  static GGroup make(FiniteGroup base, FiniteGroup carrier,
                     std::vector<Element> images);
  // Base is the trivial group.
  static GGroup plain(FiniteGroup carrier);
  // Base equals carrier, f = id.
  static GGroup identity(FiniteGroup group);

  const FiniteGroup& base() const { return base_; }
  const FiniteGroup& carrier() const { return carrier_; }
  const GroupHomomorphism& morphism() const { return morphism_; }

  // The image f(G), sorted. Conjugation by these elements is the action.
  const std::vector<Element>& conjugators() const { return conjugators_; }

  Element act(Element g, Element h) const {
    return carrier_.conj(morphism_(g), h);
  }

  bool is_stable(const Subgroup& s) const;

 private:
  GGroup(FiniteGroup base, FiniteGroup carrier, GroupHomomorphism morphism);

  FiniteGroup base_;
  FiniteGroup carrier_;
  GroupHomomorphism morphism_;
  std::vector<Element> conjugators_;
};

struct ZeroDivisorWitness {
  Element x = 0;
  Element y = 0;
  Subgroup gx;
  Subgroup gy;
};

// G(x): the subgroup generated by the orbit of x under the adjoint action.
Subgroup adjoint_orbit_subgroup(const GGroup& x, Element h);

// First pair x < y (index order) of nontrivial carrier elements with
// G(x) ∩ G(y) = 1 and [G(x), G(y)] = 1.
std::optional<ZeroDivisorWitness> find_zero_divisor_pair(
    const GGroup& x, const Caps& caps = default_caps());

inline bool is_domain(const GGroup& x, const Caps& caps = default_caps()) {
  return !find_zero_divisor_pair(x, caps).has_value();
}

// Subgroups of the carrier normalized by f(G), canonically ordered.
std::vector<Subgroup> g_stable_subgroups(const GGroup& x,
                                         const Caps& caps = default_caps());

// H' = A x B internally, all three stable and A, B nontrivial.
struct StableSplit {
  Subgroup whole;
  Subgroup first;
  Subgroup second;
};

struct IndecomposabilityResult {
  bool indecomposable = true;
  std::optional<StableSplit> witness;
};

IndecomposabilityResult is_locally_g_indecomposable(
    const GGroup& x, const Caps& caps = default_caps());

// The carrier modulo a normal subgroup, with structural morphism p∘f.
GGroup quotient_ggroup(const GGroup& x, const Subgroup& normal);

// A subgroup containing f(G), as a G-group with the same structural map.
GGroup sub_ggroup(const GGroup& x, const Subgroup& s);

// Instance checks of the top-couple axioms on one object, tagged by name.
// "injection": if x is a domain, every sub-G-group of x is a domain.
AxiomReport check_injection_axiom(const GGroup& x,
                                  const Caps& caps = default_caps());
// "meet": if x is a domain, no two nontrivial normal subgroups meet trivially.
AxiomReport check_meet_axiom(const GGroup& x,
                             const Caps& caps = default_caps());
// "quotient": quotients by normal subgroups carry a valid induced structure and
// preimages of normal subgroups under the projection are normal.
AxiomReport check_quotient_axiom(const GGroup& x,
                                 const Caps& caps = default_caps());

}  // namespace specdec
