#pragma once

// Recognition of the finite groups without divisors of zero (trivial base),
// element-order checks, and the curated test corpus.

#include <optional>
#include <string>
#include <vector>

#include "specdec/caps.hpp"
#include "specdec/ggroup.hpp"
#include "specdec/group.hpp"

namespace specdec {

struct MarinClass {
  enum class Kind {
    kTrivial,
    kCyclicPrimePower,       // Z/p^n
    kGeneralizedQuaternion,  // Q_{2^n}, n >= 3
    kMetacyclicPQ,           // Z/p^a : Z/q^b, faithful, q^b | p - 1
    kNotStronglyIndecomposable,
  };

  Kind kind = Kind::kTrivial;
  std::uint64_t p = 0;
  unsigned n = 0;  // exponent for the cyclic and quaternion kinds
  unsigned a = 0;
  std::uint64_t q = 0;
  unsigned b = 0;
  std::optional<ZeroDivisorWitness> witness;

  // "Trivial", "CyclicPrimePower(2,3)", "MetacyclicPQ(7,1,3,1)", ...
  std::string label() const;
};

const char* marin_kind_name(MarinClass::Kind kind);

// Structural recognition against constructed archetypes, cross-checked
// against an exhaustive zero-divisor scan. Disagreement throws
// kClassifierInconsistency.
MarinClass marin_class(const FiniteGroup& g, const Caps& caps = default_caps());

struct ElementOrderCheck {
  bool all_prime_powers = true;
  std::optional<Element> violating;  // first element by index
};

ElementOrderCheck prime_power_orders(const FiniteGroup& g);

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> tags;
};

// Listed by order; within an order: cyclic, non-cyclic abelian (invariant
// factors), dihedral D_n (n >= 3), generalized quaternion, symmetric S_k
// (k >= 3), alternating A_k (k >= 4), metacyclic Z/p^a : Z/q^b with q^b > 2
// and the least valid k, then N x Z/m for each nonabelian entry N above.
std::vector<CorpusEntry> corpus(std::size_t max_order);

}  // namespace specdec
