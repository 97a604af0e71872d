#pragma once

// Prime ideals of a G-group, the closed sets V(I), radicals, irreducibility,
// and instance checks of the topology identities.

#include <string_view>
#include <vector>

#include "specdec/axiom_report.hpp"
#include "specdec/caps.hpp"
#include "specdec/ggroup.hpp"

namespace specdec {

// kQuotientDomain: H/P has no divisors of zero.
// kIntersectionPrime: I ∩ J ⊆ P implies I ⊆ P or J ⊆ P for normal I, J.
enum class PrimalityNotion { kQuotientDomain, kIntersectionPrime };

// "quotient-domain" / "intersection"
const char* notion_name(PrimalityNotion notion);
PrimalityNotion parse_notion(std::string_view text);

bool is_prime(const GGroup& x, const Subgroup& n, PrimalityNotion notion,
              const Caps& caps = default_caps());

struct Spectrum {
  GGroup owner;
  PrimalityNotion notion;
  std::vector<Subgroup> normals;  // every normal subgroup, canonical order
  std::vector<Subgroup> primes;   // canonical order; the carrier comes last
  // containment[i][j] is true when primes[i] ⊆ primes[j].
  std::vector<std::vector<bool>> containment;

  // Number of primes other than the whole carrier.
  std::size_t starred_size() const { return primes.size() - 1; }
};

Spectrum spectrum(const GGroup& x, PrimalityNotion notion,
                  const Caps& caps = default_caps());

struct ClosedSet {
  Subgroup ideal;
  bool starred = false;
  std::vector<std::size_t> members;  // indices into Spectrum::primes

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;
};

// Primes containing `ideal`; the starred variant drops the carrier.
ClosedSet v_set(const Spectrum& s, const Subgroup& ideal, bool starred = false);

Subgroup radical(const Spectrum& s);
Subgroup radical_of(const Spectrum& s, const Subgroup& ideal);
bool is_radical_ideal(const Spectrum& s, const Subgroup& ideal);

Subgroup radical(const GGroup& x, PrimalityNotion notion,
                 const Caps& caps = default_caps());
Subgroup radical_of(const GGroup& x, const Subgroup& ideal,
                    PrimalityNotion notion, const Caps& caps = default_caps());

// The closed family is {V(I) : I normal} ∪ {∅}, starred or not to match `c`.
// Irreducible: nonempty and not the union of two strictly smaller members.
bool is_irreducible(const Spectrum& s, const ClosedSet& c);

// Reports tagged "union" (V(I ∩ J) = V(I) ∪ V(J)), "family" (V of a join of up
// to three ideals is the intersection), "irreducible" (for radical I, V(I)
// irreducible iff I prime), "noetherian", then "injection", "meet", "quotient".
std::vector<AxiomReport> verify_axioms(const GGroup& x, PrimalityNotion notion,
                                       const Caps& caps = default_caps());
std::vector<AxiomReport> verify_axioms(const Spectrum& s,
                                       const Caps& caps = default_caps());

}  // namespace specdec
