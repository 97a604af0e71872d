#pragma once

// Finite groups given by their full multiplication table, together with the
// subgroup, quotient and commutator calculus the rest of the library uses.
//
// Conventions: the identity is always element 0, subgroups are stored as
// sorted element lists, and permutation products compose left to right,
// i.e. (a*b)(i) = b(a(i)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "specdec/caps.hpp"

namespace specdec {

using Element = std::uint32_t;
using ElementMask = boost::dynamic_bitset<>;
using CayleyTable = std::vector<std::vector<Element>>;
using Permutation = std::vector<std::size_t>;

class FiniteGroup {
 public:
  // Validates the table exhaustively: Latin square, identity at index 0,
  // inverses, associativity.
  static FiniteGroup from_cayley_table(const CayleyTable& table,
                                       std::string name = {},
                                       const Caps& caps = default_caps());

  // Closure of the generators, elements numbered breadth-first from the
  // identity with generators tried in the given order.
  static FiniteGroup from_permutation_generators(
      std::size_t degree, const std::vector<Permutation>& generators,
      std::string name = {}, const Caps& caps = default_caps());

  // For tables produced by construction inside the library. Only the
  // identity-at-zero and inverse lookups are checked.
  static FiniteGroup from_trusted_table(std::size_t order,
                                        std::vector<Element> flat_table,
                                        std::string name);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  // g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  // x y x^-1 y^-1
  Element commutator(Element x, Element y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  Element pow(Element a, std::int64_t k) const;

  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  CayleyTable table() const;

 private:
  FiniteGroup(std::size_t order, std::vector<Element> table,
              std::vector<Element> inverse, std::string name)
      : order_(order),
        table_(std::move(table)),
        inverse_(std::move(inverse)),
        name_(std::move(name)) {}

  std::size_t order_ = 1;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

// A subgroup as a canonically sorted element list. Canonical order between
// subgroups is (size, lexicographic elements).
class Subgroup {
 public:
  Subgroup() : elements_{0} {}
  // Elements need not be sorted; duplicates are removed. No closure check.
  explicit Subgroup(std::vector<Element> elements);

  // Throws kInvalidArgument unless `elements` is a subgroup of `group`.
  static Subgroup checked(const FiniteGroup& group,
                          std::vector<Element> elements);
  static Subgroup from_mask(const ElementMask& mask);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool contains(Element e) const;
  bool is_subset_of(const Subgroup& other) const;
  ElementMask mask(std::size_t group_order) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a,
                                          const Subgroup& b);

 private:
  std::vector<Element> elements_;
};

// A homomorphism stored as its image table. Construct through `checked`.
class GroupHomomorphism {
 public:
  static GroupHomomorphism checked(const FiniteGroup& domain,
                                   const FiniteGroup& codomain,
                                   std::vector<Element> image);
  static GroupHomomorphism identity(const FiniteGroup& group);
  static GroupHomomorphism trivial(const FiniteGroup& domain,
                                   const FiniteGroup& codomain);

  Element operator()(Element e) const { return image_[e]; }
  const std::vector<Element>& images() const { return image_; }
  std::size_t domain_order() const { return image_.size(); }
  std::size_t codomain_order() const { return codomain_order_; }

  bool is_injective() const;
  bool is_surjective() const;
  Subgroup kernel() const;
  // Only meaningful for bijections.
  GroupHomomorphism inverse() const;

 private:
  GroupHomomorphism(std::vector<Element> image, std::size_t codomain_order)
      : image_(std::move(image)), codomain_order_(codomain_order) {}

  std::vector<Element> image_;
  std::size_t codomain_order_ = 1;
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& group);

Subgroup generated_subgroup(const FiniteGroup& group,
                            std::span<const Element> generators);
Subgroup join(const FiniteGroup& group, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

Subgroup normal_closure(const FiniteGroup& group,
                        std::span<const Element> elements);
Subgroup commutator_subgroup(const FiniteGroup& group, const Subgroup& i,
                             const Subgroup& j);
Subgroup center(const FiniteGroup& group);
bool is_normal(const FiniteGroup& group, const Subgroup& subgroup);
// True when every element of `a` commutes with every element of `b`.
bool commute_elementwise(const FiniteGroup& group, const Subgroup& a,
                         const Subgroup& b);

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group);

struct Quotient {
  FiniteGroup group;
  GroupHomomorphism projection;
  // representatives[c] is the minimal element index of coset c.
  std::vector<Element> representatives;
};

// Cosets are labeled in increasing order of their minimal element.
Quotient quotient(const FiniteGroup& group, const Subgroup& normal);

// Re-presents a subgroup as a group in its own right; element i of the
// result is subgroup.elements()[i].
FiniteGroup subgroup_as_group(const FiniteGroup& group,
                              const Subgroup& subgroup);

// Every subgroup obtained as a join of some subset of `atoms` (including the
// empty join), canonically sorted. Stops with kOrderCapExceeded once more than
// `max_results` subgroups exist.
std::vector<Subgroup> join_closure(const FiniteGroup& group,
                                   const std::vector<Subgroup>& atoms,
                                   std::size_t max_results = 1u << 20);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& group,
                                       const Caps& caps = default_caps());
// All subgroups, via joins of cyclic subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group,
                                    std::size_t order_cap);

struct GroupInvariants {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::size_t> element_orders;  // sorted multiset
  std::size_t center_size = 0;
  std::size_t derived_size = 0;

  friend bool operator==(const GroupInvariants&,
                         const GroupInvariants&) = default;
};

GroupInvariants invariants(const FiniteGroup& group);

// A verified bijective homomorphism a -> b, or nothing.
std::optional<GroupHomomorphism> are_isomorphic(
    const FiniteGroup& a, const FiniteGroup& b,
    const Caps& caps = default_caps());

}  // namespace specdec
