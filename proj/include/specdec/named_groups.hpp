#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "specdec/group.hpp"

namespace specdec {

FiniteGroup trivial_group();
FiniteGroup cyclic(std::size_t n);
// Order 2n: elements r^i s^j stored at index i + n*j.
FiniteGroup dihedral(std::size_t n);
// Order 2^n: <x,y | x^(2^(n-1)), y^2 = x^(2^(n-2)), y^-1 x y = x^-1>,
// elements x^i y^j at index i + 2^(n-1)*j. Requires n >= 3.
FiniteGroup generalized_quaternion(unsigned n);
FiniteGroup symmetric(std::size_t k);
FiniteGroup alternating(std::size_t k);
// Element (a, b) sits at index a*|h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
// Z/p^a extended by Z/q^b, the generator y acting by x -> x^k. Elements
// x^i y^j at index i + p^a*j. k must have multiplicative order exactly q^b
// modulo p^a.
FiniteGroup metacyclic(std::uint64_t p, unsigned a, std::uint64_t q,
                       unsigned b, std::uint64_t k);
// Product of cyclic groups of the given orders.
FiniteGroup abelian(const std::vector<std::size_t>& factors);

// Parses e.g. "quaternion:3", "metacyclic:7,1,3,1,2", "abelian:2,4",
// "symmetric:3 x cyclic:5". Terms: trivial, cyclic, dihedral, quaternion,
// symmetric, alternating, metacyclic, abelian.
FiniteGroup build_named(std::string_view spec);

}  // namespace specdec
