#include "specdec/ring_pprime.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "specdec/error.hpp"

namespace specdec {

namespace {

void check_cap(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap) {
    throw Error(ErrorKind::kOrderCapExceeded,
                std::string(what) + " capped at ring order " + std::to_string(cap));
  }
}

// Additive closure of a set containing 0, then absorption on both sides,
// repeated until stable.
ElementMask ideal_closure(const FiniteRing& r, ElementMask m) {
  const std::size_t n = r.order();
  m.set(0);
  std::vector<Element> queue;
  for (auto i = m.find_first(); i != ElementMask::npos; i = m.find_next(i)) {
    queue.push_back(static_cast<Element>(i));
  }
  auto push = [&](Element e) {
    if (!m.test(e)) {
      m.set(e);
      queue.push_back(e);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    push(r.neg(x));
    for (Element y = 0; y < n; ++y) {
      push(r.mul(y, x));
      push(r.mul(x, y));
      if (m.test(y)) push(r.add(x, y));
    }
  }
  return m;
}

std::vector<Element> members(const ElementMask& m) {
  std::vector<Element> out;
  for (auto i = m.find_first(); i != ElementMask::npos; i = m.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::vector<ElementMask> principal_masks(const FiniteRing& r) {
  std::vector<ElementMask> out;
  for (Element a = 0; a < r.order(); ++a) {
    ElementMask m(r.order());
    m.set(a);
    out.push_back(ideal_closure(r, std::move(m)));
  }
  return out;
}

PPrimeResult p_prime_scan(const FiniteRing& r,
                          const std::vector<ElementMask>& principal,
                          const TwoSidedIdeal& p) {
  const std::size_t n = r.order();
  const ElementMask pm = p.mask(n);
  for (Element a = 0; a < n; ++a) {
    if (pm.test(a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (pm.test(b)) continue;
      if ((principal[a] & principal[b]).is_subset_of(pm)) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {};
}

std::int64_t window_value(std::int64_t k) {
  // 1, -1, 2, -2, ...
  return k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1);
}

}  // namespace

FiniteRing FiniteRing::modular(std::size_t m, const Caps& caps) {
  if (m == 0) throw Error(ErrorKind::kInvalidArgument, "modulus must be >= 1");
  check_cap(m, caps.ring_modular, "modular ring");
  FiniteRing r;
  r.order_ = m;
  r.name_ = "Z/" + std::to_string(m);
  r.modular_ = true;
  r.add_.resize(m * m);
  r.mul_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      r.add_[a * m + b] = static_cast<Element>((a + b) % m);
      r.mul_[a * m + b] = static_cast<Element>((a * b) % m);
    }
  }
  r.finish();
  return r;
}

FiniteRing FiniteRing::from_tables(const CayleyTable& add, const CayleyTable& mul,
                                   std::string name, const Caps& caps) {
  const std::size_t n = add.size();
  if (n == 0) throw Error(ErrorKind::kInvalidRing, "empty ring");
  check_cap(n, caps.ring_tables, "table ring");
  if (mul.size() != n) {
    throw Error(ErrorKind::kInvalidRing, "addition and multiplication sizes differ");
  }
  for (const auto& row : mul) {
    if (row.size() != n) throw Error(ErrorKind::kInvalidRing, "ragged multiplication table");
    for (Element e : row) {
      if (e >= n) throw Error(ErrorKind::kInvalidRing, "multiplication entry out of range");
    }
  }
  try {
    const FiniteGroup additive = FiniteGroup::from_cayley_table(add, name);
    if (!additive.is_abelian()) {
      throw Error(ErrorKind::kInvalidRing, "addition is not commutative");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidRing) throw;
    throw Error(ErrorKind::kInvalidRing, std::string("addition: ") + e.what());
  }
  FiniteRing r;
  r.order_ = n;
  r.name_ = std::move(name);
  r.add_.reserve(n * n);
  r.mul_.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    r.add_.insert(r.add_.end(), add[a].begin(), add[a].end());
    r.mul_.insert(r.mul_.end(), mul[a].begin(), mul[a].end());
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
          throw Error(ErrorKind::kInvalidRing, "multiplication is not associative");
        }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
            r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
          throw Error(ErrorKind::kInvalidRing, "distributivity fails");
        }
      }
    }
  }
  r.finish();
  return r;
}

void FiniteRing::finish() {
  neg_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (add(a, b) == 0) neg_[a] = b;
    }
  }
  for (Element e = 0; e < order_ && !one_; ++e) {
    bool unit = true;
    for (Element x = 0; x < order_ && unit; ++x) {
      unit = mul(e, x) == x && mul(x, e) == x;
    }
    if (unit) one_ = e;
  }
}

bool is_two_sided_ideal(const FiniteRing& r, const std::vector<Element>& s) {
  ElementMask m(r.order());
  for (Element e : s) {
    if (e >= r.order()) return false;
    m.set(e);
  }
  return m.test(0) && ideal_closure(r, m) == m;
}

TwoSidedIdeal principal_two_sided_ideal(const FiniteRing& r, Element a) {
  if (a >= r.order()) {
    throw Error(ErrorKind::kInvalidArgument, "element outside the ring");
  }
  ElementMask m(r.order());
  m.set(a);
  return TwoSidedIdeal(members(ideal_closure(r, std::move(m))));
}

std::vector<TwoSidedIdeal> two_sided_ideals(const FiniteRing& r,
                                            const Caps& caps) {
  check_cap(r.order(), r.is_modular() ? caps.ring_modular : caps.ring_tables,
            "ideal enumeration");
  const std::size_t n = r.order();
  std::set<ElementMask> seen;
  std::vector<ElementMask> all;
  auto insert = [&](ElementMask m) {
    if (seen.insert(m).second) all.push_back(std::move(m));
  };
  insert(ideal_closure(r, ElementMask(n)));
  std::vector<ElementMask> atoms;
  for (Element a = 1; a < n; ++a) {
    ElementMask m(n);
    m.set(a);
    atoms.push_back(ideal_closure(r, std::move(m)));
  }
  // I + J is the ideal generated by I ∪ J.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const ElementMask& atom : atoms) {
      if (atom.is_subset_of(all[i])) continue;
      insert(ideal_closure(r, all[i] | atom));
    }
  }
  std::vector<TwoSidedIdeal> out;
  for (const ElementMask& m : all) out.emplace_back(members(m));
  std::sort(out.begin(), out.end());
  return out;
}

PPrimeResult is_p_prime(const FiniteRing& r, const TwoSidedIdeal& p) {
  if (!is_two_sided_ideal(r, p.elements())) {
    throw Error(ErrorKind::kNotAnIdeal, "not a two-sided ideal of " + r.name());
  }
  return p_prime_scan(r, principal_masks(r), p);
}

std::vector<TwoSidedIdeal> p_prime_ideals(const FiniteRing& r, const Caps& caps) {
  const auto principal = principal_masks(r);
  std::vector<TwoSidedIdeal> out;
  for (const TwoSidedIdeal& i : two_sided_ideals(r, caps)) {
    if (p_prime_scan(r, principal, i).prime) out.push_back(i);
  }
  return out;
}

std::vector<AxiomReport> verify_ring_topology(const FiniteRing& r,
                                              const Caps& caps) {
  const auto ideals = two_sided_ideals(r, caps);
  const auto principal = principal_masks(r);
  std::vector<TwoSidedIdeal> primes;
  for (const auto& i : ideals) {
    if (p_prime_scan(r, principal, i).prime) primes.push_back(i);
  }
  const std::size_t k = ideals.size();
  std::vector<boost::dynamic_bitset<>> v;
  for (const auto& i : ideals) {
    boost::dynamic_bitset<> m(primes.size());
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i.is_subset_of(primes[j])) m.set(j);
    }
    v.push_back(std::move(m));
  }
  auto index_of = [&](const TwoSidedIdeal& s) {
    return static_cast<std::size_t>(
        std::lower_bound(ideals.begin(), ideals.end(), s) - ideals.begin());
  };
  std::vector<std::vector<std::size_t>> sum(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const ElementMask m = ideal_closure(
          r, ideals[i].mask(r.order()) | ideals[j].mask(r.order()));
      sum[i][j] = sum[j][i] = index_of(TwoSidedIdeal(members(m)));
    }
  }

  AxiomReport uni;
  uni.tag = "union";
  for (std::size_t i = 0; i < k && uni.passed(); ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const std::size_t meet = index_of(intersection(ideals[i], ideals[j]));
      if (v[meet] == (v[i] | v[j])) continue;
      uni.status = CheckStatus::kFail;
      const auto diff = v[meet] ^ (v[i] | v[j]);
      uni.witness = {{"I", ideals[i].elements()},
                     {"J", ideals[j].elements()},
                     {"P", primes[diff.find_first()].elements()}};
      break;
    }
  }
  AxiomReport fam;
  fam.tag = "family";
  for (std::size_t i = 0; i < k && fam.passed(); ++i) {
    for (std::size_t j = i; j < k && fam.passed(); ++j) {
      for (std::size_t l = j; l < k; ++l) {
        if (v[sum[sum[i][j]][l]] == (v[i] & v[j] & v[l])) continue;
        fam.status = CheckStatus::kFail;
        fam.witness = {{"I", ideals[i].elements()},
                       {"J", ideals[j].elements()},
                       {"K", ideals[l].elements()}};
        break;
      }
    }
  }
  return {std::move(uni), std::move(fam)};
}

WindowResult z_pprime_window_check(std::int64_t n, std::int64_t bound) {
  if (n < 2 || bound < n) {
    throw Error(ErrorKind::kInvalidArgument, "need n >= 2 and bound >= n");
  }
  for (std::int64_t i = 0; i < 2 * bound; ++i) {
    const std::int64_t a = window_value(i);
    if (a % n == 0) continue;
    for (std::int64_t j = 0; j < 2 * bound; ++j) {
      const std::int64_t b = window_value(j);
      if (b % n == 0) continue;
      if (std::lcm(a, b) % n == 0) return {true, std::make_pair(a, b)};
    }
  }
  return {};
}

}  // namespace specdec
