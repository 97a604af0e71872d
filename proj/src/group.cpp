#include "specdec/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "specdec/error.hpp"

namespace specdec {

namespace {

std::vector<Element> compute_inverses(std::size_t n,
                                      const std::vector<Element>& table) {
  std::vector<Element> inverse(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] == 0 && table[b * n + a] == 0) {
        inverse[a] = static_cast<Element>(b);
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kNoInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
  return inverse;
}

// Compose left to right: apply `a` first, then `b`.
Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

// A few elements generating `s`, chosen greedily in element order.
std::vector<Element> small_generating_set(const FiniteGroup& g,
                                          const Subgroup& s) {
  std::vector<Element> gens;
  ElementMask covered(g.order());
  covered.set(0);
  for (Element e : s.elements()) {
    if (covered.test(e)) continue;
    gens.push_back(e);
    const Subgroup sub = generated_subgroup(g, gens);
    for (Element x : sub.elements()) covered.set(x);
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const CayleyTable& table,
                                           std::string name,
                                           const Caps& caps) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::kNotLatinSquare, "empty table");
  if (n > caps.group_order) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(caps.group_order));
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(ErrorKind::kNotLatinSquare,
                  "row " + std::to_string(a) + " has wrong length");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error(ErrorKind::kNotLatinSquare,
                    "entry out of range at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      }
      flat[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      const Element r = flat[a * n + b];
      const Element c = flat[b * n + a];
      if (row_seen[r] || col_seen[c]) {
        throw Error(ErrorKind::kNotLatinSquare,
                    "repeated entry in row/column " + std::to_string(a));
      }
      row_seen[r] = col_seen[c] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (flat[a] != a || flat[a * n] != a) {
      throw Error(ErrorKind::kNoIdentityAtZero,
                  "element 0 does not act as identity on " + std::to_string(a));
    }
  }
  auto inverse = compute_inverses(n, flat);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          throw Error(ErrorKind::kNonAssociative,
                      "(" + std::to_string(a) + "*" + std::to_string(b) +
                          ")*" + std::to_string(c));
        }
      }
    }
  }
  return FiniteGroup(n, std::move(flat), std::move(inverse), std::move(name));
}

FiniteGroup FiniteGroup::from_permutation_generators(
    std::size_t degree, const std::vector<Permutation>& generators,
    std::string name, const Caps& caps) {
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw Error(ErrorKind::kInvalidPermutation,
                  "generator length differs from degree");
    }
    std::vector<bool> hit(degree);
    for (std::size_t v : g) {
      if (v >= degree || hit[v]) {
        throw Error(ErrorKind::kInvalidPermutation, "not a bijection");
      }
      hit[v] = true;
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(elements[head], g);
      if (index.contains(next)) continue;
      if (elements.size() >= caps.group_order) {
        throw Error(ErrorKind::kOrderCapExceeded,
                    "permutation closure exceeds cap " +
                        std::to_string(caps.group_order));
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return from_trusted_table(n, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order,
                                            std::vector<Element> flat_table,
                                            std::string name) {
  for (std::size_t a = 0; a < order; ++a) {
    if (flat_table[a] != a || flat_table[a * order] != a) {
      throw Error(ErrorKind::kNoIdentityAtZero, "constructed table");
    }
  }
  auto inverse = compute_inverses(order, flat_table);
  return FiniteGroup(order, std::move(flat_table), std::move(inverse),
                     std::move(name));
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

CayleyTable FiniteGroup::table() const {
  CayleyTable out(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) out[a][b] = table_[a * order_ + b];
  }
  return out;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

Subgroup Subgroup::checked(const FiniteGroup& group,
                           std::vector<Element> elements) {
  Subgroup s(std::move(elements));
  if (s.elements_.empty() || s.elements_.front() != 0) {
    throw Error(ErrorKind::kInvalidArgument, "subgroup must contain 0");
  }
  if (s.elements_.back() >= group.order()) {
    throw Error(ErrorKind::kInvalidArgument, "element index out of range");
  }
  const ElementMask m = s.mask(group.order());
  for (Element a : s.elements_) {
    if (!m.test(group.inv(a))) {
      throw Error(ErrorKind::kInvalidArgument, "not closed under inverse");
    }
    for (Element b : s.elements_) {
      if (!m.test(group.mul(a, b))) {
        throw Error(ErrorKind::kInvalidArgument, "not closed under product");
      }
    }
  }
  return s;
}

Subgroup Subgroup::from_mask(const ElementMask& mask) {
  std::vector<Element> out;
  out.reserve(mask.count());
  for (auto i = mask.find_first(); i != ElementMask::npos;
       i = mask.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  Subgroup s;
  s.elements_ = std::move(out);
  return s;
}

bool Subgroup::contains(Element e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return size() <= other.size() &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

ElementMask Subgroup::mask(std::size_t group_order) const {
  ElementMask m(group_order);
  for (Element e : elements_) m.set(e);
  return m;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.elements_ <=> b.elements_;
}

// ---------------------------------------------------------------------------

GroupHomomorphism GroupHomomorphism::checked(const FiniteGroup& domain,
                                             const FiniteGroup& codomain,
                                             std::vector<Element> image) {
  if (image.size() != domain.order()) {
    throw Error(ErrorKind::kInvalidMorphism, "image table has wrong length");
  }
  for (Element e : image) {
    if (e >= codomain.order()) {
      throw Error(ErrorKind::kInvalidMorphism, "image index out of range");
    }
  }
  if (image[0] != 0) {
    throw Error(ErrorKind::kInvalidMorphism, "identity not mapped to identity");
  }
  for (std::size_t a = 0; a < domain.order(); ++a) {
    for (std::size_t b = 0; b < domain.order(); ++b) {
      const Element lhs = image[domain.mul(a, b)];
      const Element rhs = codomain.mul(image[a], image[b]);
      if (lhs != rhs) {
        throw Error(ErrorKind::kInvalidMorphism,
                    "f(" + std::to_string(a) + "*" + std::to_string(b) +
                        ") != f(a)*f(b)");
      }
    }
  }
  return GroupHomomorphism(std::move(image), codomain.order());
}

GroupHomomorphism GroupHomomorphism::identity(const FiniteGroup& group) {
  std::vector<Element> image(group.order());
  std::iota(image.begin(), image.end(), Element{0});
  return GroupHomomorphism(std::move(image), group.order());
}

GroupHomomorphism GroupHomomorphism::trivial(const FiniteGroup& domain,
                                             const FiniteGroup& codomain) {
  return GroupHomomorphism(std::vector<Element>(domain.order(), 0),
                           codomain.order());
}

bool GroupHomomorphism::is_injective() const {
  std::vector<bool> hit(codomain_order_);
  for (Element e : image_) {
    if (hit[e]) return false;
    hit[e] = true;
  }
  return true;
}

bool GroupHomomorphism::is_surjective() const {
  std::vector<bool> hit(codomain_order_);
  std::size_t count = 0;
  for (Element e : image_) {
    if (!hit[e]) ++count;
    hit[e] = true;
  }
  return count == codomain_order_;
}

Subgroup GroupHomomorphism::kernel() const {
  std::vector<Element> out;
  for (std::size_t a = 0; a < image_.size(); ++a) {
    if (image_[a] == 0) out.push_back(static_cast<Element>(a));
  }
  return Subgroup(std::move(out));
}

GroupHomomorphism GroupHomomorphism::inverse() const {
  std::vector<Element> inv(codomain_order_, 0);
  for (std::size_t a = 0; a < image_.size(); ++a) {
    inv[image_[a]] = static_cast<Element>(a);
  }
  return GroupHomomorphism(std::move(inv), image_.size());
}

// ---------------------------------------------------------------------------

Subgroup trivial_subgroup() { return Subgroup(); }

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& group,
                            std::span<const Element> generators) {
  ElementMask seen(group.order());
  seen.set(0);
  std::vector<Element> list{0};
  for (std::size_t head = 0; head < list.size(); ++head) {
    for (Element g : generators) {
      const Element next = group.mul(list[head], g);
      if (!seen.test(next)) {
        seen.set(next);
        list.push_back(next);
      }
    }
  }
  return Subgroup::from_mask(seen);
}

Subgroup join(const FiniteGroup& group, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens = small_generating_set(group, a);
  for (Element e : small_generating_set(group, b)) gens.push_back(e);
  return generated_subgroup(group, gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return Subgroup(std::move(out));
}

Subgroup normal_closure(const FiniteGroup& group,
                        std::span<const Element> elements) {
  ElementMask conjugates(group.order());
  for (Element s : elements) {
    for (Element g = 0; g < group.order(); ++g) conjugates.set(group.conj(g, s));
  }
  const Subgroup gens = Subgroup::from_mask(conjugates);
  return generated_subgroup(group, gens.elements());
}

Subgroup commutator_subgroup(const FiniteGroup& group, const Subgroup& i,
                             const Subgroup& j) {
  ElementMask comms(group.order());
  for (Element x : i.elements()) {
    for (Element y : j.elements()) comms.set(group.commutator(x, y));
  }
  const Subgroup gens = Subgroup::from_mask(comms);
  return generated_subgroup(group, gens.elements());
}

Subgroup center(const FiniteGroup& group) {
  std::vector<Element> out;
  for (Element z = 0; z < group.order(); ++z) {
    bool central = true;
    for (Element g = 0; g < group.order() && central; ++g) {
      central = group.commute(z, g);
    }
    if (central) out.push_back(z);
  }
  return Subgroup(std::move(out));
}

bool is_normal(const FiniteGroup& group, const Subgroup& subgroup) {
  const ElementMask m = subgroup.mask(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    for (Element s : subgroup.elements()) {
      if (!m.test(group.conj(g, s))) return false;
    }
  }
  return true;
}

bool commute_elementwise(const FiniteGroup& group, const Subgroup& a,
                         const Subgroup& b) {
  for (Element x : a.elements()) {
    for (Element y : b.elements()) {
      if (!group.commute(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group) {
  std::vector<std::vector<Element>> classes;
  ElementMask assigned(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    if (assigned.test(x)) continue;
    ElementMask cls(group.order());
    for (Element g = 0; g < group.order(); ++g) cls.set(group.conj(g, x));
    assigned |= cls;
    classes.push_back(Subgroup::from_mask(cls).elements());
  }
  return classes;
}

Quotient quotient(const FiniteGroup& group, const Subgroup& normal) {
  if (!normal.contains(0) || !is_normal(group, normal)) {
    throw Error(ErrorKind::kNotNormal, "quotient by a non-normal subgroup");
  }
  const std::size_t n = group.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> label(n, kUnset);
  std::vector<Element> reps;
  for (Element e = 0; e < n; ++e) {
    if (label[e] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(e);
    for (Element k : normal.elements()) label[group.mul(e, k)] = c;
  }
  const std::size_t m = reps.size();
  std::vector<Element> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      flat[a * m + b] = label[group.mul(reps[a], reps[b])];
    }
  }
  std::string name = group.name().empty() ? std::string{}
                                          : group.name() + "/N";
  FiniteGroup q = FiniteGroup::from_trusted_table(m, std::move(flat),
                                                  std::move(name));
  GroupHomomorphism proj = GroupHomomorphism::checked(group, q, label);
  return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

FiniteGroup subgroup_as_group(const FiniteGroup& group,
                              const Subgroup& subgroup) {
  const auto& els = subgroup.elements();
  const std::size_t m = els.size();
  std::vector<Element> position(group.order(), 0);
  for (std::size_t i = 0; i < m; ++i) position[els[i]] = static_cast<Element>(i);
  std::vector<Element> flat(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      flat[a * m + b] = position[group.mul(els[a], els[b])];
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(flat), {});
}

std::vector<Subgroup> join_closure(const FiniteGroup& group,
                                   const std::vector<Subgroup>& atoms,
                                   std::size_t max_results) {
  std::set<Subgroup> distinct_atoms(atoms.begin(), atoms.end());
  struct Atom {
    ElementMask mask;
    std::vector<Element> gens;
  };
  std::vector<Atom> atom_data;
  for (const auto& a : distinct_atoms) {
    if (a.is_trivial()) continue;
    atom_data.push_back({a.mask(group.order()), small_generating_set(group, a)});
  }

  struct Node {
    ElementMask mask;
    std::vector<Element> gens;
  };
  std::map<std::vector<Element>, std::size_t> seen;
  std::vector<Node> nodes;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s, std::vector<Element> gens) {
    if (seen.contains(s.elements())) return;
    if (found.size() >= max_results) {
      throw Error(ErrorKind::kOrderCapExceeded,
                  "more than " + std::to_string(max_results) + " subgroups");
    }
    seen.emplace(s.elements(), found.size());
    nodes.push_back({s.mask(group.order()), std::move(gens)});
    found.push_back(std::move(s));
  };
  add(trivial_subgroup(), {});
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (const Atom& atom : atom_data) {
      if (atom.mask.is_subset_of(nodes[head].mask)) continue;
      std::vector<Element> gens = nodes[head].gens;
      gens.insert(gens.end(), atom.gens.begin(), atom.gens.end());
      Subgroup joined = generated_subgroup(group, gens);
      add(std::move(joined), std::move(gens));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& group,
                                       const Caps& caps) {
  if (group.order() > caps.normal_enumeration) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "normal subgroup enumeration capped at order " +
                    std::to_string(caps.normal_enumeration));
  }
  // Each normal subgroup is the join of the normal closures of its
  // conjugacy classes.
  std::vector<Subgroup> atoms;
  for (const auto& cls : conjugacy_classes(group)) {
    atoms.push_back(normal_closure(group, std::span(cls.data(), 1)));
  }
  return join_closure(group, atoms);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group,
                                    std::size_t order_cap) {
  if (group.order() > order_cap) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "subgroup enumeration capped at order " +
                    std::to_string(order_cap));
  }
  std::vector<Subgroup> atoms;
  for (Element x = 1; x < group.order(); ++x) {
    atoms.push_back(generated_subgroup(group, std::span(&x, 1)));
  }
  return join_closure(group, atoms);
}

GroupInvariants invariants(const FiniteGroup& group) {
  GroupInvariants inv;
  inv.order = group.order();
  inv.abelian = group.is_abelian();
  for (Element x = 0; x < group.order(); ++x) {
    inv.element_orders.push_back(group.element_order(x));
  }
  std::sort(inv.element_orders.begin(), inv.element_orders.end());
  inv.center_size = center(group).size();
  const Subgroup all = whole_group(group);
  inv.derived_size = commutator_subgroup(group, all, all).size();
  return inv;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteGroup& a, const FiniteGroup& b)
      : a_(a), b_(b), image_(a.order(), kUnset), used_(b.order()) {
    class_size_a_ = class_sizes(a);
    class_size_b_ = class_sizes(b);
    choose_generators();
  }

  std::optional<std::vector<Element>> run() {
    image_[0] = 0;
    used_.set(0);
    known_.push_back(0);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  static std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
    std::vector<std::size_t> sizes(g.order());
    for (const auto& cls : conjugacy_classes(g)) {
      for (Element e : cls) sizes[e] = cls.size();
    }
    return sizes;
  }

  // Greedy: highest element order first, ties by index.
  void choose_generators() {
    std::vector<Element> order(a_.order());
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      return a_.element_order(x) > a_.element_order(y);
    });
    ElementMask covered(a_.order());
    covered.set(0);
    for (Element e : order) {
      if (covered.test(e)) continue;
      gens_.push_back(e);
      const Subgroup sub = generated_subgroup(a_, gens_);
      for (Element x : sub.elements()) covered.set(x);
    }
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return known_.size() == a_.order();
    const Element g = gens_[k];
    for (Element c = 1; c < b_.order(); ++c) {
      if (used_.test(c)) continue;
      if (b_.element_order(c) != a_.element_order(g)) continue;
      if (class_size_b_[c] != class_size_a_[g]) continue;
      const std::size_t mark = known_.size();
      if (close_under(k, c) && extend(k + 1)) return true;
      for (std::size_t i = mark; i < known_.size(); ++i) {
        used_.reset(image_[known_[i]]);
        image_[known_[i]] = kUnset;
      }
      known_.resize(mark);
    }
    return false;
  }

  // Assigns g_k -> c and propagates along the Cayley graph of <g_0..g_k>.
  // Fails on any inconsistency or collision.
  bool close_under(std::size_t k, Element c) {
    auto assign = [&](Element x, Element y) {
      if (image_[x] != kUnset) return image_[x] == y;
      if (used_.test(y)) return false;
      image_[x] = y;
      used_.set(y);
      known_.push_back(x);
      return true;
    };
    if (!assign(gens_[k], c)) return false;
    for (std::size_t head = 0; head < known_.size(); ++head) {
      const Element x = known_[head];
      for (std::size_t j = 0; j <= k; ++j) {
        const Element y = a_.mul(x, gens_[j]);
        if (!assign(y, b_.mul(image_[x], image_[gens_[j]]))) return false;
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Element> gens_;
  std::vector<Element> image_;
  ElementMask used_;
  std::vector<Element> known_;
  std::vector<std::size_t> class_size_a_;
  std::vector<std::size_t> class_size_b_;
};

}  // namespace

std::optional<GroupHomomorphism> are_isomorphic(const FiniteGroup& a,
                                                const FiniteGroup& b,
                                                const Caps& caps) {
  if (a.order() > caps.isomorphism || b.order() > caps.isomorphism) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "isomorphism search capped at order " +
                    std::to_string(caps.isomorphism));
  }
  if (a.order() != b.order()) return std::nullopt;
  if (invariants(a) != invariants(b)) return std::nullopt;
  IsomorphismSearch search(a, b);
  auto image = search.run();
  if (!image) return std::nullopt;
  auto hom = GroupHomomorphism::checked(a, b, std::move(*image));
  if (!hom.is_injective()) return std::nullopt;
  return hom;
}

}  // namespace specdec
