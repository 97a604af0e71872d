#include "specdec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "specdec/error.hpp"

namespace specdec {

namespace {

using Members = boost::dynamic_bitset<>;

void require_normal(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) {
    throw Error(ErrorKind::kNotNormal, "subgroup is not normal in the carrier");
  }
}

// Answers primality queries for one G-group, sharing the normal closures
// of conjugacy-class representatives across queries.
class PrimalityTester {
 public:
  PrimalityTester(const GGroup& x, PrimalityNotion notion, const Caps& caps)
      : x_(x), notion_(notion), caps_(caps) {
    if (notion_ != PrimalityNotion::kIntersectionPrime) return;
    const FiniteGroup& h = x_.carrier();
    if (h.order() > caps_.normal_enumeration) {
      throw Error(ErrorKind::kOrderCapExceeded,
                  "intersection primality capped at carrier order " +
                      std::to_string(caps_.normal_enumeration));
    }
    std::vector<Subgroup> closures;
    for (const auto& cls : conjugacy_classes(h)) {
      if (cls.front() == 0) continue;
      const Element rep = cls.front();
      closures.push_back(normal_closure(h, std::span<const Element>(&rep, 1)));
    }
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()),
                   closures.end());
    for (const Subgroup& s : closures) principal_.push_back(s.mask(h.order()));
  }

  bool operator()(const Subgroup& n) const {
    if (notion_ == PrimalityNotion::kQuotientDomain) {
      return is_domain(quotient_ggroup(x_, n), caps_);
    }
    // Every normal I not inside P contains some u(x) with x outside P, so the
    // pair condition only needs checking on the principal normal subgroups.
    const ElementMask p = n.mask(x_.carrier().order());
    std::vector<const ElementMask*> outside;
    for (const ElementMask& m : principal_) {
      if (!m.is_subset_of(p)) outside.push_back(&m);
    }
    for (std::size_t i = 0; i < outside.size(); ++i) {
      for (std::size_t j = i + 1; j < outside.size(); ++j) {
        if ((*outside[i] & *outside[j]).is_subset_of(p)) return false;
      }
    }
    return true;
  }

 private:
  const GGroup& x_;
  PrimalityNotion notion_;
  const Caps& caps_;
  std::vector<ElementMask> principal_;
};

Members members_of(const Spectrum& s, const Subgroup& ideal, bool starred) {
  const std::size_t limit = starred ? s.starred_size() : s.primes.size();
  Members out(s.primes.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (ideal.is_subset_of(s.primes[i])) out.set(i);
  }
  return out;
}

std::vector<std::size_t> indices(const Members& m) {
  std::vector<std::size_t> out;
  for (auto i = m.find_first(); i != Members::npos; i = m.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

Subgroup meet_of(const Spectrum& s, const Members& m) {
  Subgroup out = whole_group(s.owner.carrier());
  for (std::size_t i : indices(m)) out = intersection(out, s.primes[i]);
  return out;
}

bool irreducible_members(const std::vector<Members>& family, const Members& c) {
  if (c.none()) return false;
  std::vector<const Members*> smaller;
  for (const Members& m : family) {
    if (m != c && m.is_subset_of(c)) smaller.push_back(&m);
  }
  for (std::size_t i = 0; i < smaller.size(); ++i) {
    for (std::size_t j = i; j < smaller.size(); ++j) {
      if ((*smaller[i] | *smaller[j]) == c) return false;
    }
  }
  return true;
}

std::vector<Members> closed_family(const Spectrum& s, bool starred) {
  std::vector<Members> family{Members(s.primes.size())};
  for (const Subgroup& n : s.normals) {
    family.push_back(members_of(s, n, starred));
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// The product IJ of two normal subgroups, which is their join.
Subgroup normal_product(const FiniteGroup& g, const Subgroup& a,
                        const Subgroup& b) {
  ElementMask m(g.order());
  for (Element x : a.elements()) {
    for (Element y : b.elements()) m.set(g.mul(x, y));
  }
  return Subgroup::from_mask(m);
}

std::vector<Element> prime_indices(const Members& m) {
  std::vector<Element> out;
  for (std::size_t i : indices(m)) out.push_back(static_cast<Element>(i));
  return out;
}

}  // namespace

const char* notion_name(PrimalityNotion notion) {
  switch (notion) {
    case PrimalityNotion::kQuotientDomain: return "quotient-domain";
    case PrimalityNotion::kIntersectionPrime: return "intersection";
  }
  return "?";
}

PrimalityNotion parse_notion(std::string_view text) {
  if (text == "quotient-domain" || text == "quotient") {
    return PrimalityNotion::kQuotientDomain;
  }
  if (text == "intersection") return PrimalityNotion::kIntersectionPrime;
  throw Error(ErrorKind::kInputParseError,
              "unknown primality notion '" + std::string(text) + "'");
}

bool is_prime(const GGroup& x, const Subgroup& n, PrimalityNotion notion,
              const Caps& caps) {
  require_normal(x.carrier(), n);
  return PrimalityTester(x, notion, caps)(n);
}

Spectrum spectrum(const GGroup& x, PrimalityNotion notion, const Caps& caps) {
  Spectrum s{x, notion, normal_subgroups(x.carrier(), caps), {}, {}};
  const PrimalityTester prime(s.owner, notion, caps);
  for (const Subgroup& n : s.normals) {
    if (prime(n)) s.primes.push_back(n);
  }
  const std::size_t k = s.primes.size();
  s.containment.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      s.containment[i][j] = s.primes[i].is_subset_of(s.primes[j]);
    }
  }
  return s;
}

ClosedSet v_set(const Spectrum& s, const Subgroup& ideal, bool starred) {
  require_normal(s.owner.carrier(), ideal);
  return ClosedSet{ideal, starred, indices(members_of(s, ideal, starred))};
}

Subgroup radical(const Spectrum& s) {
  return radical_of(s, trivial_subgroup());
}

Subgroup radical_of(const Spectrum& s, const Subgroup& ideal) {
  require_normal(s.owner.carrier(), ideal);
  return meet_of(s, members_of(s, ideal, false));
}

bool is_radical_ideal(const Spectrum& s, const Subgroup& ideal) {
  return radical_of(s, ideal) == ideal;
}

Subgroup radical(const GGroup& x, PrimalityNotion notion, const Caps& caps) {
  return radical(spectrum(x, notion, caps));
}

Subgroup radical_of(const GGroup& x, const Subgroup& ideal,
                    PrimalityNotion notion, const Caps& caps) {
  return radical_of(spectrum(x, notion, caps), ideal);
}

bool is_irreducible(const Spectrum& s, const ClosedSet& c) {
  Members m(s.primes.size());
  for (std::size_t i : c.members) m.set(i);
  return irreducible_members(closed_family(s, c.starred), m);
}

std::vector<AxiomReport> verify_axioms(const GGroup& x, PrimalityNotion notion,
                                       const Caps& caps) {
  return verify_axioms(spectrum(x, notion, caps), caps);
}

std::vector<AxiomReport> verify_axioms(const Spectrum& s, const Caps& caps) {
  const FiniteGroup& h = s.owner.carrier();
  const auto& normals = s.normals;
  const std::size_t n = normals.size();

  std::map<std::vector<Element>, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of[normals[i].elements()] = i;
  std::vector<Members> v;
  for (const Subgroup& ideal : normals) v.push_back(members_of(s, ideal, false));

  std::vector<AxiomReport> out;

  AxiomReport uni;
  uni.tag = "union";
  for (std::size_t i = 0; i < n && uni.passed(); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Subgroup meet = intersection(normals[i], normals[j]);
      const Members& lhs = v[index_of.at(meet.elements())];
      const Members rhs = v[i] | v[j];
      if (lhs == rhs) continue;
      const Members diff = lhs ^ rhs;
      uni.status = CheckStatus::kFail;
      uni.witness = {{"I", normals[i].elements()},
                     {"J", normals[j].elements()},
                     {"P", s.primes[diff.find_first()].elements()}};
      uni.detail = lhs.is_subset_of(rhs)
                       ? "P contains I or J but not their intersection"
                       : "P contains the intersection but neither I nor J";
      break;
    }
  }
  out.push_back(std::move(uni));

  AxiomReport fam;
  fam.tag = "family";
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      join[i][j] = join[j][i] =
          index_of.at(normal_product(h, normals[i], normals[j]).elements());
    }
  }
  for (std::size_t i = 0; i < n && fam.passed(); ++i) {
    for (std::size_t j = i; j < n && fam.passed(); ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const std::size_t top = join[join[i][j]][k];
        if (v[top] == (v[i] & v[j] & v[k])) continue;
        fam.status = CheckStatus::kFail;
        fam.witness = {{"I", normals[i].elements()},
                       {"J", normals[j].elements()},
                       {"K", normals[k].elements()}};
        break;
      }
    }
  }
  out.push_back(std::move(fam));

  AxiomReport irr;
  irr.tag = "irreducible";
  const auto family = closed_family(s, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& ideal = normals[i];
    if (meet_of(s, v[i]) != ideal) continue;
    const bool irreducible = irreducible_members(family, v[i]);
    const bool prime = std::binary_search(s.primes.begin(), s.primes.end(), ideal);
    if (irreducible == prime) continue;
    irr.status = CheckStatus::kFail;
    irr.witness = {{"I", ideal.elements()},
                   {"V(I)", prime_indices(v[i])}};
    irr.detail = irreducible ? "V(I) irreducible, I radical, I not prime"
                             : "I prime but V(I) reducible";
    break;
  }
  out.push_back(std::move(irr));

  // Longest strictly ascending chain of closed sets, bounded by |Spec| + 1.
  AxiomReport noe;
  noe.tag = "noetherian";
  std::vector<std::size_t> chain(family.size(), 1);
  std::size_t longest = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[j] != family[i] && family[j].is_subset_of(family[i]) &&
          family[j].count() < family[i].count()) {
        chain[i] = std::max(chain[i], chain[j] + 1);
      }
    }
    longest = std::max(longest, chain[i]);
  }
  noe.detail = "longest chain " + std::to_string(longest) + " over " +
               std::to_string(family.size()) + " closed sets";
  if (longest > s.primes.size() + 1) noe.status = CheckStatus::kFail;
  out.push_back(std::move(noe));

  out.push_back(check_injection_axiom(s.owner, caps));
  out.push_back(check_meet_axiom(s.owner, caps));
  out.push_back(check_quotient_axiom(s.owner, caps));
  return out;
}

}  // namespace specdec
