#include "specdec/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"

namespace specdec {

namespace {

std::string sizes(const std::vector<Subgroup>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ",";
    out += std::to_string(s.size());
  }
  return out;
}

Subgroup meet_all(const FiniteGroup& g, const std::vector<Subgroup>& v) {
  Subgroup out = whole_group(g);
  for (const auto& s : v) out = intersection(out, s);
  return out;
}

// Union-find over the proper primes; edges are containments.
std::vector<std::vector<std::size_t>> containment_components(const Spectrum& s) {
  const std::size_t k = s.starred_size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s.containment[i][j]) parent[root(i)] = root(j);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t r = root(i);
    if (slot[r] == k) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

class Transcript {
 public:
  explicit Transcript(DecompositionCertificate& cert) : cert_(cert) {}
  void record(std::string check, bool ok, std::string detail = {}) {
    cert_.transcript.push_back({std::move(check), ok, std::move(detail)});
    if (!ok) cert_.status = DecompositionStatus::kReconstructionFailed;
  }

 private:
  DecompositionCertificate& cert_;
};

void verify_product_map(const FiniteGroup& g,
                        const std::vector<Subgroup>& factors, Transcript& t) {
  FiniteGroup domain = trivial_group();
  std::vector<Element> images{0};
  for (const Subgroup& f : factors) {
    domain = direct_product(domain, subgroup_as_group(g, f));
    std::vector<Element> next;
    next.reserve(images.size() * f.size());
    for (Element a : images) {
      for (Element b : f.elements()) next.push_back(g.mul(a, b));
    }
    images = std::move(next);
  }
  if (domain.order() != g.order()) {
    t.record("product map", false,
             "factor orders multiply to " + std::to_string(domain.order()));
    return;
  }
  try {
    const auto m = GroupHomomorphism::checked(domain, g, images);
    t.record("product map", m.is_injective() && m.is_surjective(),
             "multiplication from the external product");
  } catch (const Error& e) {
    t.record("product map", false, e.what());
  }
}

bool multiset_isomorphic(const FiniteGroup& g, const std::vector<Subgroup>& a,
                         const std::vector<Subgroup>& b, const Caps& caps) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Subgroup& x : a) {
    const FiniteGroup gx = subgroup_as_group(g, x);
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (used[j] || b[j].size() != x.size()) continue;
      if (are_isomorphic(gx, subgroup_as_group(g, b[j]), caps)) {
        used[j] = found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

const char* decomposition_status_name(DecompositionStatus status) {
  switch (status) {
    case DecompositionStatus::kOk: return "ok";
    case DecompositionStatus::kRadicalNotTrivial: return "RadicalNotTrivial";
    case DecompositionStatus::kReconstructionFailed: return "ReconstructionFailed";
  }
  return "?";
}

const char* oracle_match_name(OracleMatch m) {
  switch (m) {
    case OracleMatch::kMatch: return "match";
    case OracleMatch::kMismatch: return "mismatch";
    case OracleMatch::kSkipped: return "skipped";
  }
  return "?";
}

bool is_directly_indecomposable(const FiniteGroup& g, const Caps& caps) {
  if (g.order() == 1) return false;
  const auto normals = normal_subgroups(g, caps);
  for (std::size_t i = 1; i + 1 < normals.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < normals.size(); ++j) {
      if (normals[i].size() * normals[j].size() != g.order()) continue;
      if (intersection(normals[i], normals[j]).is_trivial()) return false;
    }
  }
  return true;
}

DecompositionCertificate decompose(const GGroup& x, PrimalityNotion notion,
                                   const Caps& caps) {
  const FiniteGroup& g = x.carrier();
  DecompositionCertificate cert;
  cert.notion = notion;
  Transcript t(cert);

  const Spectrum s = spectrum(x, notion, caps);
  cert.radical = radical(s);
  if (!cert.radical.is_trivial()) {
    cert.status = DecompositionStatus::kRadicalNotTrivial;
    cert.transcript.push_back(
        {"radical", false, "order " + std::to_string(cert.radical.size())});
    return cert;
  }
  t.record("radical", true, "trivial");

  cert.components = containment_components(s);
  for (const auto& comp : cert.components) {
    std::vector<Subgroup> members;
    for (std::size_t i : comp) members.push_back(s.primes[i]);
    cert.complements.push_back(meet_all(g, members));
  }
  const std::size_t n = cert.components.size();
  if (n == 0) {
    // Only the trivial group has no proper primes.
    cert.complements = {trivial_subgroup()};
  }
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
    std::vector<Subgroup> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(cert.complements[j]);
    }
    cert.factors.push_back(meet_all(g, others));
  }
  const std::size_t k = cert.factors.size();

  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const ClosedSet v = v_set(s, cert.complements[i], true);
    ok = ok && v.members == cert.components[i];
  }
  t.record("components", ok,
           std::to_string(n) + " components of " +
               std::to_string(s.starred_size()) + " proper primes");

  ok = true;
  for (const Subgroup& h : cert.complements) ok = ok && is_prime(x, h, notion, caps);
  t.record("prime complements", ok, "orders " + sizes(cert.complements));

  t.record("complements meet trivially",
           meet_all(g, cert.complements).is_trivial());

  ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ok = ok && intersection(cert.factors[i], cert.factors[j]).is_trivial() &&
           commute_elementwise(g, cert.factors[i], cert.factors[j]);
    }
  }
  t.record("factors independent", ok, "orders " + sizes(cert.factors));

  ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    Subgroup gen = trivial_subgroup();
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) gen = join(g, gen, cert.factors[j]);
    }
    ok = ok && gen == cert.complements[i];
  }
  t.record("complement generation", ok);

  verify_product_map(g, cert.factors, t);

  bool iso = true;
  bool indec = true;
  for (std::size_t i = 0; i < k; ++i) {
    const FiniteGroup factor = subgroup_as_group(g, cert.factors[i]);
    const FiniteGroup q = quotient(g, cert.complements[i]).group;
    iso = iso && are_isomorphic(factor, q, caps).has_value();
    indec = indec && (g.order() == 1 || is_directly_indecomposable(factor, caps));
  }
  t.record("factor quotients", iso, "G_i isomorphic to G/H_i");
  t.record("factor indecomposable", indec);
  return cert;
}

std::vector<std::vector<Subgroup>> brute_force_decompositions(
    const FiniteGroup& g, const Caps& caps) {
  const std::size_t n = g.order();
  if (n > caps.decomposition_oracle) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "decomposition oracle capped at order " +
                    std::to_string(caps.decomposition_oracle));
  }
  std::vector<Subgroup> candidates;
  for (const Subgroup& s : all_subgroups(g, n)) {
    if (!s.is_trivial() && n % s.size() == 0 &&
        is_directly_indecomposable(subgroup_as_group(g, s), caps)) {
      candidates.push_back(s);
    }
  }
  std::vector<ElementMask> centralizer(n, ElementMask(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.commute(a, b)) centralizer[a].set(b);
    }
  }
  std::vector<ElementMask> masks;
  std::vector<ElementMask> commutant;
  for (const Subgroup& c : candidates) {
    masks.push_back(c.mask(n));
    ElementMask m(n);
    m.set();
    for (Element e : c.elements()) m &= centralizer[e];
    commutant.push_back(std::move(m));
  }

  std::vector<std::vector<Subgroup>> out;
  std::vector<std::size_t> chosen;
  // product: the subgroup generated so far; cent: its centralizer.
  auto search = [&](auto&& self, std::size_t start, const ElementMask& product,
                    const ElementMask& cent) -> void {
    const std::size_t size = product.count();
    if (size == n) {
      std::vector<Subgroup> f;
      for (std::size_t i : chosen) f.push_back(candidates[i]);
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      const Subgroup& c = candidates[i];
      if ((n / size) % c.size() != 0) continue;
      if (!masks[i].is_subset_of(cent)) continue;
      if ((masks[i] & product).count() != 1) continue;
      ElementMask next(n);
      for (auto a = product.find_first(); a != ElementMask::npos;
           a = product.find_next(a)) {
        for (Element b : c.elements()) next.set(g.mul(static_cast<Element>(a), b));
      }
      chosen.push_back(i);
      self(self, i + 1, next, cent & commutant[i]);
      chosen.pop_back();
    }
  };
  ElementMask start(n);
  start.set(0);
  ElementMask all(n);
  all.set();
  if (n == 1) return {};
  search(search, 0, start, all);
  std::sort(out.begin(), out.end());
  return out;
}

OracleMatch oracle_match(const DecompositionCertificate& cert,
                         const FiniteGroup& g, const Caps& caps) {
  if (!cert.verified() || g.order() > caps.decomposition_oracle) {
    return OracleMatch::kSkipped;
  }
  std::vector<Subgroup> mine = cert.factors;
  std::sort(mine.begin(), mine.end());
  if (g.order() == 1) return OracleMatch::kMatch;
  const auto all = brute_force_decompositions(g, caps);
  if (std::find(all.begin(), all.end(), mine) == all.end()) {
    return OracleMatch::kMismatch;
  }
  for (const auto& f : all) {
    if (!multiset_isomorphic(g, mine, f, caps)) return OracleMatch::kMismatch;
  }
  return OracleMatch::kMatch;
}

}  // namespace specdec
