#include "specdec/ggroup.hpp"

#include <algorithm>
#include <string>

#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"

namespace specdec {

namespace {

std::vector<Element> distinct_images(const GroupHomomorphism& f) {
  Subgroup s(f.images());
  return s.elements();
}

void check_cap(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap) {
    throw Error(ErrorKind::kOrderCapExceeded,
                std::string(what) + " capped at carrier order " +
                    std::to_string(cap));
  }
}

}  // namespace

GGroup::GGroup(FiniteGroup base, FiniteGroup carrier,
               GroupHomomorphism morphism)
    : base_(std::move(base)),
      carrier_(std::move(carrier)),
      morphism_(std::move(morphism)),
      conjugators_(distinct_images(morphism_)) {}

GGroup GGroup::make(FiniteGroup base, FiniteGroup carrier,
                    std::vector<Element> images) {
  auto f = GroupHomomorphism::checked(base, carrier, std::move(images));
  return GGroup(std::move(base), std::move(carrier), std::move(f));
}

GGroup GGroup::plain(FiniteGroup carrier) {
  FiniteGroup base = trivial_group();
  auto f = GroupHomomorphism::trivial(base, carrier);
  return GGroup(std::move(base), std::move(carrier), std::move(f));
}

GGroup GGroup::identity(FiniteGroup group) {
  auto f = GroupHomomorphism::identity(group);
  FiniteGroup base = group;
  return GGroup(std::move(base), std::move(group), std::move(f));
}

bool GGroup::is_stable(const Subgroup& s) const {
  const ElementMask m = s.mask(carrier_.order());
  for (Element c : conjugators_) {
    for (Element h : s.elements()) {
      if (!m.test(carrier_.conj(c, h))) return false;
    }
  }
  return true;
}

Subgroup adjoint_orbit_subgroup(const GGroup& x, Element h) {
  std::vector<Element> orbit;
  for (Element c : x.conjugators()) orbit.push_back(x.carrier().conj(c, h));
  return generated_subgroup(x.carrier(), orbit);
}

std::optional<ZeroDivisorWitness> find_zero_divisor_pair(const GGroup& x,
                                                         const Caps& caps) {
  const FiniteGroup& h = x.carrier();
  const std::size_t n = h.order();
  check_cap(n, caps.zero_divisor_scan, "zero-divisor scan");

  std::vector<ElementMask> centralizer(n, ElementMask(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      if (h.commute(a, b)) {
        centralizer[a].set(b);
        centralizer[b].set(a);
      }
    }
  }
  // orbit_sub[e] = G(e); commutant[e] = centralizer of G(e), which is the
  // intersection of the centralizers of the orbit generating it.
  std::vector<Subgroup> orbit_sub(n);
  std::vector<ElementMask> orbit_mask(n);
  std::vector<ElementMask> commutant(n);
  for (Element e = 0; e < n; ++e) {
    orbit_sub[e] = adjoint_orbit_subgroup(x, e);
    orbit_mask[e] = orbit_sub[e].mask(n);
    ElementMask c(n);
    c.set();
    for (Element k : x.conjugators()) c &= centralizer[h.conj(k, e)];
    commutant[e] = std::move(c);
  }
  for (Element a = 1; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!orbit_mask[b].is_subset_of(commutant[a])) continue;
      if ((orbit_mask[a] & orbit_mask[b]).count() != 1) continue;
      return ZeroDivisorWitness{a, b, orbit_sub[a], orbit_sub[b]};
    }
  }
  return std::nullopt;
}

std::vector<Subgroup> g_stable_subgroups(const GGroup& x, const Caps& caps) {
  check_cap(x.carrier().order(), caps.stable_enumeration,
            "stable subgroup enumeration");
  // A stable subgroup is the join of the G(e) for its elements e.
  std::vector<Subgroup> atoms;
  for (Element e = 1; e < x.carrier().order(); ++e) {
    atoms.push_back(adjoint_orbit_subgroup(x, e));
  }
  return join_closure(x.carrier(), atoms);
}

IndecomposabilityResult is_locally_g_indecomposable(const GGroup& x,
                                                    const Caps& caps) {
  const auto stable = g_stable_subgroups(x, caps);
  const FiniteGroup& h = x.carrier();
  for (const Subgroup& whole : stable) {
    if (whole.is_trivial()) continue;
    std::vector<const Subgroup*> inside;
    for (const Subgroup& s : stable) {
      if (!s.is_trivial() && s.size() < whole.size() && s.is_subset_of(whole)) {
        inside.push_back(&s);
      }
    }
    for (std::size_t i = 0; i < inside.size(); ++i) {
      for (std::size_t j = i + 1; j < inside.size(); ++j) {
        const Subgroup& a = *inside[i];
        const Subgroup& b = *inside[j];
        if (a.size() * b.size() != whole.size()) continue;
        if (!intersection(a, b).is_trivial()) continue;
        if (!commute_elementwise(h, a, b)) continue;
        return {false, StableSplit{whole, a, b}};
      }
    }
  }
  return {true, std::nullopt};
}

GGroup quotient_ggroup(const GGroup& x, const Subgroup& normal) {
  Quotient q = quotient(x.carrier(), normal);
  std::vector<Element> images(x.base().order());
  for (Element g = 0; g < x.base().order(); ++g) {
    images[g] = q.projection(x.morphism()(g));
  }
  return GGroup::make(x.base(), std::move(q.group), std::move(images));
}

GGroup sub_ggroup(const GGroup& x, const Subgroup& s) {
  for (Element c : x.conjugators()) {
    if (!s.contains(c)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sub-G-group must contain the image of the base");
    }
  }
  FiniteGroup carrier = subgroup_as_group(x.carrier(), s);
  std::vector<Element> images(x.base().order());
  for (Element g = 0; g < x.base().order(); ++g) {
    const auto& els = s.elements();
    images[g] = static_cast<Element>(
        std::lower_bound(els.begin(), els.end(), x.morphism()(g)) -
        els.begin());
  }
  return GGroup::make(x.base(), std::move(carrier), std::move(images));
}

AxiomReport check_injection_axiom(const GGroup& x, const Caps& caps) {
  AxiomReport report;
  report.tag = "injection";
  if (x.carrier().order() > caps.stable_enumeration) {
    report.status = CheckStatus::kSkipped;
    report.detail = "carrier above stable-enumeration cap";
    return report;
  }
  if (!is_domain(x, caps)) {
    report.detail = "vacuous: object has divisors of zero";
    return report;
  }
  const Subgroup image(x.conjugators());
  for (const Subgroup& s : g_stable_subgroups(x, caps)) {
    if (!image.is_subset_of(s)) continue;
    if (auto w = find_zero_divisor_pair(sub_ggroup(x, s), caps)) {
      report.status = CheckStatus::kFail;
      report.witness = {{"subgroup", s.elements()},
                        {"x", {s.elements()[w->x]}},
                        {"y", {s.elements()[w->y]}}};
      return report;
    }
  }
  return report;
}

AxiomReport check_meet_axiom(const GGroup& x, const Caps& caps) {
  AxiomReport report;
  report.tag = "meet";
  if (x.carrier().order() > caps.normal_enumeration) {
    report.status = CheckStatus::kSkipped;
    report.detail = "carrier above normal-enumeration cap";
    return report;
  }
  if (!is_domain(x, caps)) {
    report.detail = "vacuous: object has divisors of zero";
    return report;
  }
  const auto normals = normal_subgroups(x.carrier(), caps);
  for (std::size_t i = 1; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      if (intersection(normals[i], normals[j]).is_trivial()) {
        report.status = CheckStatus::kFail;
        report.witness = {{"I", normals[i].elements()},
                          {"J", normals[j].elements()}};
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_quotient_axiom(const GGroup& x, const Caps& caps) {
  AxiomReport report;
  report.tag = "quotient";
  if (x.carrier().order() > caps.normal_enumeration) {
    report.status = CheckStatus::kSkipped;
    report.detail = "carrier above normal-enumeration cap";
    return report;
  }
  for (const Subgroup& n : normal_subgroups(x.carrier(), caps)) {
    try {
      const GGroup q = quotient_ggroup(x, n);
      if (q.carrier().order() * n.size() != x.carrier().order()) {
        throw Error(ErrorKind::kInvalidMorphism, "quotient order mismatch");
      }
    } catch (const Error& e) {
      report.status = CheckStatus::kFail;
      report.witness = {{"I", n.elements()}};
      report.detail = e.what();
      return report;
    }
    const Quotient proj = quotient(x.carrier(), n);
    for (const Subgroup& m : normal_subgroups(proj.group, caps)) {
      std::vector<Element> pre;
      for (Element e = 0; e < x.carrier().order(); ++e) {
        if (m.contains(proj.projection(e))) pre.push_back(e);
      }
      if (!is_normal(x.carrier(), Subgroup(pre))) {
        report.status = CheckStatus::kFail;
        report.witness = {{"I", n.elements()}, {"preimage", pre}};
        return report;
      }
    }
  }
  return report;
}

}  // namespace specdec
