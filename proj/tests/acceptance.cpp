// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
//
// Usage: acceptance [path-to-specdec-binary]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "specdec/abelian_snf.hpp"
#include "specdec/classification.hpp"
#include "specdec/cli.hpp"
#include "specdec/decomposition.hpp"
#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"
#include "specdec/number_theory.hpp"
#include "specdec/ring_pprime.hpp"
#include "specdec/spectrum.hpp"

namespace specdec {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool is_prime_power(std::size_t n) { return nt::prime_power(n).has_value(); }

std::string join_orders(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

const AxiomReport* find_report(const std::vector<AxiomReport>& reports,
                               const std::string& tag) {
  for (const auto& r : reports) {
    if (r.tag == tag) return &r;
  }
  return nullptr;
}

// V sets under the intersection notion, with primality decided by the
// elementwise oracle rather than the library.
Outcome criterion_topology() {
  Outcome o;
  std::size_t groups = 0;
  std::size_t triples = 0;
  for (const auto& e : corpus(48)) {
    const FiniteGroup& g = e.group;
    const GGroup x = GGroup::plain(g);
    const auto reports = verify_axioms(x, PrimalityNotion::kIntersectionPrime);
    for (const char* tag : {"union", "family"}) {
      const AxiomReport* r = find_report(reports, tag);
      if (r == nullptr || !r->passed()) o.fail(e.name + ": library " + tag + " check failed");
    }
    const auto normals = normal_subgroups(g);
    std::vector<Subgroup> primes;
    for (const auto& n : normals) {
      if (oracle::intersection_prime_elementwise(g, n.elements())) primes.push_back(n);
    }
    const Spectrum s = spectrum(x, PrimalityNotion::kIntersectionPrime);
    if (s.primes != primes) o.fail(e.name + ": spectrum differs from oracle");
    const std::size_t k = normals.size();
    std::vector<boost::dynamic_bitset<>> v(k, boost::dynamic_bitset<>(primes.size()));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t p = 0; p < primes.size(); ++p) {
        if (normals[i].is_subset_of(primes[p])) v[i].set(p);
      }
    }
    auto v_of = [&](const Subgroup& s) {
      boost::dynamic_bitset<> out(primes.size());
      for (std::size_t p = 0; p < primes.size(); ++p) {
        if (s.is_subset_of(primes[p])) out.set(p);
      }
      return out;
    };
    std::map<Subgroup, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index.emplace(normals[i], i);
    // A product of normal subgroups is normal, so it is in the list.
    std::vector<std::vector<std::size_t>> product(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        std::vector<Element> gens = normals[i].elements();
        gens.insert(gens.end(), normals[j].elements().begin(), normals[j].elements().end());
        const auto it = index.find(Subgroup(oracle::closure(g, gens)));
        if (it == index.end()) {
          o.fail(e.name + ": product of normal subgroups not normal");
          return o;
        }
        product[i][j] = product[j][i] = it->second;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const Subgroup meet(oracle::meet(normals[i].elements(), normals[j].elements()));
        if (v_of(meet) != (v[i] | v[j])) o.fail(e.name + ": V(I meet J) differs");
        for (std::size_t l = j; l < k; ++l) {
          if (v[product[product[i][j]][l]] != (v[i] & v[j] & v[l])) {
            o.fail(e.name + ": V(IJK) differs");
          }
          ++triples;
        }
      }
    }
    ++groups;
  }
  if (o.pass) {
    o.detail = std::to_string(groups) + " groups, " + std::to_string(triples) + " families";
  }
  return o;
}

Outcome criterion_notion_separation() {
  Outcome o;
  const GGroup klein = GGroup::plain(abelian({2, 2}));
  const auto reports = verify_axioms(klein, PrimalityNotion::kQuotientDomain);
  const AxiomReport* uni = find_report(reports, "union");
  using Witness = std::vector<std::pair<std::string, std::vector<Element>>>;
  const Witness want_union{{"I", {0, 1}}, {"J", {0, 2}}, {"P", {0, 3}}};
  if (uni == nullptr || uni->passed() || uni->witness != want_union) {
    o.fail("union witness is not I={0,1} J={0,2} P={0,3}");
  }
  const AxiomReport* irr = find_report(reports, "irreducible");
  if (irr == nullptr || irr->passed() || irr->witness.empty() ||
      irr->witness[0] != std::make_pair(std::string("I"), std::vector<Element>{0})) {
    o.fail("irreducibility failure at I={0} missing");
  }
  // Independent confirmation of the three facts.
  const Spectrum s = spectrum(klein, PrimalityNotion::kQuotientDomain);
  const ClosedSet v0 = v_set(s, trivial_subgroup());
  if (!is_irreducible(s, v0)) o.fail("V(0) not irreducible");
  if (!is_radical_ideal(s, trivial_subgroup())) o.fail("0 not radical");
  if (!oracle::zero_divisor_mod(klein, {0}).has_value()) o.fail("oracle: 0 is prime");
  if (oracle::zero_divisor_mod(klein, {0, 3}).has_value()) o.fail("oracle: diagonal not prime");
  // The intersection notion passes on the same group.
  for (const auto& r : verify_axioms(klein, PrimalityNotion::kIntersectionPrime)) {
    if (!r.passed()) o.fail("intersection notion fails " + r.tag);
  }
  if (o.pass) o.detail = "union I={0,1} J={0,2} P={0,3}; V(0) irreducible, 0 radical, 0 not prime";
  return o;
}

Outcome criterion_local_indecomposability() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : corpus(32)) {
    const FiniteGroup& g = e.group;
    std::vector<std::pair<std::string, GGroup>> objects{
        {"trivial base", GGroup::plain(g)},
        {"identity", GGroup::identity(g)},
        {"Z/2 trivial map", GGroup::make(cyclic(2), g, {0, 0})},
        {"S3 trivial map", GGroup::make(symmetric(3), g, std::vector<Element>(6, 0))}};
    for (const auto& [label, x] : objects) {
      const bool domain = !oracle::zero_divisor_mod(x, {0}).has_value();
      if (is_domain(x) != domain) o.fail(e.name + " (" + label + "): is_domain differs from oracle");
      if (is_locally_g_indecomposable(x).indecomposable != domain) {
        o.fail(e.name + " (" + label + "): equivalence fails");
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " G-groups";
  return o;
}

Outcome criterion_marin() {
  Outcome o;
  std::map<std::string, MarinClass> by_name;
  std::size_t checked = 0;
  for (const auto& e : corpus(63)) {
    const auto zd = oracle::zero_divisor_mod(GGroup::plain(e.group), {0});
    try {
      const MarinClass c = marin_class(e.group);
      const bool indecomposable = c.kind != MarinClass::Kind::kNotStronglyIndecomposable;
      if (indecomposable == zd.has_value()) o.fail(e.name + ": class disagrees with scan");
      if (indecomposable == c.witness.has_value()) o.fail(e.name + ": witness presence wrong");
      by_name.emplace(e.name, c);
    } catch (const Error& err) {
      o.fail(e.name + ": " + err.what());
    }
    ++checked;
  }
  const std::map<std::string, std::string> expected{
      {"Z/8", "CyclicPrimePower(2,3)"},       {"Z/9", "CyclicPrimePower(3,2)"},
      {"Z/27", "CyclicPrimePower(3,3)"},      {"Z/49", "CyclicPrimePower(7,2)"},
      {"Q8", "GeneralizedQuaternion(3)"},     {"Q16", "GeneralizedQuaternion(4)"},
      {"S3", "MetacyclicPQ(3,1,2,1)"},        {"Z/7:Z/3(2)", "MetacyclicPQ(7,1,3,1)"},
      {"Z/6", "NotStronglyIndecomposable"},   {"Z/2xZ/2", "NotStronglyIndecomposable"},
      {"D4", "NotStronglyIndecomposable"},    {"Z/2xZ/4", "NotStronglyIndecomposable"}};
  for (const auto& [name, label] : expected) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) {
      o.fail(name + " missing from corpus");
    } else if (it->second.label() != label) {
      o.fail(name + " classified " + it->second.label() + ", expected " + label);
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " groups, 12 named cases";
  return o;
}

Outcome criterion_decomposition() {
  Outcome o;
  struct Case {
    std::string name;
    FiniteGroup g;
    std::vector<std::size_t> orders;  // empty: radical not trivial
  };
  const std::vector<Case> cases{
      {"Z/6", cyclic(6), {2, 3}},
      {"Z/12", cyclic(12), {3, 4}},
      {"Z/30", cyclic(30), {2, 3, 5}},
      {"S3xZ/5", direct_product(symmetric(3), cyclic(5)), {5, 6}},
      {"Q8", generalized_quaternion(3), {8}},
      {"Z/2xZ/2", abelian({2, 2}), {}}};
  auto check_certificate = [&](const std::string& name, const FiniteGroup& g,
                               const DecompositionCertificate& c) {
    for (const auto& step : c.transcript) {
      if (!step.passed) o.fail(name + ": certificate step " + step.check + " failed");
    }
    std::vector<Element> product{0};
    for (const auto& f : c.factors) {
      std::vector<Element> gens = product;
      gens.insert(gens.end(), f.elements().begin(), f.elements().end());
      product = oracle::closure(g, gens);
    }
    if (product.size() != g.order()) o.fail(name + ": factors do not generate");
    if (g.order() <= default_caps().decomposition_oracle &&
        oracle_match(c, g) != OracleMatch::kMatch) {
      o.fail(name + ": oracle mismatch");
    }
  };
  for (const Case& k : cases) {
    const auto c = decompose(GGroup::plain(k.g));
    if (k.orders.empty()) {
      if (c.status != DecompositionStatus::kRadicalNotTrivial) {
        o.fail(k.name + ": expected RadicalNotTrivial");
      }
      continue;
    }
    if (c.status != DecompositionStatus::kOk) {
      o.fail(k.name + ": status " + decomposition_status_name(c.status));
      continue;
    }
    std::vector<std::size_t> orders;
    for (const auto& f : c.factors) orders.push_back(f.size());
    std::sort(orders.begin(), orders.end());
    if (orders != k.orders) o.fail(k.name + ": factor orders " + join_orders(orders));
    check_certificate(k.name, k.g, c);
  }
  // Reconstruction failures are reported, not certificates; they must carry
  // a failed step in the transcript.
  std::size_t certificates = 0;
  std::string reconstruction_failed;
  for (const auto& e : corpus(48)) {
    const auto c = decompose(GGroup::plain(e.group));
    if (c.status == DecompositionStatus::kRadicalNotTrivial) continue;
    if (c.status == DecompositionStatus::kReconstructionFailed) {
      const bool flagged = std::any_of(c.transcript.begin(), c.transcript.end(),
                                       [](const CertificateStep& s) { return !s.passed; });
      if (!flagged) o.fail(e.name + ": failure without a failed step");
      reconstruction_failed += (reconstruction_failed.empty() ? "" : ",") + e.name;
      continue;
    }
    check_certificate(e.name, e.group, c);
    ++certificates;
  }
  if (o.pass) {
    o.detail = "6 named cases, " + std::to_string(certificates) +
               " corpus certificates; ReconstructionFailed: " +
               (reconstruction_failed.empty() ? "none" : reconstruction_failed);
  }
  return o;
}

Outcome criterion_element_orders() {
  Outcome o;
  std::size_t domains = 0;
  for (const auto& e : corpus(63)) {
    const FiniteGroup& g = e.group;
    if (oracle::zero_divisor_mod(GGroup::plain(g), {0}).has_value()) continue;
    if (center(g).is_trivial()) continue;
    ++domains;
    for (Element a = 0; a < g.order(); ++a) {
      std::size_t k = 1;
      for (Element p = a; p != 0; p = g.mul(p, a)) ++k;
      if (!is_prime_power(k) && k != 1) o.fail(e.name + ": element of order " + std::to_string(k));
    }
    if (!prime_power_orders(g).all_prime_powers) o.fail(e.name + ": library check disagrees");
  }
  if (o.pass) o.detail = std::to_string(domains) + " domains with nontrivial center";
  return o;
}

Outcome criterion_snf() {
  Outcome o;
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<int> entry(-1000, 1000);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 500; ++t) {
    IntegerMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = entry(rng);
    }
    const auto s = smith_normal_form(a);
    // U·A·V computed entrywise.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        BigInt sum = 0;
        for (std::size_t k = 0; k < a.rows(); ++k) {
          for (std::size_t l = 0; l < a.cols(); ++l) sum += s.u.at(i, k) * a.at(k, l) * s.v.at(l, j);
        }
        if (sum != s.d.at(i, j)) o.fail("U A V != D at trial " + std::to_string(t));
        if (i != j && s.d.at(i, j) != 0) o.fail("off-diagonal entry at trial " + std::to_string(t));
      }
    }
    const BigInt du = determinant(s.u), dv = determinant(s.v);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) {
      o.fail("transform not unimodular at trial " + std::to_string(t));
    }
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const bool ok = d[i] >= 0 && (d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0);
      if (!ok) o.fail("divisibility chain broken at trial " + std::to_string(t));
    }
  }
  if (o.pass) o.detail = "500 matrices";
  return o;
}

// Z^2 / L for L in Hermite form, rows (a, b) and (0, c) with 0 <= b < c,
// built as a Cayley table on residues (x, y), 0 <= x < a, 0 <= y < c.
FiniteGroup lattice_quotient(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = a * c;
  auto reduce = [&](long x, long y) {
    const long k = x >= 0 ? x / static_cast<long>(a) : -((-x + a - 1) / static_cast<long>(a));
    x -= k * static_cast<long>(a);
    y -= k * static_cast<long>(b);
    y %= static_cast<long>(c);
    if (y < 0) y += c;
    return static_cast<Element>(x * c + y);
  };
  std::vector<Element> t(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      t[p * n + q] =
          reduce(static_cast<long>(p / c + q / c), static_cast<long>(p % c + q % c));
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(t), "Z^2/L");
}

// Multiset of element orders of Z^2 / L, which fixes the isomorphism type
// of a finite abelian group.
std::vector<std::size_t> lattice_order_profile(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<std::size_t> profile;
  for (std::size_t x = 0; x < a; ++x) {
    for (std::size_t y = 0; y < c; ++y) {
      const std::size_t k1 = a / std::gcd(a, x);
      // k = m * k1; need m*k1*y - (m*k1*x/a)*b = 0 mod c.
      const long step = static_cast<long>(k1 * y) - static_cast<long>(k1 * x / a * b);
      long r = ((step % static_cast<long>(c)) + c) % c;
      const std::size_t m = c / std::gcd(static_cast<std::size_t>(r), c);
      profile.push_back(k1 * m);
    }
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

Outcome criterion_fg_abelian() {
  Outcome o;
  std::map<std::vector<std::size_t>, bool> domain_of;
  std::size_t lattices = 0;
  for (std::size_t a = 1; a <= 200; ++a) {
    for (std::size_t c = 1; a * c <= 200; ++c) {
      for (std::size_t b = 0; b < c; ++b) {
        const auto profile = lattice_order_profile(a, b, c);
        auto it = domain_of.find(profile);
        if (it == domain_of.end()) {
          const bool domain = is_domain(GGroup::plain(lattice_quotient(a, b, c)));
          it = domain_of.emplace(profile, domain).first;
        }
        IntegerMatrix gens(2, 2);
        gens.at(0, 0) = static_cast<long>(a);
        gens.at(0, 1) = static_cast<long>(b);
        gens.at(1, 1) = static_cast<long>(c);
        // Trivial quotient has no proper prime; both sides treat it as not prime.
        const bool expected = a * c > 1 && it->second;
        if (is_prime_subgroup_fg_abelian(2, gens) != expected) {
          o.fail("lattice (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ") disagrees");
        }
        ++lattices;
      }
    }
  }
  for (std::size_t n = 1; n <= 200; ++n) {
    IntegerMatrix gens(1, 1);
    gens.at(0, 0) = static_cast<long>(n);
    const bool expected = n > 1 && is_domain(GGroup::plain(cyclic(n)));
    if (is_prime_subgroup_fg_abelian(1, gens) != expected) {
      o.fail("(" + std::to_string(n) + ") in Z disagrees");
    }
  }
  const IntegerSpec want{false, {{2, 1}, {2, 2}, {3, 1}}};
  if (spec_of_integers(12) != want) o.fail("spec_of_integers(12) wrong");
  if (o.pass) {
    o.detail = std::to_string(lattices) + " lattices in Z^2, 200 in Z, " +
               std::to_string(domain_of.size()) + " quotient types";
  }
  return o;
}

Outcome criterion_rings() {
  Outcome o;
  for (std::size_t m = 1; m <= 60; ++m) {
    const FiniteRing r = FiniteRing::modular(m);
    // Ideals of Z/m are (d), d | m; I(a) = (gcd(a, m)); (d) is p-prime when
    // no a, b outside (d) have lcm(gcd(a,m), gcd(b,m)) in (d).
    std::vector<TwoSidedIdeal> scanned;
    for (std::size_t d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      bool prime = true;
      for (std::size_t a = 0; a < m && prime; ++a) {
        if (a % d == 0) continue;
        for (std::size_t b = 0; b < m; ++b) {
          if (b % d == 0) continue;
          const std::size_t l = std::lcm(std::gcd(a, m), std::gcd(b, m));
          if (l % d == 0) {
            prime = false;
            break;
          }
        }
      }
      std::vector<Element> ideal;
      for (std::size_t x = 0; x < m; x += d) ideal.push_back(static_cast<Element>(x));
      if (prime) scanned.emplace_back(ideal);
      const bool closed_form = d == 1 || is_prime_power(d);
      if (prime != closed_form) o.fail("Z/" + std::to_string(m) + ": scan disagrees at (" +
                                       std::to_string(d) + ")");
    }
    std::sort(scanned.begin(), scanned.end());
    if (p_prime_ideals(r) != scanned) o.fail("Z/" + std::to_string(m) + ": library p-primes differ");
    for (const auto& rep : verify_ring_topology(r)) {
      if (!rep.passed()) o.fail("Z/" + std::to_string(m) + ": " + rep.tag + " fails");
    }
  }
  for (std::int64_t n : {4, 8, 9, 25, 27}) {
    if (z_pprime_window_check(n, 1000).violation) o.fail("window violation for " + std::to_string(n));
  }
  const auto six = z_pprime_window_check(6, 1000);
  if (!six.violation || six.witness != std::make_pair(std::int64_t{2}, std::int64_t{3})) {
    o.fail("n = 6 witness is not (2,3)");
  }
  if (o.pass) o.detail = "Z/1..Z/60, windows 1000";
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  status = ::pclose(pipe);
  return out;
}

Outcome criterion_determinism(const std::string& binary) {
  Outcome o;
  const std::vector<std::string> args{"verify", "--all", "corpus:32", "--json"};
  std::ostringstream out1, out2, err;
  const int c1 = cli::run(args, out1, err);
  const int c2 = cli::run(args, out2, err);
  if (out1.str().empty()) o.fail("empty output");
  if (out1.str() != out2.str() || c1 != c2) o.fail("in-process runs differ");
  if (!binary.empty()) {
    int s1 = 0, s2 = 0;
    const std::string cmd = "'" + binary + "' verify --all corpus:32 --json";
    const std::string b1 = capture(cmd, s1);
    const std::string b2 = capture(cmd, s2);
    if (b1 != b2 || s1 != s2) o.fail("binary runs differ");
    if (b1 != out1.str()) o.fail("binary output differs from in-process output");
  }
  if (o.pass) {
    o.detail = std::to_string(out1.str().size()) + " bytes identical" +
               (binary.empty() ? "" : " (in-process and binary)");
  }
  return o;
}

}  // namespace
}  // namespace specdec

int main(int argc, char** argv) {
  using namespace specdec;
  const std::string binary = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "topology identities, intersection notion, corpus <= 48", 120, criterion_topology},
      {2, "notion separation on Z/2xZ/2", 0, criterion_notion_separation},
      {3, "domain iff locally indecomposable, carrier <= 32", 0,
       criterion_local_indecomposability},
      {4, "classification vs zero-divisor scan, corpus <= 63", 300, criterion_marin},
      {5, "direct decompositions and oracle match", 0, criterion_decomposition},
      {6, "prime-power element orders in domains with center", 0, criterion_element_orders},
      {7, "Smith normal form on 500 random matrices", 60, criterion_snf},
      {8, "prime subgroups of Z^r vs finite quotients; Spec for n = 12", 0,
       criterion_fg_abelian},
      {9, "p-prime ideals of Z/m, ring topology, Z windows", 0, criterion_rings},
      {10, "byte-identical verify --all corpus:32 --json", 0,
       [&] { return criterion_determinism(binary); }},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.fail("took " + std::to_string(seconds) + " s, limit " +
             std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    if (!o.pass) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title
              << " [" << o.detail << "] (" << timing << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed;
}
