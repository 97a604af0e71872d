#pragma once

// Direct-product decomposition of a G-group with trivial radical, read off
// the connected components of the proper primes, plus an exhaustive oracle.

#include <string>
#include <vector>

#include "specdec/caps.hpp"
#include "specdec/ggroup.hpp"
#include "specdec/spectrum.hpp"

namespace specdec {

enum class DecompositionStatus { kOk, kRadicalNotTrivial, kReconstructionFailed };

const char* decomposition_status_name(DecompositionStatus status);

struct CertificateStep {
  std::string check;
  bool passed = true;
  std::string detail;
};

struct DecompositionCertificate {
  DecompositionStatus status = DecompositionStatus::kOk;
  PrimalityNotion notion = PrimalityNotion::kIntersectionPrime;
  Subgroup radical;
  std::vector<Subgroup> factors;      // G_i
  std::vector<Subgroup> complements;  // H_i
  // Indices into the spectrum's prime list, one entry per component.
  std::vector<std::vector<std::size_t>> components;
  std::vector<CertificateStep> transcript;

  std::size_t n() const { return factors.size(); }
  bool verified() const { return status == DecompositionStatus::kOk; }
};

// Never throws for a failed precondition or a failed reconstruction; both
// come back as a status with the full transcript.
DecompositionCertificate decompose(
    const GGroup& x,
    PrimalityNotion notion = PrimalityNotion::kIntersectionPrime,
    const Caps& caps = default_caps());

// No two nontrivial normal subgroups form an internal direct product.
bool is_directly_indecomposable(const FiniteGroup& g,
                                const Caps& caps = default_caps());

// Every unordered internal direct factorization of g into directly
// indecomposable subgroups. Factors within a factorization and the
// factorizations themselves are canonically ordered.
std::vector<std::vector<Subgroup>> brute_force_decompositions(
    const FiniteGroup& g, const Caps& caps = default_caps());

enum class OracleMatch { kMatch, kMismatch, kSkipped };

const char* oracle_match_name(OracleMatch m);

// kMatch when the certificate's factors are one of the oracle's
// factorizations and every oracle factorization has the same multiset of
// isomorphism types. kSkipped above the oracle cap or for an unverified
// certificate.
OracleMatch oracle_match(const DecompositionCertificate& cert,
                         const FiniteGroup& g,
                         const Caps& caps = default_caps());

}  // namespace specdec
