#pragma once

// JSON ingestion of groups, G-groups, rings and integer matrices, and the
// JSON report schemas emitted by the command line front end.

#include <string>
#include <vector>

#include "json.hpp"

#include "specdec/abelian_snf.hpp"
#include "specdec/axiom_report.hpp"
#include "specdec/caps.hpp"
#include "specdec/classification.hpp"
#include "specdec/decomposition.hpp"
#include "specdec/ggroup.hpp"
#include "specdec/group.hpp"
#include "specdec/ring_pprime.hpp"
#include "specdec/spectrum.hpp"

namespace specdec::io {

// Insertion-ordered so that reports serialize byte-stably.
using Json = nlohmann::ordered_json;

// Reads and parses a whole file. Throws kInputParseError.
Json load_file(const std::string& path);

// {"format":"cayley","name":..,"order":n,"table":[[..]]}
// {"format":"perm","name":..,"degree":d,"generators":[[..],..]}  (0-based images)
// {"format":"named","spec":"quaternion:3"}
// Malformed documents throw kInputParseError; tables that parse but are not
// groups throw the validation error from the group constructor.
FiniteGroup group_from_json(const Json& j, const Caps& caps = default_caps());

// {"base":<group>|"trivial","carrier":<group>,"morphism":[..]}. A bare group
// document is read as a G-group over the trivial base.
GGroup ggroup_from_json(const Json& j, const Caps& caps = default_caps());

// {"format":"modular","modulus":m} or
// {"format":"tables","order":n,"add":[[..]],"mul":[[..]]}
FiniteRing ring_from_json(const Json& j, const Caps& caps = default_caps());

// An array of integer rows. Entries may be JSON integers or decimal strings.
IntegerMatrix matrix_from_json(const Json& j);

Json to_json(const Subgroup& s);
Json to_json(const std::vector<Subgroup>& list);
Json to_json(const BigInt& x);
Json to_json(const IntegerMatrix& m);
Json to_json(const AxiomReport& r);
Json to_json(const ZeroDivisorWitness& w);

Json spectrum_report(const std::string& name, const Spectrum& s,
                     const Subgroup& radical,
                     const std::vector<AxiomReport>& axioms);

// oracle_match is true, false or "skipped".
Json certificate_report(const std::string& name,
                        const DecompositionCertificate& cert,
                        OracleMatch match);

Json classification_report(const std::string& name, const FiniteGroup& g,
                           const MarinClass& c);

Json snf_report(const IntegerMatrix& a, const SmithDecomposition& s);

}  // namespace specdec::io
