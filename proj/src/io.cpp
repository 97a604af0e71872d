#include "specdec/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "specdec/error.hpp"
#include "specdec/named_groups.hpp"

namespace specdec::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorKind::kInputParseError, msg);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) parse_error(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    parse_error(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::string optional_name(const Json& j, std::string fallback) {
  const auto it = j.find("name");
  if (it == j.end()) return fallback;
  if (!it->is_string()) parse_error("\"name\" must be a string");
  return it->get<std::string>();
}

std::vector<std::size_t> index_list(const Json& v, const char* what) {
  if (!v.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const Json& e : v) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
      parse_error(std::string(what) + " entries must be nonnegative integers");
    }
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

CayleyTable table_field(const Json& j, const char* key, std::size_t order) {
  const Json& v = field(j, key);
  if (!v.is_array() || v.size() != order) {
    parse_error(std::string("\"") + key + "\" must have " + std::to_string(order) + " rows");
  }
  CayleyTable t;
  for (const Json& row : v) {
    const auto entries = index_list(row, key);
    if (entries.size() != order) {
      parse_error(std::string("\"") + key + "\" rows must have " + std::to_string(order) +
                  " entries");
    }
    for (std::size_t e : entries) {
      if (e >= order) parse_error(std::string("\"") + key + "\" entry out of range");
    }
    t.emplace_back(entries.begin(), entries.end());
  }
  return t;
}

std::vector<Element> as_elements(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, const Caps& caps) {
  if (j.is_string() && j.get<std::string>() == "trivial") return trivial_group();
  const std::string format = string_field(j, "format");
  if (format == "cayley") {
    const std::size_t order = count_field(j, "order");
    if (order == 0) parse_error("order must be positive");
    if (order > caps.group_order) {
      throw Error(ErrorKind::kOrderCapExceeded,
                  "order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(caps.group_order));
    }
    return FiniteGroup::from_cayley_table(table_field(j, "table", order),
                                          optional_name(j, "G"), caps);
  }
  if (format == "perm") {
    const std::size_t degree = count_field(j, "degree");
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) parse_error("\"generators\" must be an array");
    std::vector<Permutation> perms;
    for (const Json& g : gens) {
      Permutation p = index_list(g, "generator");
      if (p.size() != degree) {
        parse_error("generators must have " + std::to_string(degree) + " entries");
      }
      perms.push_back(std::move(p));
    }
    return FiniteGroup::from_permutation_generators(degree, perms,
                                                    optional_name(j, "G"), caps);
  }
  if (format == "named") {
    const std::string spec = string_field(j, "spec");
    FiniteGroup g = [&] {
      try {
        return build_named(spec);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kOrderCapExceeded) throw;
        parse_error("named group \"" + spec + "\": " + e.what());
      }
    }();
    if (g.order() > caps.group_order) {
      throw Error(ErrorKind::kOrderCapExceeded,
                  "order " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(caps.group_order));
    }
    g.set_name(optional_name(j, g.name().empty() ? spec : g.name()));
    return g;
  }
  parse_error("unknown group format \"" + format + "\"");
}

GGroup ggroup_from_json(const Json& j, const Caps& caps) {
  if (!j.is_object()) parse_error("expected a JSON object");
  if (!j.contains("carrier")) return GGroup::plain(group_from_json(j, caps));
  FiniteGroup carrier = group_from_json(j["carrier"], caps);
  const auto base_it = j.find("base");
  const bool trivial_base = base_it == j.end() ||
                            (base_it->is_string() && base_it->get<std::string>() == "trivial");
  if (trivial_base && !j.contains("morphism")) return GGroup::plain(std::move(carrier));
  FiniteGroup base = trivial_base ? trivial_group() : group_from_json(*base_it, caps);
  const auto images = as_elements(index_list(field(j, "morphism"), "\"morphism\""));
  return GGroup::make(std::move(base), std::move(carrier), images);
}

FiniteRing ring_from_json(const Json& j, const Caps& caps) {
  const std::string format = string_field(j, "format");
  if (format == "modular") {
    const std::size_t m = count_field(j, "modulus");
    if (m == 0) parse_error("modulus must be positive");
    return FiniteRing::modular(m, caps);
  }
  if (format == "tables") {
    const std::size_t order = count_field(j, "order");
    if (order == 0) parse_error("order must be positive");
    if (order > caps.ring_tables) {
      throw Error(ErrorKind::kOrderCapExceeded,
                  "ring order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(caps.ring_tables));
    }
    return FiniteRing::from_tables(table_field(j, "add", order),
                                   table_field(j, "mul", order),
                                   optional_name(j, "R"), caps);
  }
  parse_error("unknown ring format \"" + format + "\"");
}

IntegerMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_error("matrix must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) parse_error("matrix rows must be arrays");
    std::vector<BigInt> r;
    for (const Json& e : row) {
      if (e.is_number_unsigned()) {
        r.emplace_back(e.get<std::uint64_t>());
      } else if (e.is_number_integer()) {
        r.emplace_back(e.get<std::int64_t>());
      } else if (e.is_string()) {
        const std::string s = e.get<std::string>();
        const bool digits = !s.empty() &&
            s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
            s != "-";
        if (!digits) parse_error("bad integer \"" + s + "\"");
        r.emplace_back(s);
      } else {
        parse_error("matrix entries must be integers");
      }
    }
    rows.push_back(std::move(r));
  }
  try {
    return IntegerMatrix::from_rows(rows);
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

Json to_json(const Subgroup& s) { return Json(s.elements()); }

Json to_json(const std::vector<Subgroup>& list) {
  Json out = Json::array();
  for (const Subgroup& s : list) out.push_back(to_json(s));
  return out;
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

Json to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_rows()) {
    Json r = Json::array();
    for (const BigInt& x : row) r.push_back(to_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const AxiomReport& r) {
  Json w = nullptr;
  if (!r.witness.empty()) {
    w = Json::object();
    for (const auto& [label, elements] : r.witness) w[label] = elements;
  }
  return Json{{"tag", r.tag},
              {"pass", r.passed()},
              {"status", status_name(r.status)},
              {"witness", w},
              {"detail", r.detail}};
}

Json to_json(const ZeroDivisorWitness& w) {
  return Json{{"x", w.x}, {"y", w.y}, {"gx", to_json(w.gx)}, {"gy", to_json(w.gy)}};
}

Json spectrum_report(const std::string& name, const Spectrum& s,
                     const Subgroup& radical,
                     const std::vector<AxiomReport>& axioms) {
  Json ax = Json::array();
  for (const AxiomReport& r : axioms) ax.push_back(to_json(r));
  return Json{{"name", name},
              {"order", s.owner.carrier().order()},
              {"notion", notion_name(s.notion)},
              {"primes", to_json(s.primes)},
              {"radical", to_json(radical)},
              {"axioms", std::move(ax)}};
}

Json certificate_report(const std::string& name,
                        const DecompositionCertificate& cert,
                        OracleMatch match) {
  Json om = match == OracleMatch::kSkipped ? Json("skipped")
                                           : Json(match == OracleMatch::kMatch);
  Json transcript = Json::array();
  for (const CertificateStep& step : cert.transcript) {
    transcript.push_back(
        Json{{"check", step.check}, {"pass", step.passed}, {"detail", step.detail}});
  }
  return Json{{"name", name},
              {"status", decomposition_status_name(cert.status)},
              {"notion", notion_name(cert.notion)},
              {"n", cert.n()},
              {"factors", to_json(cert.factors)},
              {"complements", to_json(cert.complements)},
              {"components", cert.components},
              {"radical", to_json(cert.radical)},
              {"verified", cert.verified()},
              {"oracle_match", std::move(om)},
              {"transcript", std::move(transcript)}};
}

Json classification_report(const std::string& name, const FiniteGroup& g,
                           const MarinClass& c) {
  return Json{{"name", name},
              {"order", g.order()},
              {"class", c.label()},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

Json snf_report(const IntegerMatrix& a, const SmithDecomposition& s) {
  Json diag = Json::array();
  for (const BigInt& d : s.diagonal()) diag.push_back(to_json(d));
  const FgAbelianType t = quotient_invariants(a.cols(), a);
  Json torsion = Json::array();
  for (const BigInt& x : t.torsion) torsion.push_back(to_json(x));
  return Json{{"u", to_json(s.u)},
              {"d", to_json(s.d)},
              {"v", to_json(s.v)},
              {"diagonal", std::move(diag)},
              {"verified", verify_smith(a, s)},
              {"cokernel", Json{{"free_rank", t.free_rank},
                                {"torsion", std::move(torsion)},
                                {"type", t.to_string()}}}};
}

}  // namespace specdec::io
