#include "specdec/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "specdec/error.hpp"
#include "specdec/io.hpp"
#include "specdec/named_groups.hpp"

namespace specdec::cli {

namespace {

using io::Json;

struct Options {
  std::string notion = "intersection";
  std::optional<std::size_t> max_order;
  bool json = false;
  bool oracle = false;
  std::optional<std::uint64_t> seed;
  bool all = false;
  std::size_t count = 500;
  std::optional<std::int64_t> window;
  std::vector<std::string> inputs;
};

struct Item {
  std::string name;
  GGroup x;
};

std::string set_text(const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string set_text(const Subgroup& s) { return set_text(s.elements()); }

std::string witness_text(const AxiomReport& r) {
  std::string out;
  for (const auto& [label, elements] : r.witness) {
    out += " " + label + "=" + set_text(elements);
  }
  return out;
}

void header(std::ostream& out, const std::string& name, std::size_t order) {
  out << "== " << name << " (order " << order << ") ==\n";
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-') {
    throw Error(ErrorKind::kInputParseError, "bad " + what + " \"" + text + "\"");
  }
  return static_cast<std::size_t>(v);
}

std::optional<std::size_t> corpus_bound(const std::string& input) {
  static const std::string prefix = "corpus:";
  if (input.rfind(prefix, 0) != 0) return std::nullopt;
  return parse_size(input.substr(prefix.size()), "corpus bound");
}

void require_order(std::size_t order, const Caps& caps) {
  if (order > caps.group_order) {
    throw Error(ErrorKind::kOrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(caps.group_order));
  }
}

std::vector<Item> load_items(const Options& o, const Caps& caps) {
  std::vector<Item> items;
  for (const std::string& input : o.inputs) {
    if (const auto bound = corpus_bound(input)) {
      require_order(*bound, caps);
      for (CorpusEntry& e : corpus(*bound)) {
        items.push_back({e.name, GGroup::plain(std::move(e.group))});
      }
      continue;
    }
    const Json doc = io::load_file(input);
    const std::string stem = std::filesystem::path(input).stem().string();
    auto add = [&](const Json& j, const std::string& fallback) {
      GGroup x = io::ggroup_from_json(j, caps);
      std::string name = fallback;
      if (j.is_object() && j.contains("name") && j["name"].is_string()) {
        name = j["name"].get<std::string>();
      } else if (!x.carrier().name().empty() && x.carrier().name() != "G") {
        name = x.carrier().name();
      }
      items.push_back({std::move(name), std::move(x)});
    };
    if (doc.is_array()) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        add(doc[i], stem + "#" + std::to_string(i));
      }
    } else {
      add(doc, stem);
    }
  }
  return items;
}

PrimalityNotion notion_of(const Options& o) { return parse_notion(o.notion); }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_group(const Options& o, const Caps& caps, std::ostream& out) {
  for (const Item& it : load_items(o, caps)) {
    const FiniteGroup& g = it.x.carrier();
    const auto normals = normal_subgroups(g, caps);
    const auto classes = conjugacy_classes(g);
    const Subgroup z = center(g);
    if (o.json) {
      emit(out, Json{{"name", it.name},
                     {"order", g.order()},
                     {"base_order", it.x.base().order()},
                     {"abelian", g.is_abelian()},
                     {"center", io::to_json(z)},
                     {"classes", classes.size()},
                     {"normal_subgroups", io::to_json(normals)}});
      continue;
    }
    header(out, it.name, g.order());
    out << "base order: " << it.x.base().order() << '\n'
        << "abelian: " << (g.is_abelian() ? "yes" : "no") << '\n'
        << "center: " << set_text(z) << '\n'
        << "conjugacy classes: " << classes.size() << '\n'
        << "normal subgroups (" << normals.size() << "):\n";
    for (const Subgroup& n : normals) out << "  " << set_text(n) << '\n';
  }
  return 0;
}

void axioms_text(std::ostream& out, const std::vector<AxiomReport>& reports) {
  out << "axioms:\n";
  for (const AxiomReport& r : reports) {
    out << "  " << r.tag << ": " << status_name(r.status) << witness_text(r);
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << '\n';
  }
}

bool all_passed(const std::vector<AxiomReport>& reports) {
  for (const AxiomReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

int cmd_spectrum(const Options& o, const Caps& caps, std::ostream& out) {
  int code = 0;
  for (const Item& it : load_items(o, caps)) {
    const Spectrum s = spectrum(it.x, notion_of(o), caps);
    const Subgroup rad = radical(s);
    const auto axioms = verify_axioms(s, caps);
    if (!all_passed(axioms)) code = 1;
    if (o.json) {
      emit(out, io::spectrum_report(it.name, s, rad, axioms));
      continue;
    }
    header(out, it.name, it.x.carrier().order());
    out << "notion: " << notion_name(s.notion) << '\n'
        << "primes (" << s.primes.size() << "):\n";
    for (const Subgroup& p : s.primes) out << "  " << set_text(p) << '\n';
    out << "radical: " << set_text(rad) << '\n';
    axioms_text(out, axioms);
  }
  return code;
}

int cmd_radical(const Options& o, const Caps& caps, std::ostream& out) {
  for (const Item& it : load_items(o, caps)) {
    const Subgroup rad = radical(it.x, notion_of(o), caps);
    if (o.json) {
      emit(out, Json{{"name", it.name},
                     {"order", it.x.carrier().order()},
                     {"notion", o.notion == "quotient" ? "quotient-domain" : o.notion},
                     {"radical", io::to_json(rad)},
                     {"trivial", rad.is_trivial()}});
      continue;
    }
    header(out, it.name, it.x.carrier().order());
    out << "radical: " << set_text(rad) << (rad.is_trivial() ? "  (trivial)" : "")
        << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& o, const Caps& caps, std::ostream& out) {
  int code = 0;
  for (const Item& it : load_items(o, caps)) {
    const auto cert = decompose(it.x, notion_of(o), caps);
    OracleMatch match = OracleMatch::kSkipped;
    if (o.oracle && it.x.base().order() == 1) {
      match = oracle_match(cert, it.x.carrier(), caps);
    }
    if (cert.status == DecompositionStatus::kReconstructionFailed ||
        match == OracleMatch::kMismatch) {
      code = 1;
    }
    if (o.json) {
      emit(out, io::certificate_report(it.name, cert, match));
      continue;
    }
    header(out, it.name, it.x.carrier().order());
    out << "status: " << decomposition_status_name(cert.status) << '\n'
        << "radical: " << set_text(cert.radical) << '\n';
    if (!cert.factors.empty()) {
      out << "factors (" << cert.n() << "):\n";
      for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        out << "  G" << i + 1 << " order " << cert.factors[i].size() << ": "
            << set_text(cert.factors[i]) << '\n';
      }
      out << "complements:\n";
      for (std::size_t i = 0; i < cert.complements.size(); ++i) {
        out << "  H" << i + 1 << " order " << cert.complements[i].size() << ": "
            << set_text(cert.complements[i]) << '\n';
      }
    }
    out << "checks:\n";
    for (const CertificateStep& step : cert.transcript) {
      out << "  " << step.check << ": " << (step.passed ? "pass" : "fail");
      if (!step.detail.empty()) out << "  (" << step.detail << ")";
      out << '\n';
    }
    out << "oracle: " << oracle_match_name(match) << '\n';
  }
  return code;
}

int cmd_marin(const Options& o, const Caps& caps, std::ostream& out) {
  for (const Item& it : load_items(o, caps)) {
    const FiniteGroup& g = it.x.carrier();
    const MarinClass c = marin_class(g, caps);
    if (o.json) {
      emit(out, io::classification_report(it.name, g, c));
      continue;
    }
    out << it.name << " (order " << g.order() << "): " << c.label();
    if (c.witness) {
      out << "  x=" << c.witness->x << " y=" << c.witness->y
          << " G(x)=" << set_text(c.witness->gx) << " G(y)=" << set_text(c.witness->gy);
    }
    out << '\n';
  }
  return 0;
}

Json split_json(const StableSplit& s) {
  return Json{{"whole", io::to_json(s.whole)},
              {"first", io::to_json(s.first)},
              {"second", io::to_json(s.second)}};
}

int cmd_domain_check(const Options& o, const Caps& caps, std::ostream& out) {
  int code = 0;
  for (const Item& it : load_items(o, caps)) {
    const auto zd = find_zero_divisor_pair(it.x, caps);
    Json j{{"name", it.name},
           {"order", it.x.carrier().order()},
           {"domain", !zd.has_value()},
           {"witness", zd ? io::to_json(*zd) : Json(nullptr)}};
    std::string oracle_text;
    if (o.oracle) {
      if (it.x.carrier().order() <= caps.stable_enumeration) {
        const auto ind = is_locally_g_indecomposable(it.x, caps);
        const bool agree = ind.indecomposable == !zd.has_value();
        if (!agree) code = 1;
        j["locally_indecomposable"] = ind.indecomposable;
        j["split"] = ind.witness ? split_json(*ind.witness) : Json(nullptr);
        j["equivalence"] = agree;
        oracle_text += std::string("locally indecomposable: ") +
                       (ind.indecomposable ? "yes" : "no") +
                       (agree ? " (agrees)" : " (DISAGREES)") + "\n";
      } else {
        j["equivalence"] = "skipped";
        oracle_text += "locally indecomposable: skipped (carrier above cap)\n";
      }
      const FiniteGroup& g = it.x.carrier();
      if (!zd && it.x.base().order() == 1 && !center(g).is_trivial()) {
        const auto orders = prime_power_orders(g);
        if (!orders.all_prime_powers) code = 1;
        j["prime_power_orders"] = orders.all_prime_powers;
        oracle_text += std::string("element orders prime powers: ") +
                       (orders.all_prime_powers ? "yes" : "no") + "\n";
      }
    }
    if (o.json) {
      emit(out, j);
      continue;
    }
    header(out, it.name, it.x.carrier().order());
    out << "domain: " << (zd ? "no" : "yes") << '\n';
    if (zd) {
      out << "zero divisors: x=" << zd->x << " y=" << zd->y
          << " G(x)=" << set_text(zd->gx) << " G(y)=" << set_text(zd->gy) << '\n';
    }
    out << oracle_text;
  }
  return code;
}

int cmd_snf(const Options& o, std::ostream& out) {
  if (o.inputs.empty() && !o.seed) {
    throw Error(ErrorKind::kInputParseError, "snf needs a matrix file or --seed");
  }
  int code = 0;
  for (const std::string& input : o.inputs) {
    const IntegerMatrix a = io::matrix_from_json(io::load_file(input));
    const auto s = smith_normal_form(a);
    const Json j = io::snf_report(a, s);
    if (o.json) {
      emit(out, j);
      continue;
    }
    out << "== " << input << " (" << a.rows() << " x " << a.cols() << ") ==\n";
    for (const char* key : {"u", "d", "v"}) out << key << ": " << j[key].dump() << '\n';
    out << "diagonal: " << j["diagonal"].dump() << '\n'
        << "cokernel: " << j["cokernel"]["type"].get<std::string>() << '\n'
        << "verified: " << (j["verified"].get<bool>() ? "yes" : "no") << '\n';
  }
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    std::uniform_int_distribution<int> entry(-1000, 1000);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::size_t passed = 0;
    Json failure = nullptr;
    for (std::size_t t = 0; t < o.count; ++t) {
      IntegerMatrix a(dim(rng), dim(rng));
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(r, c) = entry(rng);
      }
      bool ok = false;
      try {
        ok = verify_smith(a, smith_normal_form(a));
      } catch (const std::logic_error&) {
        ok = false;
      }
      if (ok) {
        ++passed;
      } else if (failure.is_null()) {
        failure = io::to_json(a);
      }
    }
    if (passed != o.count) code = 1;
    if (o.json) {
      emit(out, Json{{"seed", *o.seed},
                     {"count", o.count},
                     {"passed", passed},
                     {"failure", failure}});
    } else {
      out << "random batch seed " << *o.seed << ": " << passed << "/" << o.count
          << " verified\n";
      if (!failure.is_null()) out << "first failure: " << failure.dump() << '\n';
    }
  }
  return code;
}

int cmd_zspec(const Options& o, std::ostream& out) {
  if (o.inputs.empty()) throw Error(ErrorKind::kInputParseError, "zspec needs n");
  for (const std::string& input : o.inputs) {
    const std::uint64_t n = parse_size(input, "integer");
    const IntegerSpec s = spec_of_integers(n);
    Json ideals = Json::array();
    for (const auto& [p, a] : s.ideals) ideals.push_back(Json::array({p, a}));
    Json j{{"n", n}, {"all", s.all}, {"ideals", ideals}};
    std::optional<WindowResult> w;
    if (o.window) {
      w = z_pprime_window_check(static_cast<std::int64_t>(n), *o.window);
      j["window"] = Json{{"bound", *o.window},
                         {"violation", w->violation},
                         {"witness", w->witness ? Json::array({w->witness->first,
                                                               w->witness->second})
                                                : Json(nullptr)}};
    }
    if (o.json) {
      emit(out, j);
      continue;
    }
    out << "n = " << n << ": ";
    if (s.all) {
      out << "every (p^a)\n";
    } else {
      out << "{";
      for (std::size_t i = 0; i < s.ideals.size(); ++i) {
        out << (i ? ", " : "") << "(" << s.ideals[i].first << "^" << s.ideals[i].second
            << ")";
      }
      out << "}\n";
    }
    if (w) {
      out << "window " << *o.window << ": "
          << (w->violation ? "(n) not p-prime, a=" + std::to_string(w->witness->first) +
                                 " b=" + std::to_string(w->witness->second)
                           : std::string("no violation"))
          << '\n';
    }
  }
  return 0;
}

int cmd_ring(const Options& o, const Caps& caps, std::ostream& out) {
  std::vector<FiniteRing> rings;
  for (const std::string& input : o.inputs) {
    if (const auto bound = corpus_bound(input)) {
      for (std::size_t m = 1; m <= *bound; ++m) rings.push_back(FiniteRing::modular(m, caps));
      continue;
    }
    const Json doc = io::load_file(input);
    if (doc.is_array()) {
      for (const Json& j : doc) rings.push_back(io::ring_from_json(j, caps));
    } else {
      rings.push_back(io::ring_from_json(doc, caps));
    }
  }
  int code = 0;
  for (const FiniteRing& r : rings) {
    const auto ideals = two_sided_ideals(r, caps);
    const auto primes = p_prime_ideals(r, caps);
    const auto axioms = verify_ring_topology(r, caps);
    if (!all_passed(axioms)) code = 1;
    if (o.json) {
      Json ax = Json::array();
      for (const AxiomReport& a : axioms) ax.push_back(io::to_json(a));
      emit(out, Json{{"name", r.name()},
                     {"order", r.order()},
                     {"unital", r.one().has_value()},
                     {"ideals", io::to_json(ideals)},
                     {"p_primes", io::to_json(primes)},
                     {"axioms", std::move(ax)}});
      continue;
    }
    header(out, r.name(), r.order());
    out << "unital: " << (r.one() ? "yes" : "no") << '\n'
        << "two-sided ideals (" << ideals.size() << "):\n";
    for (const auto& i : ideals) out << "  " << set_text(i) << '\n';
    out << "p-prime ideals (" << primes.size() << "):\n";
    for (const auto& p : primes) out << "  " << set_text(p) << '\n';
    axioms_text(out, axioms);
  }
  return code;
}

struct Equivalence {
  std::string base;
  CheckStatus status = CheckStatus::kPass;
  bool domain = false;
  bool indecomposable = false;
};

Equivalence check_equivalence(const GGroup& x, std::string base, const Caps& caps) {
  Equivalence e{std::move(base)};
  if (x.carrier().order() > caps.stable_enumeration) {
    e.status = CheckStatus::kSkipped;
    return e;
  }
  e.domain = is_domain(x, caps);
  e.indecomposable = is_locally_g_indecomposable(x, caps).indecomposable;
  if (e.domain != e.indecomposable) e.status = CheckStatus::kFail;
  return e;
}

int cmd_verify(const Options& o, const Caps& caps, std::ostream& out) {
  std::vector<PrimalityNotion> notions{notion_of(o)};
  if (o.all) {
    notions = {PrimalityNotion::kIntersectionPrime, PrimalityNotion::kQuotientDomain};
  }
  int code = 0;
  std::size_t groups = 0;
  std::size_t failures = 0;
  for (const Item& it : load_items(o, caps)) {
    ++groups;
    bool failed = false;
    Json checks = Json::array();
    if (!o.json) header(out, it.name, it.x.carrier().order());
    for (PrimalityNotion notion : notions) {
      const auto reports = verify_axioms(it.x, notion, caps);
      failed = failed || !all_passed(reports);
      Json ax = Json::array();
      for (const AxiomReport& r : reports) ax.push_back(io::to_json(r));
      checks.push_back(Json{{"notion", notion_name(notion)}, {"axioms", std::move(ax)}});
      if (!o.json) {
        out << "[" << notion_name(notion) << "]\n";
        axioms_text(out, reports);
      }
    }
    Json record{{"name", it.name}, {"order", it.x.carrier().order()}, {"checks", checks}};
    if (o.all) {
      std::vector<Equivalence> eqs{check_equivalence(it.x, "given", caps)};
      if (it.x.base().order() == 1) {
        eqs.push_back(check_equivalence(GGroup::identity(it.x.carrier()), "identity", caps));
      }
      Json ej = Json::array();
      for (const Equivalence& e : eqs) {
        failed = failed || e.status == CheckStatus::kFail;
        ej.push_back(Json{{"base", e.base},
                          {"status", status_name(e.status)},
                          {"domain", e.domain},
                          {"locally_indecomposable", e.indecomposable}});
        if (!o.json) {
          out << "domain <=> locally indecomposable (" << e.base
              << " base): " << status_name(e.status) << '\n';
        }
      }
      record["equivalence"] = std::move(ej);
    }
    if (failed) {
      code = 1;
      ++failures;
    }
    if (o.json) emit(out, record);
  }
  if (o.json) {
    emit(out, Json{{"summary", Json{{"groups", groups}, {"failures", failures}}}});
  } else {
    out << "summary: " << groups << " groups, " << failures << " with failures\n";
  }
  return code;
}

int cmd_corpus(const Options& o, const Caps& caps, std::ostream& out) {
  if (o.inputs.size() != 1) throw Error(ErrorKind::kInputParseError, "corpus needs one bound");
  std::string text = o.inputs[0];
  if (const auto bound = corpus_bound(text)) text = std::to_string(*bound);
  const std::size_t bound = parse_size(text, "corpus bound");
  require_order(bound, caps);
  for (const CorpusEntry& e : corpus(bound)) {
    if (o.json) {
      emit(out, Json{{"name", e.name}, {"order", e.group.order()}, {"tags", e.tags}});
      continue;
    }
    out << e.group.order() << "\t" << e.name;
    for (std::size_t i = 0; i < e.tags.size(); ++i) out << (i ? "," : "\t") << e.tags[i];
    out << '\n';
  }
  return 0;
}

Caps make_caps(const Options& o) {
  Caps caps = default_caps();
  if (const char* env = std::getenv("SPECDEC_MAX_ORDER"); env && *env) {
    caps.group_order = parse_size(env, "SPECDEC_MAX_ORDER");
  }
  if (o.max_order) caps.group_order = *o.max_order;
  return caps;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::kClassifierInconsistency ? 1 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Prime spectra and direct decompositions of finite groups", "specdec"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--notion", o.notion, "Primality notion")
      ->check(CLI::IsMember({"intersection", "quotient-domain", "quotient"}));
  app.add_option("--max-order", o.max_order, "Cap on group orders");
  app.add_flag("--json", o.json, "JSON lines output");
  app.add_flag("--oracle", o.oracle, "Enable brute-force cross-checks");
  app.add_option("--seed", o.seed, "Seed for a random SNF property batch");

  auto sub = [&](const char* name, const char* help, const char* inputs_help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("inputs", o.inputs, inputs_help);
    return s;
  };
  const char* groups = "Group or G-group JSON files, or corpus:<max_order>";
  CLI::App* group = sub("group", "Basic group data and normal subgroups", groups);
  CLI::App* spec = sub("spectrum", "Prime spectrum, radical and axiom checks", groups);
  CLI::App* rad = sub("radical", "Radical of the trivial ideal", groups);
  CLI::App* dec = sub("decompose", "Direct decomposition certificate", groups);
  CLI::App* marin = sub("marin", "Classify groups without divisors of zero", groups);
  CLI::App* dom = sub("domain-check", "Zero-divisor scan", groups);
  CLI::App* snf = sub("snf", "Smith normal form of integer matrices", "Matrix JSON files");
  snf->add_option("--count", o.count, "Random batch size")->capture_default_str();
  CLI::App* zspec = sub("zspec", "Prime-power ideals of Z containing (n)", "Integers n");
  zspec->add_option("--window", o.window, "Bound for the p-prime window check on (n)");
  CLI::App* ring = sub("ring", "Two-sided and p-prime ideals of a finite ring",
                       "Ring JSON files, or corpus:<m> for Z/1 .. Z/m");
  CLI::App* verify = sub("verify", "Axiom and identity checks", groups);
  verify->add_flag("--all", o.all, "Both notions plus the indecomposability equivalence");
  CLI::App* corp = sub("corpus", "List the built-in corpus", "Maximum order");
  for (CLI::App* s : {group, spec, rad, dec, marin, dom, verify, corp, ring}) {
    s->get_option("inputs")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Caps caps = make_caps(o);
    if (*group) return cmd_group(o, caps, out);
    if (*spec) return cmd_spectrum(o, caps, out);
    if (*rad) return cmd_radical(o, caps, out);
    if (*dec) return cmd_decompose(o, caps, out);
    if (*marin) return cmd_marin(o, caps, out);
    if (*dom) return cmd_domain_check(o, caps, out);
    if (*snf) return cmd_snf(o, out);
    if (*zspec) return cmd_zspec(o, out);
    if (*ring) return cmd_ring(o, caps, out);
    if (*verify) return cmd_verify(o, caps, out);
    if (*corp) return cmd_corpus(o, caps, out);
  } catch (const Error& e) {
    err << "specdec: " << e.what() << '\n';
    if (o.json) {
      emit(out, Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}});
    }
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "specdec: internal error: " << e.what() << '\n';
    if (o.json) emit(out, Json{{"error", "Internal"}, {"message", e.what()}});
    return 1;
  }
  return 2;
}

}  // namespace specdec::cli
