// Command-line front end: load catalog entries or files, run the
// verification, exponent, indicator, smash and experiment operations, and
// print aligned tables or machine-readable JSON reports.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfsmash/integrals.hpp"
#include "hopfsmash/io.hpp"
#include "hopfsmash/suite.hpp"

namespace hs = hopfsmash;

namespace {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Accumulates one command's inputs, results and checks; renders them as
/// an aligned table or as the JSON report.  Identical inputs produce
/// identical output except for the wall-time line.
class Report {
public:
  explicit Report(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["inputs"] = hs::Json::array();
    j_["results"] = hs::Json::object();
    j_["checks"] = hs::Json::array();
    j_["notes"] = hs::Json::array();
  }

  void input(const std::string& name, const std::string& content) {
    j_["inputs"].push_back({{"name", name}, {"hash", fnv1a_hex(content)}});
  }
  void result(const std::string& key, const hs::Json& value) { j_["results"][key] = value; }
  void check(const std::string& name, bool pass, const std::string& detail = "") {
    j_["checks"].push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) failed_ = true;
  }
  void note(const std::string& text) { j_["notes"].push_back(text); }

  int render(bool json_mode) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    j_["wall_ms"] = ms;
    if (json_mode) {
      std::cout << j_.dump(2) << "\n";
      return failed_ ? 1 : 0;
    }
    std::cout << "command  " << j_["command"].get<std::string>() << "\n";
    for (const auto& in : j_["inputs"])
      line("input", in["name"].get<std::string>(), "hash " + in["hash"].get<std::string>());
    for (const auto& [k, v] : j_["results"].items())
      line("result", k, v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& c : j_["checks"]) {
      line("check", c["name"].get<std::string>(), c["pass"].get<bool>() ? "pass" : "FAIL");
      const std::string detail = c["detail"].get<std::string>();
      if (!c["pass"].get<bool>() && !detail.empty()) std::cout << "         " << detail << "\n";
    }
    for (const auto& n : j_["notes"]) std::cout << "note     " << n.get<std::string>() << "\n";
    std::cout << "time     " << ms << " ms\n";
    return failed_ ? 1 : 0;
  }

private:
  void line(const std::string& tag, const std::string& key, const std::string& value) {
    std::cout << tag << std::string(tag.size() < 9 ? 9 - tag.size() : 1, ' ');
    if (key.size() < 56)
      std::cout << key << std::string(56 - key.size(), ' ');
    else
      std::cout << key << "  ";
    std::cout << value << "\n";
  }

  hs::Json j_;
  bool failed_ = false;
  std::chrono::steady_clock::time_point start_;
};

unsigned env_bound() {
  const char* s = std::getenv("HOPFSMASH_BOUND");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(s, &end, 10);
  if (*end || v == 0 || v > 1u << 24)
    throw std::invalid_argument("HOPFSMASH_BOUND must be a positive integer");
  return static_cast<unsigned>(v);
}

unsigned pick_bound(unsigned cli_bound, const hs::FiniteHopfAlgebra& h, unsigned tau_order) {
  if (cli_bound) return cli_bound;
  if (const unsigned e = env_bound()) return e;
  return hs::default_exponent_bound(h, tau_order);
}

struct ResolvedAlgebra {
  hs::HopfPtr h;
  std::string ref;
  bool from_catalog = false;
  std::string entry_name;
};

ResolvedAlgebra resolve_ref(Report& rep, const std::string& ref) {
  ResolvedAlgebra out;
  out.ref = ref;
  if (ref.rfind("catalog:", 0) == 0) {
    out.from_catalog = true;
    out.entry_name = ref.substr(8);
    out.h = hs::catalog_entry(out.entry_name).algebra;
    rep.input(ref, hs::algebra_to_text(*out.h));
  } else {
    const std::string bytes = file_bytes(ref);
    out.h = hs::algebra_from_json(hs::Json::parse(bytes));
    rep.input(ref, bytes);
  }
  return out;
}

/// Catalog automorphism name when the algebra came from the catalog,
/// otherwise a path to an automorphism file.
hs::HopfAutomorphism resolve_aut(Report& rep, const ResolvedAlgebra& a, const std::string& spec) {
  if (a.from_catalog) {
    const auto& auts = hs::catalog_entry(a.entry_name).automorphisms;
    const auto it = auts.find(spec);
    if (it != auts.end()) {
      rep.input("aut " + spec, hs::automorphism_to_json(it->second, a.ref).dump());
      return it->second;
    }
  }
  const std::string bytes = file_bytes(spec);
  rep.input(spec, bytes);
  return hs::automorphism_from_json(hs::Json::parse(bytes), a.h);
}

hs::Representation resolve_rep(Report& rep, const ResolvedAlgebra& a, const std::string& spec) {
  if (a.from_catalog) {
    const auto& reps = hs::catalog_entry(a.entry_name).representations;
    const auto it = reps.find(spec);
    if (it != reps.end()) {
      rep.input("rep " + spec, hs::representation_to_json(it->second, a.ref).dump());
      return it->second;
    }
  }
  const std::string bytes = file_bytes(spec);
  rep.input(spec, bytes);
  return hs::representation_from_json(hs::Json::parse(bytes), a.h);
}

int cmd_verify(const std::string& ref, bool json_mode) {
  Report rep("verify " + ref);
  const ResolvedAlgebra a = resolve_ref(rep, ref);
  const hs::AxiomReport ax = hs::verify_hopf_axioms(*a.h);
  rep.result("algebra", a.h->name());
  rep.result("dimension", a.h->dim());
  rep.result("field", "Q(zeta_" + std::to_string(a.h->field()->cyclotomic_order()) + ")");
  for (const auto& c : ax.checks) rep.check(c.name, c.pass);
  rep.result("s_squared_identity", ax.s_squared_identity);
  if (!ax.s_squared_identity)
    rep.note("S^2 != id: untwisted exponent searches carry a warning flag");
  return rep.render(json_mode);
}

int cmd_exponent(const std::string& ref, const std::string& aut, unsigned bound, bool json_mode) {
  Report rep("exponent " + ref + (aut.empty() ? "" : " --aut " + aut));
  const ResolvedAlgebra a = resolve_ref(rep, ref);
  hs::ExponentResult r{false, 0, 0, false};
  if (aut.empty()) {
    const unsigned b = pick_bound(bound, *a.h, 1);
    rep.result("bound", b);
    r = hs::exponent(a.h, b);
  } else {
    const hs::HopfAutomorphism tau = resolve_aut(rep, a, aut);
    const unsigned b = pick_bound(bound, *a.h, tau.order());
    rep.result("bound", b);
    rep.result("automorphism_order", tau.order());
    r = hs::twisted_exponent(a.h, tau, b);
  }
  rep.result("outcome", r.str());
  if (r.found) rep.result("exponent", r.value);
  if (r.antipode_warning)
    rep.note("S^2 != id on this algebra; the untwisted definition is used as a bounded search");
  return rep.render(json_mode);
}

int cmd_indicator(const std::string& ref, unsigned m, const std::string& aut,
                  const std::string& rep_spec, bool json_mode) {
  Report rep("indicator " + ref + " --m " + std::to_string(m) +
             (aut.empty() ? "" : " --aut " + aut) +
             (rep_spec.empty() ? "" : " --rep " + rep_spec));
  const ResolvedAlgebra a = resolve_ref(rep, ref);
  hs::IndicatorValue iv;
  if (rep_spec.empty()) {
    const hs::HopfAutomorphism tau =
        aut.empty() ? hs::identity_automorphism(a.h) : resolve_aut(rep, a, aut);
    rep.result("kind", aut.empty() ? "regular indicator" : "regular twisted indicator");
    iv = hs::regular_twisted_indicator(a.h, m, tau);
  } else {
    const hs::Representation rho = resolve_rep(rep, a, rep_spec);
    rep.result("rank", rho.rank());
    if (aut.empty()) {
      rep.result("kind", "module indicator");
      iv = hs::module_indicator(rho, m);
    } else {
      rep.result("kind", "twisted module indicator");
      iv = hs::twisted_module_indicator(rho, m, resolve_aut(rep, a, aut));
    }
  }
  rep.result("value", iv.value.str());
  rep.result("methods", iv.methods);
  return rep.render(json_mode);
}

int cmd_smash(const std::string& ref, const std::string& action_file, const std::string& aut,
              const std::string& emit, bool json_mode) {
  if (action_file.empty() == aut.empty())
    throw std::invalid_argument("smash needs exactly one of an action file or --aut");
  Report rep("smash " + ref + (aut.empty() ? " " + action_file : " --aut " + aut));
  const ResolvedAlgebra a = resolve_ref(rep, ref);

  hs::HopfAction action = [&] {
    if (!aut.empty()) return hs::cyclic_action(resolve_aut(rep, a, aut));
    const std::string bytes = file_bytes(action_file);
    rep.input(action_file, bytes);
    return hs::action_from_json(hs::Json::parse(bytes), a.h);
  }();

  const hs::SmashCoproduct k(action);
  rep.result("base_dimension", a.h->dim());
  rep.result("group_order", action.group.order());
  rep.result("dimension", k.k()->dim());
  rep.check("hopf axiom suite", k.k()->is_valid());
  const hs::StructureComparison dual_cmp = hs::smash_duality_check(action);
  rep.check("dual matches the product-side construction", dual_cmp.equal, dual_cmp.detail);
  if (!emit.empty()) {
    hs::save_algebra(*k.k(), emit);
    rep.result("emitted", emit);
  }
  return rep.render(json_mode);
}

int cmd_suite(unsigned bound, bool perturb, bool json_mode) {
  Report rep(std::string("suite") + (perturb ? " --perturb" : ""));
  hs::SuiteOptions opts;
  opts.bound = bound ? bound : env_bound();
  opts.perturb = perturb;
  const hs::SuiteReport sr = hs::run_acceptance_suite(opts);
  for (const auto& c : sr.checks)
    rep.check(c.group + " :: " + c.name, c.pass, c.detail);
  size_t failed = 0;
  for (const auto& c : sr.checks)
    if (!c.pass) ++failed;
  rep.result("checks_total", sr.checks.size());
  rep.result("checks_failed", failed);
  return rep.render(json_mode);
}

int cmd_experiment(const std::string& ref, const std::string& aut, unsigned bound,
                   bool json_mode) {
  Report rep("experiment " + ref + " --aut " + aut);
  const ResolvedAlgebra a = resolve_ref(rep, ref);
  const hs::HopfAutomorphism tau = resolve_aut(rep, a, aut);
  const unsigned b = pick_bound(bound, *a.h, tau.order());
  rep.result("bound", b);
  const hs::CoprimeExperiment ce = hs::coprime_power_experiment(a.h, tau, b);
  rep.result("automorphism_order", ce.tau_order);
  rep.result("base_twist", ce.base.str());
  for (const auto& [m, r] : ce.powers)
    rep.result("power_m_" + std::to_string(m), r.str());
  rep.result("all_agree", ce.all_agree);
  rep.result("inconclusive", ce.inconclusive);
  if (!ce.all_agree)
    rep.note("DISAGREEMENT between coprime twists: potential counterexample, please re-run "
             "with a larger bound and report");
  else if (ce.inconclusive)
    rep.note("bound exhausted before all searches finished; agreement is inconclusive");
  return rep.render(json_mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for finite-dimensional Hopf algebras, smash coproducts, "
               "twisted exponents and indicators"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the machine-readable report");

  std::string ref, aut, rep_spec, action_file, emit;
  unsigned m = 0, bound = 0;
  bool perturb = false;

  auto* verify = app.add_subcommand("verify", "run the full Hopf axiom suite on an algebra");
  verify->add_option("algebra", ref, "catalog:NAME or an algebra file")->required();

  auto* exponent = app.add_subcommand("exponent", "bounded (twisted) exponent search");
  exponent->add_option("algebra", ref, "catalog:NAME or an algebra file")->required();
  exponent->add_option("--aut", aut, "twisting automorphism: catalog name or file");
  exponent->add_option("--bound", bound, "search bound (default 16*dim*order)");

  auto* indicator = app.add_subcommand("indicator",
                                       "regular or module (twisted) indicator values");
  indicator->add_option("algebra", ref, "catalog:NAME or an algebra file")->required();
  indicator->add_option("--m", m, "power of the integral")->required();
  indicator->add_option("--aut", aut, "twisting automorphism: catalog name or file");
  indicator->add_option("--rep", rep_spec, "module: catalog name or representation file");

  auto* smash = app.add_subcommand("smash", "build and verify a smash coproduct");
  smash->add_option("algebra", ref, "catalog:NAME or an algebra file")->required();
  smash->add_option("action", action_file, "action file (alternative to --aut)");
  smash->add_option("--aut", aut, "build the cyclic action generated by this automorphism");
  smash->add_option("--emit", emit, "write the constructed algebra to this file");

  auto* suite = app.add_subcommand("suite", "reproduce every pinned value and identity check");
  suite->add_option("--bound", bound, "override exponent search bounds");
  suite->add_flag("--perturb", perturb,
                  "damage one structure constant first (self-test of the suite)");

  auto* experiment = app.add_subcommand("experiment",
                                        "compare twisted exponents over coprime powers");
  experiment->add_option("algebra", ref, "catalog:NAME or an algebra file")->required();
  experiment->add_option("--aut", aut, "twisting automorphism: catalog name or file")->required();
  experiment->add_option("--bound", bound, "search bound (default 16*dim*order)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(ref, json_mode);
    if (exponent->parsed()) return cmd_exponent(ref, aut, bound, json_mode);
    if (indicator->parsed()) return cmd_indicator(ref, m, aut, rep_spec, json_mode);
    if (smash->parsed()) return cmd_smash(ref, action_file, aut, emit, json_mode);
    if (suite->parsed()) return cmd_suite(bound, perturb, json_mode);
    if (experiment->parsed()) return cmd_experiment(ref, aut, bound, json_mode);
    return 2;
  } catch (const hs::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hs::Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
