// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "detpoly/detcore.hpp"
#include "detpoly/expr.hpp"

namespace detpoly::cli {

namespace {

using nlohmann::json;

struct Query {
  std::uint64_t characteristic = 0;
  std::string vars;
  std::string map_text;
  std::string poly_text;
  std::string p_text;
  std::string q_text;
  std::string order = "grevlex";
  unsigned nu_cap = 0;
  bool nu_cap_set = false;
  std::uint64_t step_budget = 0;
  unsigned power_cap = 8;
  bool assume_almost_surjective = false;
  std::string format = "text";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

struct Session {
  FieldSpec spec = FieldSpec::rationals();
  ContextPtr domain;
  std::optional<PolyMap> map;
  std::optional<Polynomial> poly;  // --poly over the domain
  std::optional<Polynomial> p;     // --p over the codomain
  std::optional<Polynomial> q;     // --q over the codomain
};

Session open_session(const Query& cfg, bool need_poly, bool need_pq) {
  Session s;
  if (cfg.characteristic != 0) s.spec = FieldSpec::prime_field(cfg.characteristic);
  std::vector<std::string> names;
  for (const std::string& part : split(cfg.vars, ',')) {
    std::string name = trimmed(part);
    if (!name.empty()) names.push_back(name);
  }
  if (names.empty()) throw DomainError("--vars must list at least one variable");
  MonomialOrder order = MonomialOrder::grevlex();
  if (cfg.order == "lex") {
    order = MonomialOrder::lex();
  } else if (cfg.order != "grevlex") {
    throw DomainError("--order must be lex or grevlex");
  }
  s.domain = make_context(names, order);
  std::vector<Polynomial> components;
  for (const std::string& part : split(cfg.map_text, ';')) {
    std::string text = trimmed(part);
    if (text.empty()) continue;
    components.push_back(parse(text, s.domain, s.spec));
  }
  if (components.empty()) throw DomainError("--map must list at least one component");
  s.map.emplace(std::move(components));
  if (need_poly) {
    if (trimmed(cfg.poly_text).empty()) throw DomainError("--poly is required");
    s.poly = parse(cfg.poly_text, s.domain, s.spec);
  }
  if (need_pq) {
    if (trimmed(cfg.p_text).empty() || trimmed(cfg.q_text).empty()) {
      throw DomainError("--p and --q are required");
    }
    s.p = parse(cfg.p_text, s.map->codomain_context(), s.spec);
    s.q = parse(cfg.q_text, s.map->codomain_context(), s.spec);
  }
  return s;
}

json ideal_generators(const Ideal& I) {
  json out = json::array();
  for (const Polynomial& g : I.groebner_basis()) out.push_back(print(g));
  return out;
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    default: return "unknown";
  }
}

json determinedness_certificate(const DeterminednessResult& res) {
  switch (res.kind) {
    case CertificateKind::InRing:
      return json{{"kind", "in_ring"}, {"p", print(*res.p)}};
    case CertificateKind::RadChi:
      return json{{"kind", "rad_chi"}, {"p", print(*res.p)}, {"nu", res.nu}};
    case CertificateKind::RationalOnly:
      return json{{"kind", "rational_only"},
                  {"r", print(res.rational->r)},
                  {"s", print(res.rational->s)}};
    case CertificateKind::Counterexample:
      return json{{"kind", "counterexample"},
                  {"two_point_ideal", ideal_generators(*res.counterexample)}};
    case CertificateKind::None:
      return json{{"kind", "none"}};
  }
  return json();
}

struct Outcome {
  json verdict;
  json certificate;
  json verified;
  int exit_code = 0;
};

Outcome dispatch(const std::string& command, const Query& cfg) {
  Outcome out;
  out.certificate = nullptr;
  out.verified = true;

  const bool needs_poly = command == "irr-closure" || command == "member-ring" ||
                          command == "member-field" || command == "radchi" ||
                          command == "determined" || command == "determined-thm" ||
                          command == "decompose";
  const bool needs_pq = command == "witness" || command == "divides";
  Session s = open_session(cfg, needs_poly, needs_pq);
  const PolyMap& f = *s.map;

  if (command == "indep") {
    out.verdict = algebraically_independent(f) ? "independent" : "dependent";
  } else if (command == "range-closure") {
    Ideal closure = range_closure(f);
    out.verdict = "ok";
    out.certificate = json{{"generators", ideal_generators(closure)}};
    bool ok = true;
    for (const Polynomial& g : closure.groebner_basis()) {
      ok = ok && compose(g, f.components()).is_zero();
    }
    out.verified = ok;
  } else if (command == "irr-closure") {
    ClosureCertificate cert = irr_of_closure(f, *s.poly);
    out.verdict = "ok";
    out.certificate = json{{"q", print(cert.q)}, {"d", cert.d}};
    out.verified = verify_closure(f, *s.poly, cert);
  } else if (command == "member-ring") {
    auto p = subalgebra_membership(f, *s.poly);
    out.verdict = p ? "member" : "not_member";
    if (p) {
      out.certificate = json{{"p", print(*p)}};
      out.verified = compose(*p, f.components()) == *s.poly;
    }
  } else if (command == "member-field") {
    auto pair = rational_membership(f, *s.poly);
    out.verdict = pair ? "member" : "not_member";
    if (pair) {
      out.certificate = json{{"r", print(pair->r)}, {"s", print(pair->s)}};
      out.verified = verify_rational(f, *s.poly, *pair);
    }
  } else if (command == "radchi") {
    std::optional<unsigned> cap;
    if (cfg.nu_cap_set) cap = cfg.nu_cap;
    auto rc = radchi_membership(f, *s.poly, cap);
    out.verdict = rc ? "member" : "not_member";
    if (rc) {
      out.certificate = json{{"p", print(rc->p)}, {"nu", rc->nu}};
      out.verified = verify_radchi(f, *s.poly, *rc);
    }
  } else if (command == "determined" || command == "determined-thm") {
    DeterminednessResult res = command == "determined"
                                   ? is_determined(f, *s.poly)
                                   : determined_theorem_route(f, *s.poly);
    out.verdict = res.determined ? "determined" : "not_determined";
    out.certificate = determinedness_certificate(res);
    out.verified = verify_determinedness(f, *s.poly, res);
  } else if (command == "almost-surj") {
    Verdict v = almost_surjectivity(f, cfg.power_cap);
    out.verdict = tristate_name(v.value);
    if (v.value == Tristate::No) {
      out.certificate = json{{"witness",
                              {{"p", print(v.witness->p)},
                               {"q_tilde", print(v.witness->q_tilde)},
                               {"not_dominant", v.witness->not_dominant}}}};
      out.verified = v.witness->verify(f);
    } else if (v.value == Tristate::Yes) {
      out.certificate = json{{"obstruction", ideal_generators(*v.obstruction)},
                             {"dimension", dimension(*v.obstruction)}};
      out.verified = dimension(*v.obstruction) <=
                     static_cast<int>(f.codomain_arity()) - 2;
    } else {
      if (v.obstruction) {
        out.certificate = json{{"obstruction", ideal_generators(*v.obstruction)}};
      }
      out.exit_code = 2;
    }
  } else if (command == "witness") {
    Polynomial b = non_almost_surjective_witness(f, *s.p, *s.q);
    out.verdict = "ok";
    out.certificate = json{{"b", print(b)}};
    // Postconditions were checked by the construction itself.
    out.verified = true;
  } else if (command == "divides") {
    out.verdict = divides_after_composition(*s.p, *s.q, f) ? "divides" : "does_not_divide";
  } else if (command == "decompose") {
    DecompositionCertificate cert = decompose(f, *s.poly, cfg.assume_almost_surjective);
    out.verdict = "ok";
    out.certificate = json{{"p", print(cert.outer)}, {"nu", cert.nu}};
    out.verified = verify_decomposition(f, *s.poly, cert);
  } else if (command == "dim") {
    Ideal I(s.domain, s.spec, f.components());
    out.verdict = dimension(I);
  } else {
    throw DomainError("unknown command '" + command + "'");
  }
  return out;
}

void render(const json& report, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << report.dump(2) << "\n";
    return;
  }
  os << "command: " << report["command"].get<std::string>() << "\n";
  os << "verdict: " << (report["verdict"].is_string()
                            ? report["verdict"].get<std::string>()
                            : report["verdict"].dump())
     << "\n";
  if (!report["certificate"].is_null()) {
    os << "certificate: " << report["certificate"].dump() << "\n";
  }
  if (!report["verified"].is_null()) {
    os << "verified: " << report["verified"].dump() << "\n";
  }
  if (!report["error"].is_null()) {
    os << "error: " << report["error"].get<std::string>() << "\n";
  }
  os << "elapsed_ms: " << report["elapsed_ms"].dump() << "\n";
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "detpoly - exact decisions about polynomials that factor through a "
      "polynomial map. All verdicts are statements over the algebraic "
      "closure of the coefficient field."};
  app.require_subcommand(1);

  Query cfg;
  std::vector<CLI::App*> commands;
  auto add_command = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--char", cfg.characteristic,
                    "coefficient field characteristic: 0 (rationals) or a prime");
    cmd->add_option("--vars", cfg.vars, "comma-separated domain variables, e.g. t1,t2")
        ->required();
    cmd->add_option("--map", cfg.map_text,
                    "semicolon-separated map components, e.g. \"t1;t1*t2\"")
        ->required();
    cmd->add_option("--poly", cfg.poly_text, "query polynomial over the domain variables");
    cmd->add_option("--p", cfg.p_text, "polynomial over the image variables x1..xm");
    cmd->add_option("--q", cfg.q_text, "polynomial over the image variables x1..xm");
    cmd->add_option("--order", cfg.order, "domain monomial order: grevlex (default) or lex");
    cmd->add_option("--nu-cap", cfg.nu_cap, "cap on the chi-power exponent search")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--step-budget", cfg.step_budget,
                    "max reduction steps per basis computation");
    cmd->add_option("--power-cap", cfg.power_cap,
                    "cap on witness power expansion (default 8)");
    cmd->add_flag("--assume-almost-surjective", cfg.assume_almost_surjective,
                  "skip the almost-surjectivity check in decompose");
    cmd->add_option("--format", cfg.format, "output format: text (default) or json");
    commands.push_back(cmd);
    return cmd;
  };

  add_command("indep", "are the map components algebraically independent?");
  add_command("range-closure", "vanishing ideal of the closure of the image");
  add_command("irr-closure", "irreducible equation of the graph-closure hypersurface");
  add_command("member-ring", "is the polynomial a polynomial in the map components?");
  add_command("member-field", "is the polynomial a rational function of the components?");
  add_command("radchi", "does some chi-power of the polynomial lie in the subalgebra?");
  add_command("determined", "is the polynomial determined by the map? (direct route)");
  add_command("determined-thm", "determinedness via membership under verified hypotheses");
  add_command("almost-surj", "is the map almost surjective? (three-valued)");
  add_command("witness", "from --p, --q with p(f) | q(f), p not | q: a determined "
                         "polynomial outside the subalgebra");
  add_command("divides", "does p(f) divide q(f)?");
  add_command("decompose", "recover the outer function of g = h(f)");
  add_command("dim", "dimension of the zero set of the ideal generated by --map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int cli_code = app.exit(e, out, msg);
    err << msg.str();
    return cli_code == 0 ? 0 : 3;
  }

  CLI::App* active = nullptr;
  for (CLI::App* cmd : commands) {
    if (cmd->parsed()) active = cmd;
  }
  const std::string command = active->get_name();

  cfg.nu_cap_set = active->count("--nu-cap") > 0;
  set_groebner_step_budget(cfg.step_budget > 0 ? cfg.step_budget
                                              : kDefaultGroebnerStepBudget);

  json report;
  report["command"] = command;
  json inputs;
  inputs["char"] = cfg.characteristic;
  inputs["vars"] = cfg.vars;
  inputs["map"] = cfg.map_text;
  if (!cfg.poly_text.empty()) inputs["poly"] = cfg.poly_text;
  if (!cfg.p_text.empty()) inputs["p"] = cfg.p_text;
  if (!cfg.q_text.empty()) inputs["q"] = cfg.q_text;
  inputs["order"] = cfg.order;
  report["inputs"] = inputs;
  report["verdict"] = nullptr;
  report["certificate"] = nullptr;
  report["verified"] = nullptr;
  report["error"] = nullptr;

  int exit_code = 0;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = dispatch(command, cfg);
    report["verdict"] = outcome.verdict;
    report["certificate"] = outcome.certificate;
    report["verified"] = outcome.verified;
    exit_code = outcome.exit_code;
  } catch (const ParseError& e) {
    report["error"] = e.what();
    exit_code = 5;
  } catch (const ResourceExhausted& e) {
    report["error"] = e.what();
    exit_code = 4;
  } catch (const Error& e) {
    report["error"] = e.what();
    exit_code = 3;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  report["elapsed_ms"] = elapsed;
  render(report, cfg.format, out);
  return exit_code;
}

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run_query(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::vector<std::string> argv_storage;
  argv_storage.push_back("detpoly");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());
  std::ostringstream out_stream, err_stream;
  int code = run(static_cast<int>(argv.size()), argv.data(), out_stream, err_stream);
  out = out_stream.str();
  err = err_stream.str();
  return code;
}

}  // namespace detpoly::cli
