// apds: command line front end for the decision procedure and its certificates.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "apds/apds.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kError = 2 };

struct Globals {
  bool json = false;
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw apds::Error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw apds::Error("cannot write " + path);
  out << text;
}

// Writes to -o when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_file(g.output, text);
  }
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

apds::System load(const std::string& path, apds::WellFormedness mode = apds::WellFormedness::Strict) {
  try {
    return apds::parse_system(read_file(path), mode);
  } catch (const apds::ParseError& e) {
    throw apds::ParseError(path + ":" + e.what(), 0, 0);
  }
}

apds::Atom config_arg(const std::string& text) {
  apds::Atom a;
  try {
    a = apds::parse_atom(text);
  } catch (const apds::ParseError& e) {
    throw apds::ParseError("configuration '" + text + "': " + e.what(), 0, 0);
  }
  if (a.is_open()) throw apds::ContractError("configuration " + text + " must be closed");
  return a;
}

Json proof_json(const apds::ProofNode& p) { return Json::parse(apds::write_proof_json(p)); }

apds::System small_step_of(const apds::System& s) {
  return s.is_small_step() ? s : apds::to_small_step(s).system;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string system, proof;
  bool hypotheses = false, continuations = false;
};

int run_check(const Globals& g, const CheckArgs& a) {
  apds::System s = load(a.system, apds::WellFormedness::Relaxed);
  apds::ProofNode p = apds::read_proof_json(read_file(a.proof));
  auto issues = apds::check_proof(s, p, {a.hypotheses, a.continuations});
  if (g.json) {
    Json list = Json::array();
    for (const auto& i : issues) list.push_back(Json{{"path", i.path}, {"message", i.message}});
    emit_json(g, Json{{"valid", issues.empty()}, {"issues", std::move(list)}});
  } else {
    emit(g, issues.empty() ? std::string("valid\n") : "invalid\n" + apds::format_issues(issues));
  }
  return issues.empty() ? kOk : kNegative;
}

struct NormalizeArgs {
  std::string system;
};

int run_normalize(const Globals& g, const NormalizeArgs& a) {
  apds::Normalized n = apds::to_small_step(load(a.system));
  std::string text = apds::serialize_system(n.system);
  if (g.json) {
    Json erasure = Json::object();
    for (const auto& [fresh, origin] : n.erasure.entries()) {
      erasure[std::string(fresh.name())] = apds::format_atom(apds::Atom::closed(origin.first, origin.second));
    }
    emit_json(g, Json{{"system", text}, {"erasure", std::move(erasure)}});
    return kOk;
  }
  if (!g.output.empty()) {
    write_file(g.output, text);
    write_file(g.output + ".erase", n.erasure.serialize());
    return kOk;
  }
  std::cout << text;
  std::istringstream lines(n.erasure.serialize());
  for (std::string line; std::getline(lines, line);) std::cout << "# erase " << line << '\n';
  return kOk;
}

struct SaturateArgs {
  std::string system, provenance;
};

int run_saturate(const Globals& g, const SaturateArgs& a) {
  apds::System sat = apds::saturate(small_step_of(load(a.system)));
  std::string prov = apds::format_provenance(sat);
  if (!a.provenance.empty()) write_file(a.provenance, prov);
  if (g.json) {
    Json added = Json::array();
    for (const apds::Rule& r : sat.rules()) {
      if (r.from_saturation()) added.push_back(r.id());
    }
    Json lines = Json::array();
    std::istringstream in(prov);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    emit_json(g, Json{{"system", apds::serialize_system(sat)}, {"added", std::move(added)}, {"provenance", std::move(lines)}});
  } else {
    emit(g, apds::serialize_system(sat));
  }
  return kOk;
}

struct DecideArgs {
  std::string system, config, certificate, refute;
  bool saturated = false;
};

int run_decide(const Globals& g, const DecideArgs& a) {
  apds::System s = load(a.system);
  apds::Atom config = config_arg(a.config);
  auto decider = apds::decider_for(s);
  apds::Verdict v = decider->decide(config, !a.refute.empty());
  std::optional<apds::ProofNode> cert = v.certificate;
  if (v.provable && a.saturated) cert = decider->saturated_certificate(config);

  if (cert && !a.certificate.empty()) write_file(a.certificate, apds::write_proof_json(*cert));
  if (v.refutation && !a.refute.empty()) write_file(a.refute, apds::write_proof_json(*v.refutation));

  if (g.json) {
    Json out{{"config", apds::format_atom(config)}, {"provable", v.provable}};
    if (cert) out["certificate"] = proof_json(*cert);
    if (v.refutation) out["refutation"] = proof_json(*v.refutation);
    emit_json(g, out);
  } else {
    emit(g, v.provable ? "provable\n" : "not provable\n");
  }
  return v.provable ? kOk : kNegative;
}

struct ProveArgs {
  std::string system, config;
  bool saturated = false;
};

int run_prove(const Globals& g, const ProveArgs& a) {
  apds::System s = load(a.system);
  apds::Atom config = config_arg(a.config);
  auto decider = apds::decider_for(s);
  apds::Verdict v = decider->decide(config, false);
  if (!v.provable) {
    if (g.json) {
      emit_json(g, Json{{"config", apds::format_atom(config)}, {"provable", false}});
    } else {
      emit(g, "not provable\n");
    }
    return kNegative;
  }
  apds::ProofNode cert = a.saturated ? *decider->saturated_certificate(config) : *v.certificate;
  if (g.json) {
    emit_json(g, Json{{"config", apds::format_atom(config)}, {"provable", true}, {"certificate", proof_json(cert)}});
  } else {
    emit(g, apds::write_proof_json(cert));
  }
  return kOk;
}

struct RefuteArgs {
  std::string system, config, expansion_map;
  std::size_t depth = 4;
};

int run_refute(const Globals& g, const RefuteArgs& a) {
  apds::System s = load(a.system);
  apds::Atom config = config_arg(a.config);
  apds::Certifier certifier(s);
  if (!a.expansion_map.empty()) {
    write_file(a.expansion_map, apds::write_expansion_map_json(certifier.expansion_map(), certifier.automaton_negation()));
  }
  auto finite = certifier.refutation(config);
  if (!finite) {
    if (g.json) {
      emit_json(g, Json{{"config", apds::format_atom(config)}, {"provable", true}});
    } else {
      emit(g, "provable\n");
    }
    return kNegative;
  }
  apds::ProofNode prefix = certifier.unfold(config, a.depth);
  if (g.json) {
    emit_json(g, Json{{"config", apds::format_atom(config)},
                      {"provable", false},
                      {"depth", a.depth},
                      {"refutation", proof_json(*finite)},
                      {"unfolding", proof_json(prefix)}});
  } else {
    emit(g, apds::write_proof_json(prefix));
  }
  return kOk;
}

struct CutArgs {
  std::string system, proof;
  bool trace = false;
};

int run_eliminate_cuts(const Globals& g, const CutArgs& a) {
  apds::System s = load(a.system);
  if (!apds::is_saturated(s)) {
    std::cerr << "apds: note: " << a.system << " is not saturated; saturating it first\n";
    s = apds::saturate(small_step_of(s));
  }
  apds::ProofNode p = apds::read_proof_json(read_file(a.proof));
  auto issues = apds::check_proof(s, p);
  if (!issues.empty()) throw apds::ContractError("input proof does not check:\n" + apds::format_issues(issues));
  apds::CutElimination out = apds::eliminate_cuts(p, s);
  if (g.json || a.trace) {
    emit_json(g, Json{{"proof", proof_json(out.proof)}, {"trace", Json::parse(apds::write_trace_json(out.trace))}});
  } else {
    emit(g, apds::write_proof_json(out.proof));
  }
  return kOk;
}

struct ComplementArgs {
  std::string system, tilde, negation, automaton;
};

int run_complement(const Globals& g, const ComplementArgs& a) {
  apds::System s = small_step_of(load(a.system));
  apds::System t = apds::tilde(s);
  if (!a.tilde.empty()) write_file(a.tilde, apds::serialize_system(t));
  if (!a.negation.empty()) write_file(a.negation, apds::serialize_system(apds::build_negation_extension(s).system));
  if (!a.automaton.empty()) {
    apds::System m = apds::extract_multi_automaton(apds::saturate(s));
    write_file(a.automaton, apds::serialize_system(apds::negate_automaton(m).system));
  }
  apds::System bar = t.with_rules(apds::complement_rules(t), s.name() + "_bar");
  if (g.json) {
    emit_json(g, Json{{"tilde", apds::serialize_system(t)}, {"complement", apds::serialize_system(bar)}});
  } else {
    emit(g, apds::serialize_system(bar));
  }
  return kOk;
}

struct OracleArgs {
  std::string system, config;
  std::size_t depth = 8, word_bound = 4;
};

int run_oracle(const Globals& g, const OracleArgs& a) {
  apds::System s = load(a.system, apds::WellFormedness::Relaxed);
  apds::Atom config = config_arg(a.config);
  auto p = apds::oracle::search(s, config, a.depth, a.word_bound);
  if (g.json) {
    Json out{{"config", apds::format_atom(config)}, {"found", p.has_value()}};
    if (p) out["proof"] = proof_json(*p);
    emit_json(g, out);
  } else {
    emit(g, p ? apds::write_proof_json(*p) : std::string("no proof within bounds\n"));
  }
  return p ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide provability in alternating pushdown systems and emit certificates."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("-o,--output", g.output, "Write the main output to this file");

  int status = kOk;
  auto bind = [&](CLI::App* sub, auto args, auto run) {
    sub->callback([&g, &status, args, run] { status = run(g, *args); });
  };

  auto check = std::make_shared<CheckArgs>();
  auto* c = app.add_subcommand("check", "Check a JSON proof against a system (0 valid, 1 invalid)");
  c->add_option("system", check->system)->required();
  c->add_option("proof", check->proof)->required();
  c->add_flag("--hypotheses", check->hypotheses, "Admit hypothesis leaves");
  c->add_flag("--continuations", check->continuations, "Admit continuation leaves");
  bind(c, check, run_check);

  auto normalize = std::make_shared<NormalizeArgs>();
  auto* n = app.add_subcommand("normalize", "Small-step normal form; with -o also writes <out>.erase");
  n->add_option("system", normalize->system)->required();
  bind(n, normalize, run_normalize);

  auto sat = std::make_shared<SaturateArgs>();
  auto* s = app.add_subcommand("saturate", "Saturate (normalizing first if needed)");
  s->add_option("system", sat->system)->required();
  s->add_option("--provenance", sat->provenance, "Write provenance lines to this file");
  bind(s, sat, run_saturate);

  auto dec = std::make_shared<DecideArgs>();
  auto* d = app.add_subcommand("decide", "Decide a configuration (0 provable, 1 not provable)");
  d->add_option("system", dec->system)->required();
  d->add_option("config", dec->config)->required();
  d->add_option("--certificate", dec->certificate, "Write the proof certificate here when provable");
  d->add_option("--refute", dec->refute, "Write the finite refutation here when not provable");
  d->add_flag("--saturated", dec->saturated, "Certificate over the saturated system instead of the input");
  bind(d, dec, run_decide);

  auto prove = std::make_shared<ProveArgs>();
  auto* p = app.add_subcommand("prove", "Print a certificate for a provable configuration");
  p->add_option("system", prove->system)->required();
  p->add_option("config", prove->config)->required();
  p->add_flag("--saturated", prove->saturated, "Certificate over the saturated system instead of the input");
  bind(p, prove, run_prove);

  auto ref = std::make_shared<RefuteArgs>();
  auto* r = app.add_subcommand("refute", "Co-inductive counterexample prefix for an unprovable configuration");
  r->add_option("system", ref->system)->required();
  r->add_option("config", ref->config)->required();
  r->add_option("--depth", ref->depth, "Unfolding depth")->capture_default_str();
  r->add_option("--expansion-map", ref->expansion_map, "Write the expansion map here");
  bind(r, ref, run_refute);

  auto cut = std::make_shared<CutArgs>();
  auto* e = app.add_subcommand("eliminate-cuts", "Rewrite a proof into a cut-free one");
  e->add_option("system", cut->system)->required();
  e->add_option("proof", cut->proof)->required();
  e->add_flag("--trace", cut->trace, "Include the reduction trace");
  bind(e, cut, run_eliminate_cuts);

  auto comp = std::make_shared<ComplementArgs>();
  auto* m = app.add_subcommand("complement", "Print the complement of the tilde system");
  m->add_option("system", comp->system)->required();
  m->add_option("--tilde", comp->tilde, "Write the tilde system here");
  m->add_option("--negation", comp->negation, "Write the negation extension here");
  m->add_option("--automaton-negation", comp->automaton, "Write the negated multi-automaton here");
  bind(m, comp, run_complement);

  auto orc = std::make_shared<OracleArgs>();
  auto* o = app.add_subcommand("oracle", "Bounded brute-force proof search (0 found, 1 none)");
  o->add_option("system", orc->system)->required();
  o->add_option("config", orc->config)->required();
  o->add_option("--depth", orc->depth, "Maximum proof height")->capture_default_str();
  o->add_option("--word-bound", orc->word_bound, "Maximum word length")->capture_default_str();
  bind(o, orc, run_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "apds: error: " << e.what() << '\n';
    return kError;
  }
  return status;
}
