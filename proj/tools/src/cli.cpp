#include "dehnkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "dehnkit/errors.hpp"
#include "dehnkit/report.hpp"

namespace dehnkit::cli {

namespace {

struct Options {
  std::string preset = "amalgam-h1";
  std::string config;
  unsigned cap = 80;
  std::string lambda = "1/10";
  std::vector<std::string> words;
  std::vector<std::string> relators;
  std::vector<unsigned> indices;
  std::string json;
  unsigned radius = 2;
  std::size_t count = 5;
  std::uint64_t seed = 0;
  std::string factor;
  std::string h_n;
  std::string tie_break = "leftmost";
  bool allow_uncertified = false;
  std::ostream* json_out = nullptr;  // stdout target for '--json -'
};

FactorSystem load_system(const Options& o) {
  if (!o.config.empty()) {
    return FactorSystem::from_file(o.config);
  }
  return FactorSystem::preset(o.preset);
}

Json base_config(const Options& o, const FactorSystem& sys) {
  Json c;
  c["system"] = to_json(sys);
  c["source"] = o.config.empty() ? "preset:" + o.preset : "file:" + o.config;
  c["cap"] = o.cap;
  c["seed"] = o.seed;
  return c;
}

struct RelatorSource {
  std::vector<AmalgamWord> words;
  Json labels = Json::array();
};

RelatorSource load_relators(const Options& o, const FactorSystem& sys) {
  RelatorSource src;
  for (const auto& text : o.relators) {
    src.words.push_back(parse_amalgam(sys, text));
    src.labels.push_back(text);
  }
  for (unsigned k : o.indices) {
    src.words.push_back(build_relator(sys, {o.cap, k}));
    src.labels.push_back("r" + std::to_string(k));
  }
  if (src.words.empty()) {
    src.words.push_back(build_r0(sys, o.cap));
    src.labels.push_back("r0");
  }
  return src;
}

std::string require_word(const Options& o) {
  if (o.words.size() != 1) {
    throw ConfigError("--word: exactly one word is required");
  }
  return o.words.front();
}

void write_json(const Options& o, const Json& report, std::ostream& /*text*/) {
  if (o.json.empty()) {
    return;
  }
  if (o.json == "-") {
    *o.json_out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(o.json);
  if (!file) {
    throw ConfigError("--json: cannot write '" + o.json + "'");
  }
  file << report.dump(2) << "\n";
}

std::string piece_summary(const PieceReport& p) {
  std::ostringstream os;
  os << "members: " << p.representatives << "\n"
     << "max piece: " << p.max_piece_length << "\n"
     << "max piece (letter conjugates): " << p.max_conjugate_piece_length << "\n"
     << "min relator length: " << p.min_relator_length << "\n"
     << "achieved lambda: " << p.achieved_lambda.str() << "\n";
  return os.str();
}

int cmd_reduce(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  RawWord raw = parse_word(require_word(o));
  Factor f = Factor::K;
  if (o.factor == "L") {
    f = Factor::L;
  } else if (o.factor.empty()) {
    for (const auto& s : raw) {
      auto id = sys.find(s.symbol);
      if (id && sys.home_factor(*id) == Factor::L) {
        f = Factor::L;
      }
    }
  } else if (o.factor != "K") {
    throw ConfigError("--factor: expected K or L");
  }
  FactorWord w = sys.reduce(raw, f);
  const bool in_h = sys.in_H(w);
  out << sys.format(w) << "\n"
      << "factor: " << to_string(f) << "\n"
      << "in H: " << (in_h ? "yes" : "no") << "\n";
  Json result{{"word", sys.format(w)}, {"factor", to_string(f)}, {"in_H", in_h}};
  if (!in_h) {
    HCore c = sys.h_core(w);
    out << "core: " << sys.format(c.core) << "\n";
    result["core"] = Json{{"prefix", sys.format(c.prefix)},
                          {"core", sys.format(c.core)},
                          {"suffix", sys.format(c.suffix)}};
  }
  Json config = base_config(o, sys);
  config["word"] = o.words.front();
  write_json(o, envelope("reduce", config, result), out);
  return 0;
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  AmalgamWord w = parse_amalgam(sys, require_word(o));
  CyclicReduction cr = cyclically_reduce(sys, w);
  out << format(sys, w) << "\n"
      << "length " << w.length() << "\n"
      << "cyclic " << format(sys, cr.cyclic.word()) << "\n";
  Json result = to_json(sys, w);
  Json letters = Json::array();
  for (const auto& letter : w.letters()) {
    letters.push_back(Json{{"factor", to_string(letter.factor())}, {"word", sys.format(letter)}});
  }
  result["letters"] = std::move(letters);
  result["cyclically_reduced"] = is_cyclically_reduced(sys, w);
  result["cyclic"] = Json{{"word", format(sys, cr.cyclic.word())},
                          {"conjugator", format(sys, cr.conjugator)}};
  Json config = base_config(o, sys);
  config["word"] = o.words.front();
  write_json(o, envelope("normal-form", config, result), out);
  return 0;
}

int cmd_pieces(const Options& o, std::ostream& out, bool check) {
  FactorSystem sys = load_system(o);
  RelatorSource src = load_relators(o, sys);
  SymmetrizedSet R = symmetrize(sys, src.words);
  Rational lambda = Rational::parse(o.lambda);
  CPrimeResult result = check_c_prime(R, lambda);
  out << piece_summary(result.report);
  if (check) {
    if (result.certified) {
      out << "C'(" << lambda.str() << "): certified\n";
    } else {
      out << "C'(" << lambda.str() << "): violated (" << result.violation << ", length "
          << result.offending_length << ")\n";
    }
  }
  Json config = base_config(o, sys);
  config["lambda"] = lambda.str();
  config["relators"] = src.labels;
  Json body = check ? to_json(R, result) : to_json(R, result.report);
  write_json(o, envelope(check ? "check-cc" : "pieces", config, body), out);
  return check && !result.certified ? 1 : 0;
}

int cmd_dehn(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  RelatorSource src = load_relators(o, sys);
  AmalgamWord w = parse_amalgam(sys, require_word(o));
  DehnOptions dopt;
  dopt.require_certificate = !o.allow_uncertified;
  dopt.seed = o.seed;
  if (o.tie_break == "random") {
    dopt.tie_break = TieBreak::Random;
  } else if (o.tie_break != "leftmost") {
    throw ConfigError("--tie-break: expected leftmost or random");
  }
  DehnEngine engine(symmetrize(sys, src.words), dopt);
  DehnVerdict v = engine.membership(w);
  if (v.outcome == Outcome::Trivial) {
    out << "trivial (" << v.trace.size() << " rewrite steps, replay "
        << (engine.replay(w, v) ? "ok" : "FAILED") << ")\n";
  } else {
    out << "nontrivial (max fragment ratio " << v.witness->str() << ")";
    if (!v.sound) {
      out << " [relator set not C'(1/10); verdict unproven]";
    }
    out << "\n";
  }
  Json config = base_config(o, sys);
  config["relators"] = src.labels;
  config["word"] = o.words.front();
  config["tie_break"] = o.tie_break;
  config["certified"] = engine.certified();
  Json result = to_json(sys, v);
  result["input"] = to_json(sys, canonical(sys, w));
  if (v.outcome == Outcome::Trivial) {
    result["replay"] = engine.replay(w, v);
  }
  write_json(o, envelope("dehn", config, result), out);
  return v.outcome == Outcome::Trivial ? 0 : 1;
}

StepPresentation load_step(const Options& o, const FactorSystem& sys) {
  if (!o.h_n.empty()) {
    return assemble_step(sys, sys.parse(o.h_n, Factor::K), o.cap);
  }
  // h_n = x h^-1 keeps the configured h.
  return assemble_step(sys, multiply(sys.x(), sys.h().inverse(), Factor::K), o.cap);
}

std::string check_line(const char* name, const BallCheck& b) {
  std::string line = std::string(name) + ": " + (b.passed ? "pass" : "FAIL") + " (" +
                     std::to_string(b.checked) + " checked)";
  if (b.counterexample) {
    line += " counterexample " + *b.counterexample;
  }
  return line + "\n";
}

int cmd_verify_step(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  StepPresentation step = load_step(o, sys);
  ConditionReport r = verify_conditions(step, o.radius);
  out << "h = " << step.system.format(step.h) << "\n"
      << "relator length: " << r.relator_length << "\n"
      << "power bound: " << r.relator_length << " < " << r.power_exponent << ": "
      << (r.length_below_power ? "holds" : "FAILS") << "\n"
      << "C'(1/10): " << (r.certificate.certified ? "certified" : "violated") << " (max piece "
      << r.certificate.report.max_piece_length << ")\n"
      << check_line("embedding", r.embedding) << check_line("intersection", r.intersection)
      << check_line("malnormality", r.malnormality);
  Json config = base_config(o, sys);
  config["radius"] = o.radius;
  config["h_n"] = step.system.format(step.h_n);
  Json result = to_json(r);
  result["h"] = step.system.format(step.h);
  write_json(o, envelope("verify-step", config, result), out);
  return r.passed() ? 0 : 1;
}

int cmd_topology_base(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  StepPresentation step = load_step(o, sys);
  TopologyOptions topt;
  topt.require_certificate = !o.allow_uncertified;
  TopologyBase base = build_topology_base(step, o.count, o.cap, topt);
  for (const auto& lv : base.levels) {
    out << "n=" << lv.n << " g=" << format(step.system, lv.g) << " k=" << lv.k
        << " |r_k|=" << lv.relator_length << " g:" << to_string(lv.g_verdict.outcome)
        << " r_k at level:" << to_string(lv.relator_verdict.outcome);
    if (lv.descent_verdict) {
      out << " r_k at next level:" << to_string(lv.descent_verdict->outcome);
    }
    out << "\n";
  }
  out << "topology base: " << (base.passed() ? "certified" : "NOT certified") << "\n";
  Json config = base_config(o, sys);
  config["count"] = o.count;
  config["allow_uncertified"] = o.allow_uncertified;
  write_json(o, envelope("topology-base", config, to_json(step.system, base)), out);
  return base.passed() ? 0 : 1;
}

int cmd_report(const Options& o, std::ostream& out) {
  FactorSystem sys = load_system(o);
  StepPresentation step = load_step(o, sys);
  SymmetrizedSet R = symmetrize(step.system, {step.relator});
  Rational lambda = Rational::parse(o.lambda);
  CPrimeResult cc = check_c_prime(R, lambda);
  ConditionReport conditions = verify_conditions(step, o.radius);
  DehnEngine engine(R);
  DehnVerdict self = engine.membership(step.relator);
  const bool self_ok = self.outcome == Outcome::Trivial && engine.replay(step.relator, self);
  out << "relator length: " << step.relator.length() << "\n"
      << piece_summary(cc.report)
      << "C'(" << lambda.str() << "): " << (cc.certified ? "certified" : "violated") << "\n"
      << "relator is trivial: " << (self_ok ? "yes" : "NO") << "\n"
      << "conditions at radius " << o.radius << ": " << (conditions.passed() ? "pass" : "FAIL")
      << "\n";
  Json config = base_config(o, sys);
  config["lambda"] = lambda.str();
  config["radius"] = o.radius;
  Json result;
  result["relator"] = Json{{"length", step.relator.length()},
                           {"formula", r0_length_formula(o.cap)}};
  result["c_prime"] = to_json(R, cc);
  result["self_membership"] = to_json(step.system, self);
  result["conditions"] = to_json(conditions);
  write_json(o, envelope("report", config, result), out);
  return cc.certified && self_ok && conditions.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dehnkit: small cancellation over amalgamated free products"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", o.preset, "Built-in factor system")
        ->check(CLI::IsMember(FactorSystem::preset_names()));
    sub->add_option("--config", o.config, "Factor system config file")->check(CLI::ExistingFile);
    sub->add_option("--cap", o.cap, "Block cap of the relator family")->check(CLI::Range(2u, 100000u));
    sub->add_option("--json,--out", o.json, "Write the JSON report here ('-' for stdout)");
    sub->add_option("--seed", o.seed, "Seed for randomized choices");
  };
  auto relator_flags = [&](CLI::App* sub) {
    sub->add_option("--relator", o.relators, "Relator word (repeatable)");
    sub->add_option("--index", o.indices, "Family relator index, 0 for r0 (repeatable)");
  };

  auto add = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    return s;
  };
  CLI::App* reduce = add("reduce", "Freely reduce a word inside one factor");
  reduce->add_option("--word", o.words, "Word")->required();
  reduce->add_option("--factor", o.factor, "K or L (default: inferred)");
  CLI::App* nf = add("normal-form", "Normal form and length in the amalgam");
  nf->add_option("--word", o.words, "Word")->required();
  CLI::App* pcs = add("pieces", "Pieces of the symmetrized relator set");
  relator_flags(pcs);
  pcs->add_option("--lambda", o.lambda, "Metric bound");
  CLI::App* cc = add("check-cc", "Check the C'(lambda) condition");
  relator_flags(cc);
  cc->add_option("--lambda", o.lambda, "Metric bound");
  CLI::App* dehn = add("dehn", "Decide membership in the normal closure");
  relator_flags(dehn);
  dehn->add_option("--word", o.words, "Word")->required();
  dehn->add_option("--tie-break", o.tie_break, "leftmost or random");
  dehn->add_flag("--allow-uncertified", o.allow_uncertified,
                 "Run on sets without a C'(1/10) certificate");
  CLI::App* vs = add("verify-step", "Bounded checks of the one-relator step");
  vs->add_option("--radius", o.radius, "Ball radius");
  vs->add_option("--hn", o.h_n, "h_n in K; h becomes h_n^-1 x");
  CLI::App* tb = add("topology-base", "Descending normal subgroup chain");
  tb->add_option("--count", o.count, "Number of enumerated elements");
  tb->add_option("--hn", o.h_n, "h_n in K; h becomes h_n^-1 x");
  tb->add_flag("--allow-uncertified", o.allow_uncertified,
               "Run on sets without a C'(1/10) certificate");
  CLI::App* rep = add("report", "Relator, pieces, certificate and step checks in one report");
  rep->add_option("--radius", o.radius, "Ball radius");
  rep->add_option("--lambda", o.lambda, "Metric bound");
  rep->add_option("--hn", o.h_n, "h_n in K; h becomes h_n^-1 x");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  // With the report on stdout the text summary is dropped.
  std::ostringstream dropped;
  o.json_out = &out;
  std::ostream& text = o.json == "-" ? dropped : out;
  try {
    if (reduce->parsed()) return cmd_reduce(o, text);
    if (nf->parsed()) return cmd_normal_form(o, text);
    if (pcs->parsed()) return cmd_pieces(o, text, false);
    if (cc->parsed()) return cmd_pieces(o, text, true);
    if (dehn->parsed()) return cmd_dehn(o, text);
    if (vs->parsed()) return cmd_verify_step(o, text);
    if (tb->parsed()) return cmd_topology_base(o, text);
    if (rep->parsed()) return cmd_report(o, text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace dehnkit::cli
