#include "dehnkit/report.hpp"

namespace dehnkit {

const char* version() noexcept { return DEHNKIT_VERSION; }

namespace {

Json ref_json(const SymmetrizedSet& R, RepRef ref) {
  const auto& base = R.bases().at(ref.base);
  return Json{{"base", ref.base},
              {"rotation", ref.rotation},
              {"relator", base.origin},
              {"inverse", base.sign < 0}};
}

std::string word_text(const FactorSystem& sys, const FactorWord& w) {
  return w.empty() ? "1" : format_raw(sys.to_raw(w));
}

}  // namespace

Json to_json(const FactorSystem& sys) {
  Json j;
  j["name"] = sys.name();
  for (Factor f : {Factor::K, Factor::L}) {
    Alphabet a = sys.alphabet(f);
    j[std::string(to_string(f)) + ".generators"] = a.symbols;
  }
  j["shared"] = sys.alphabet(Factor::K).shared;
  j["x"] = word_text(sys, sys.x());
  j["y"] = word_text(sys, sys.y());
  j["a"] = word_text(sys, sys.a());
  j["h"] = word_text(sys, sys.h());
  return j;
}

Json to_json(const FactorSystem& sys, const AmalgamWord& w) {
  return Json{{"word", format(sys, w)}, {"length", w.length()}};
}

Json to_json(const SymmetrizedSet& R, const PieceReport& report) {
  Json j;
  j["representatives"] = report.representatives;
  j["member_lengths"] = R.member_lengths();
  j["max_piece_length"] = report.max_piece_length;
  j["max_conjugate_piece_length"] = report.max_conjugate_piece_length;
  j["min_relator_length"] = report.min_relator_length;
  j["achieved_lambda"] = report.achieved_lambda.str();
  j["base_max_piece"] = report.base_max_piece;
  if (report.witness) {
    const auto& w = *report.witness;
    j["witness"] = Json{{"first", ref_json(R, w.first)},
                        {"second", ref_json(R, w.second)},
                        {"length", w.length},
                        {"matched", w.matched},
                        {"verified", verify_witness(R, w)},
                        {"piece", format(R.system(), w.piece)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const SymmetrizedSet& R, const CPrimeResult& result) {
  Json j;
  j["verdict"] = result.certified ? "certified" : "violated";
  j["lambda"] = result.lambda.str();
  if (!result.certified) {
    j["violation"] = Json{{"kind", result.violation},
                          {"base", result.offending_base ? Json(*result.offending_base) : Json()},
                          {"length", result.offending_length}};
  }
  j["pieces"] = to_json(R, result.report);
  return j;
}

Json to_json(const FactorSystem& sys, const DehnVerdict& verdict) {
  Json j;
  j["outcome"] = to_string(verdict.outcome);
  j["sound"] = verdict.sound;
  if (verdict.outcome == Outcome::Nontrivial) {
    j["witness_ratio"] = verdict.witness ? verdict.witness->str() : "0/1";
    j["residue"] = to_json(sys, verdict.residue.word());
  }
  Json trace = Json::array();
  for (const auto& step : verdict.trace) {
    trace.push_back(Json{{"position", step.position},
                         {"relator", Json{{"base", step.relator.base},
                                          {"rotation", step.relator.rotation}}},
                         {"fragment", step.fragment_length},
                         {"relator_length", step.relator_length},
                         {"length_before", step.length_before},
                         {"length_after", step.length_after},
                         {"conjugator", format(sys, step.conjugator)}});
  }
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const ConditionReport& report) {
  auto ball = [](const BallCheck& b) {
    Json j{{"passed", b.passed}, {"checked", b.checked}};
    j["counterexample"] = b.counterexample ? Json(*b.counterexample) : Json();
    return j;
  };
  Json j;
  j["passed"] = report.passed();
  j["radius"] = report.radius;
  j["relator_length"] = report.relator_length;
  j["power_bound"] = Json{{"exponent", report.power_exponent},
                          {"holds", report.length_below_power},
                          {"statement", std::to_string(report.relator_length) + " < " +
                                            std::to_string(report.power_exponent)}};
  j["certificate"] = Json{{"certified", report.certificate.certified},
                          {"lambda", report.certificate.lambda.str()},
                          {"max_piece_length", report.certificate.report.max_piece_length},
                          {"achieved_lambda", report.certificate.report.achieved_lambda.str()}};
  j["embedding"] = ball(report.embedding);
  j["intersection"] = ball(report.intersection);
  j["malnormality"] = ball(report.malnormality);
  return j;
}

Json to_json(const FactorSystem& sys, const TopologyBase& base) {
  Json j;
  j["passed"] = base.passed();
  j["cap"] = base.cap;
  Json elements = Json::array();
  for (const auto& g : base.elements) {
    elements.push_back(format(sys, g));
  }
  j["elements"] = std::move(elements);
  j["ks"] = base.ks;
  Json levels = Json::array();
  for (const auto& lv : base.levels) {
    Json l;
    l["n"] = lv.n;
    l["g"] = to_json(sys, lv.g);
    l["k"] = lv.k;
    l["relator_length"] = lv.relator_length;
    l["level_indices"] = lv.level_indices;
    l["level_certified"] = lv.level_certified;
    l["g_verdict"] = to_json(sys, lv.g_verdict);
    l["relator_verdict"] = to_json(sys, lv.relator_verdict);
    l["relator_replays"] = lv.relator_replays;
    if (lv.descent_verdict) {
      l["descent_indices"] = lv.descent_indices;
      l["descent_certified"] = lv.descent_certified;
      l["descent_verdict"] = to_json(sys, *lv.descent_verdict);
    }
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j;
}

Json envelope(const std::string& command, Json config, Json result) {
  Json j;
  j["schema"] = 1;
  j["version"] = version();
  j["command"] = command;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return j;
}

}  // namespace dehnkit
