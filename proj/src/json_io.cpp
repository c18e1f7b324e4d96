#include "braids/json_io.hpp"

namespace braids {

Json word_to_json(const BraidWord& w) {
  Json j;
  j["strands"] = w.strands;
  j["word"] = to_text(w);
  return j;
}

BraidWord word_from_json(const Json& j) {
  return parse_word(j.at("word").get<std::string>(), j.at("strands").get<int>());
}

Json laurent_to_json(const LaurentPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c;
  Json j;
  j["coeffs"] = coeffs;
  j["text"] = p.to_text();
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.at("coeffs").items())
    p = p + LaurentPoly::monomial(value.get<long long>(), std::stoi(key));
  return p;
}

Json ttk_to_json(const TTKParams& p) {
  Json j;
  j["p"] = p.p;
  j["q"] = p.q;
  j["r"] = p.r;
  j["n"] = p.n;
  j["k"] = p.k;
  j["e"] = p.e;
  return j;
}

TTKParams ttk_from_json(const Json& j) {
  return TTKParams(j.at("p").get<long long>(), j.at("q").get<long long>(), j.at("r").get<long long>(),
                   j.at("n").get<long long>());
}

Json step_to_json(const RewriteStep& s) {
  Json j;
  j["rule"] = rule_name(s.rule);
  Json params = Json::object();
  for (const auto& [key, value] : s.params) params[key] = value;
  j["params"] = params;
  j["span"] = Json::array({s.pos, s.len});
  return j;
}

RewriteStep step_from_json(const Json& j) {
  RewriteStep s;
  s.rule = rule_from_name(j.at("rule").get<std::string>());
  for (const auto& [key, value] : j.at("params").items()) s.params[key] = value.get<long long>();
  s.pos = j.at("span").at(0).get<int>();
  s.len = j.at("span").at(1).get<int>();
  return s;
}

Json certificate_to_json(const RewriteCertificate& c) {
  Json j;
  j["source"] = word_to_json(c.source);
  j["target"] = word_to_json(c.target);
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(step_to_json(s));
  j["steps"] = steps;
  return j;
}

RewriteCertificate certificate_from_json(const Json& j) {
  RewriteCertificate c;
  c.source = word_from_json(j.at("source"));
  c.target = word_from_json(j.at("target"));
  for (const auto& s : j.at("steps")) c.steps.push_back(step_from_json(s));
  return c;
}

namespace {

Json side_to_json(const SideVerdict& v) {
  Json j;
  j["primitive"] = v.primitive;
  j["primitive_provenance"] = "computed";
  j["hem_seifert"] = (v.hem == HemStatus::AssertedFalse) ? "asserted-false" : "not-stated";
  j["hem_provenance"] = "paper-asserted";
  return j;
}

Json knot_to_json(const KnotVerdicts& v) {
  Json j;
  j["params"] = ttk_to_json(v.params);
  j["side_H"] = side_to_json(v.side_h);
  j["side_Hprime"] = side_to_json(v.side_hprime);
  j["label"] = v.label;
  return j;
}

}  // namespace

Json classification_to_json(const ClassificationReport& r) {
  Json j;
  j["k"] = r.pair.k;
  j["q"] = r.pair.q;
  j["m"] = r.pair.m;
  j["surface_slope"] = surface_slope(r.pair);
  j["K1"] = knot_to_json(r.k1);
  j["K2"] = knot_to_json(r.k2);
  j["case"] = r.theorem_case;
  return j;
}

Json matrix4_to_json(const IntMatrix4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json obstruction_to_json(const ObstructionOutcome& o) {
  Json j;
  switch (o.kind) {
    case ObstructionOutcome::Kind::Obstructed: j["result"] = "Obstructed"; break;
    case ObstructionOutcome::Kind::Witness: j["result"] = "Witness"; break;
    case ObstructionOutcome::Kind::Unknown: j["result"] = "Unknown"; break;
  }
  Json ev = Json::array();
  for (const auto& e : o.evidence) {
    Json rec;
    rec["prefix"] = Json::array({e.h, e.j, e.k});
    rec["det"] = e.det_sign;
    Json cand = Json::object();
    const char* names[4] = {"s", "t", "u", "v"};
    for (int i = 0; i < 4; ++i)
      cand[names[i]] = std::to_string(e.numerators[static_cast<std::size_t>(i)]) + "/" + std::to_string(e.denom);
    rec["candidate"] = cand;
    rec["integral"] = e.integral;
    rec["unimodular"] = e.unimodular;
    ev.push_back(rec);
  }
  j["evidence"] = ev;
  if (o.witness) {
    j["witness"] = goeritz_word_text(*o.witness);
    j["witness_matrix"] = matrix4_to_json(word_matrix(*o.witness));
    j["convention"] = o.convention;
  }
  return j;
}

}  // namespace braids
