// Command-line front end: canonical words, positivization with
// certificates, word-problem queries, Alexander polynomials, and the
// genus-two homology classification/obstruction reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "braids/burau.hpp"
#include "braids/dean.hpp"
#include "braids/goeritz.hpp"
#include "braids/json_io.hpp"
#include "braids/oracle.hpp"
#include "braids/rewrite.hpp"
#include "braids/svg.hpp"
#include "braids/ttk.hpp"

namespace {

using namespace braids;

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitBudget = 4;

struct GlobalOpts {
  std::string format = "text";
  long long budget = 10'000'000;
  bool deep = false;
};

void emit_word(const BraidWord& w, const std::string& format) {
  if (format == "json")
    std::cout << word_to_json(w).dump(2) << "\n";
  else if (format == "svg")
    std::cout << render_svg(w);
  else
    std::cout << to_text(w) << "\n";
}

int cmd_word(const TTKParams& params, const GlobalOpts& g) {
  emit_word(canonical_word(params), g.format);
  return kExitOk;
}

int cmd_positivize(const TTKParams& params, const GlobalOpts& g, const std::string& cert_path, bool verify) {
  OracleBudget budget{g.budget, std::nullopt};
  PositivizeResult res = positivize(params, budget);
  if (!cert_path.empty()) {
    std::ofstream out(cert_path);
    if (!out) throw Error("cannot write certificate to " + cert_path);
    out << certificate_to_json(res.certificate).dump(2) << "\n";
  }
  std::string verified;
  if (verify) {
    const ReplayResult rep = replay(res.certificate, budget);
    if (!rep.valid) throw Error("certificate replay failed: " + rep.message);
    const Equality eq = words_equal(canonical_word(params), res.word, budget);
    if (eq == Equality::BudgetExceeded) {
      std::cerr << "oracle budget exceeded\n";
      return kExitBudget;
    }
    if (eq != Equality::Equal) throw Error("oracle rejected the positivized word");
    verified = "verified";
  }
  if (g.format == "json") {
    Json j;
    j["params"] = ttk_to_json(params);
    j["word"] = word_to_json(res.word);
    j["length"] = static_cast<long long>(res.word.size());
    j["fibered"] = res.fibered;
    j["steps"] = static_cast<long long>(res.certificate.steps.size());
    if (verify) j["verified"] = true;
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "svg") {
    std::cout << render_svg(res.word);
  } else {
    std::cout << to_text(res.word) << "\n";
    std::cout << "length " << res.word.size() << ", fibered";
    if (!verified.empty()) std::cout << ", " << verified;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify_cert(const std::string& path, const GlobalOpts& g, bool oracle_steps) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read certificate from " + path);
  Json j = Json::parse(in);
  const RewriteCertificate cert = certificate_from_json(j);
  ReplayOptions opts;
  opts.oracle_check_steps = oracle_steps;
  const ReplayResult res = replay(cert, OracleBudget{g.budget, std::nullopt}, opts);
  if (res.valid) {
    std::cout << "Valid (" << cert.steps.size() << " steps)\n";
    return kExitOk;
  }
  std::cout << "InvalidAtStep " << res.failed_step << ": " << res.message << "\n";
  return 1;
}

int cmd_equal(int strands, const std::string& w1, const std::string& w2, const GlobalOpts& g) {
  const Equality eq = words_equal(parse_word(w1, strands), parse_word(w2, strands), OracleBudget{g.budget, std::nullopt});
  switch (eq) {
    case Equality::Equal: std::cout << "Equal\n"; return kExitOk;
    case Equality::NotEqual: std::cout << "NotEqual\n"; return kExitOk;
    default: std::cerr << "oracle budget exceeded\n"; return kExitBudget;
  }
}

int cmd_alexander(int strands, const std::string& w, const GlobalOpts& g) {
  const LaurentPoly alex = alexander_of_closure(parse_word(w, strands));
  if (g.format == "json")
    std::cout << laurent_to_json(alex).dump(2) << "\n";
  else
    std::cout << alex.to_text() << "\n";
  return kExitOk;
}

int cmd_slope(long long k, long long q, long long m, const GlobalOpts& g) {
  const FamilyPair pair = make_family(k, q, m);
  const long long slope = surface_slope(pair);
  if (g.format == "json") {
    Json j;
    j["k"] = k;
    j["q"] = q;
    j["m"] = m;
    j["surface_slope"] = slope;
    j["K1"] = ttk_to_json(pair.k1);
    j["K2"] = ttk_to_json(pair.k2);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << slope << "\n";
  }
  return kExitOk;
}

int cmd_h1(const TTKParams& params, const GlobalOpts& g) {
  const H1Class h = h1_class(params);
  if (g.format == "json") {
    Json j;
    j["params"] = ttk_to_json(params);
    j["h1"] = Json::array({h[0], h[1], h[2], h[3]});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "(" << h[0] << ", " << h[1] << ", " << h[2] << ", " << h[3] << ")\n";
  }
  return kExitOk;
}

int cmd_obstruction(long long k, long long q, long long m, const GlobalOpts& g) {
  const FamilyPair pair = make_family(k, q, m);
  const ObstructionOutcome out = obstruction(pair);
  if (g.format == "json") {
    std::cout << obstruction_to_json(out).dump(2) << "\n";
    return kExitOk;
  }
  if (out.kind == ObstructionOutcome::Kind::Witness) {
    std::cout << "Witness: " << goeritz_word_text(*out.witness) << "\n";
  } else {
    std::cout << "Obstructed: no extended Goeritz element maps [K1] to [K2] on homology\n";
    for (const auto& e : out.evidence) {
      if (e.integral) continue;
      std::cout << "  prefix (" << e.h << "," << e.j << "," << e.k << "), det " << e.det_sign
                << ": non-integral candidate, e.g. s = " << e.numerators[0] << "/" << e.denom << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_classify(long long k, long long q, long long m, const GlobalOpts& g) {
  const FamilyPair pair = make_family(k, q, m);
  const ClassificationReport rep = classify_theorem3(pair);
  const ObstructionOutcome obs = obstruction(pair);

  Json j = classification_to_json(rep);
  j["h1_K1"] = Json::array({h1_class(pair.k1)[0], h1_class(pair.k1)[1], h1_class(pair.k1)[2], h1_class(pair.k1)[3]});
  j["h1_K2"] = Json::array({h1_class(pair.k2)[0], h1_class(pair.k2)[1], h1_class(pair.k2)[2], h1_class(pair.k2)[3]});
  j["obstruction"] = (obs.kind == ObstructionOutcome::Kind::Witness) ? "Witness" : "Obstructed";
  if (obs.witness) j["witness"] = goeritz_word_text(*obs.witness);
  if (g.deep) {
    OracleBudget budget{g.budget, std::nullopt};
    const LaurentPoly a1 = alexander_of_closure(canonical_word(pair.k1));
    const LaurentPoly a2 = alexander_of_closure(canonical_word(pair.k2));
    j["alexander_K1"] = a1.to_text();
    j["alexander_K2"] = a2.to_text();
    j["alexander_equal"] = (a1 == a2);
  }

  if (g.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family (k=" << k << ", q=" << q << ", m=" << m << "), case " << rep.theorem_case << "\n";
    std::cout << "surface slope " << surface_slope(pair) << "\n";
    std::cout << "K1 = K(" << pair.k1.p << "," << pair.k1.q << "," << pair.k1.r << "," << pair.k1.n
              << "): " << rep.k1.label << "\n";
    std::cout << "K2 = K(" << pair.k2.p << "," << pair.k2.q << "," << pair.k2.r << "," << pair.k2.n
              << "): " << rep.k2.label << "\n";
    std::cout << "homology obstruction: " << j["obstruction"].get<std::string>();
    if (obs.witness) std::cout << " (" << goeritz_word_text(*obs.witness) << ")";
    std::cout << "\n";
    if (g.deep)
      std::cout << "Alexander polynomials " << (j["alexander_equal"].get<bool>() ? "agree: " : "differ: ")
                << j["alexander_K1"].get<std::string>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid-group computation engine for twisted torus knots"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--budget", g.budget, "oracle step budget")->check(CLI::PositiveNumber);
  app.add_flag("--deep", g.deep, "include the Alexander-polynomial check in classify");

  long long p = 0, q = 0, r = 0, n = 0, k = 0, m = 0;
  int strands = 2;
  std::string w1, w2, cert_path, cert_file;
  bool verify = false, oracle_steps = false;

  auto* word = app.add_subcommand("word", "canonical braid word of K(p,q,r,n)")->fallthrough();
  word->add_option("p", p)->required();
  word->add_option("q", q)->required();
  word->add_option("r", r)->required();
  word->add_option("n", n)->required();

  auto* pos = app.add_subcommand("positivize", "rewrite K(p,q,r,n), n<0, into a positive braid word")->fallthrough();
  pos->add_option("p", p)->required();
  pos->add_option("q", q)->required();
  pos->add_option("r", r)->required();
  pos->add_option("n", n)->required();
  pos->add_option("--certificate", cert_path, "write the rewrite certificate to this file");
  pos->add_flag("--verify", verify, "replay the certificate and run the equality oracle");

  auto* vc = app.add_subcommand("verify-cert", "replay a rewrite certificate")->fallthrough();
  vc->add_option("file", cert_file)->required();
  vc->add_flag("--oracle-steps", oracle_steps, "also oracle-check each step's sides");

  auto* eq = app.add_subcommand("equal", "decide equality of two braid words")->fallthrough();
  eq->add_option("--strands", strands)->required();
  eq->add_option("w1", w1)->required();
  eq->add_option("w2", w2)->required();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a braid closure")->fallthrough();
  alex->add_option("--strands", strands)->required();
  alex->add_option("word", w1)->required();

  auto* cls = app.add_subcommand("classify", "two-sided classification of the family pair at (k,q,m)")->fallthrough();
  cls->add_option("k", k)->required();
  cls->add_option("q", q)->required();
  cls->add_option("m", m)->required();

  auto* obs = app.add_subcommand("obstruction", "homology obstruction / witness for the pair at (k,q,m)")->fallthrough();
  obs->add_option("k", k)->required();
  obs->add_option("q", q)->required();
  obs->add_option("m", m)->required();

  auto* slope = app.add_subcommand("slope", "shared surface slope of the pair at (k,q,m)")->fallthrough();
  slope->add_option("k", k)->required();
  slope->add_option("q", q)->required();
  slope->add_option("m", m)->required();

  auto* h1 = app.add_subcommand("h1", "homology class of K(p,q,r,n) on the splitting surface")->fallthrough();
  h1->add_option("p", p)->required();
  h1->add_option("q", q)->required();
  h1->add_option("r", r)->required();
  h1->add_option("n", n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (word->parsed()) return cmd_word(braids::TTKParams(p, q, r, n), g);
    if (pos->parsed()) return cmd_positivize(braids::TTKParams(p, q, r, n), g, cert_path, verify);
    if (vc->parsed()) return cmd_verify_cert(cert_file, g, oracle_steps);
    if (eq->parsed()) return cmd_equal(strands, w1, w2, g);
    if (alex->parsed()) return cmd_alexander(strands, w1, g);
    if (cls->parsed()) return cmd_classify(k, q, m, g);
    if (obs->parsed()) return cmd_obstruction(k, q, m, g);
    if (slope->parsed()) return cmd_slope(k, q, m, g);
    if (h1->parsed()) return cmd_h1(braids::TTKParams(p, q, r, n), g);
  } catch (const braids::NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kExitNotApplicable;
  } catch (const braids::InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const braids::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
