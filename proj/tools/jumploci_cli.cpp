// Command-line front end.  Exit codes: 0 ok, 1 corpus mismatch or other
// failure, 2 parse/usage error, 3 non-homogeneous or non-reduced curve,
// 4 a theorem check failed (the report is still printed).

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumploci/bundle.hpp"
#include "jumploci/cache.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/parse.hpp"
#include "jumploci/report.hpp"
#include "jumploci/syzygy.hpp"

using namespace jumploci;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kBadCurve = 3, kCheckFailed = 4 };

struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses and validates, so that the caller can map failures to exit codes
// before any heavy work starts.
Poly load_curve(const std::string& text, const NumberField* K) {
  Poly f = parse_poly(text, K);
  try {
    validate_curve(f);
  } catch (const MathError& e) {
    throw CurveError(e.what());
  }
  return f;
}

json envelope(const std::string& command) { return json{{"schemaVersion", kSchemaVersion}, {"toolVersion", kToolVersion}, {"command", command}}; }

int emit_report(const AnalysisReport& rep, bool asJson) {
  if (asJson) std::cout << json(rep).dump(2) << "\n";
  else std::cout << render_text(rep);
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_analyze(const std::string& poly, const std::string& field, bool asJson, int bound, const std::string& cacheDir) {
  AnalyzeOptions opts;
  opts.field = field;
  opts.degreeBound = bound;
  const NumberField* K = field_from_text(field);
  Poly f = load_curve(poly, K);
  if (cacheDir.empty()) return emit_report(analyze(poly, opts), asJson);

  ReportCache cache(cacheDir);
  const std::string key = ReportCache::key(f.normalized().to_string(), K ? K->to_string() : "QQ", opts);
  std::string warning;
  if (auto hit = cache.load(key, &warning)) return emit_report(*hit, asJson);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  AnalysisReport rep = analyze(poly, opts);
  cache.store(key, rep);
  return emit_report(rep, asJson);
}

int cmd_splitting(const std::string& poly, const std::string& field, const std::string& lineText, bool asJson) {
  const NumberField* K = field_from_text(field);
  JacobianData jd(load_curve(poly, K));
  Point L = canonical_line(parse_point(lineText, K));
  const int r = mdr(jd);
  SplittingType s = splitting_along_line(jd, r, L);
  SplittingType g = generic_splitting(jd.degree(), r);
  const int order = jumping_order(jd, r, L);
  if (asJson) {
    json j = envelope("splitting");
    j["line"] = point_to_string(L);
    j["plane"] = "dual";
    j["splitting"] = {s.d1, s.d2};
    j["generic"] = {g.d1, g.d2};
    j["jumpingOrder"] = order;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "line " << point_to_string(L) << ": splitting (" << s.d1 << "," << s.d2 << "), generic (" << g.d1 << "," << g.d2 << "), jumping order "
              << order << "\n";
  }
  return kOk;
}

int cmd_loci(const std::string& poly, const std::string& field, std::optional<int> k, bool asJson) {
  AnalyzeOptions opts;
  opts.field = field;
  opts.withBourbaki = false;
  load_curve(poly, field_from_text(field));
  AnalysisReport rep = analyze(poly, opts);
  if (k) {
    std::erase_if(rep.loci, [&](const LocusEntry& e) { return e.k != *k; });
    if (rep.loci.empty()) {
      const NumberField* K = field_from_text(field);
      JacobianData jd(parse_poly(poly, K));
      rep.loci.push_back(locus_entry(locus_report(jd, rep.mdr, *k, K)));
    }
  }
  if (asJson) {
    json j = envelope("loci");
    j["plane"] = "dual";
    j["mdr"] = rep.mdr;
    j["loci"] = rep.loci;
    j["hulekDeterminant"] = rep.hulekDeterminant;
    j["checks"] = rep.checks;
    std::cout << j.dump(2) << "\n";
  } else {
    rep.bourbaki.reset();
    std::cout << render_text(rep);
  }
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_bourbaki(const std::string& poly, const std::string& field, const std::optional<std::string>& syz, const std::optional<std::string>& combo,
                 bool asJson) {
  AnalyzeOptions opts;
  opts.field = field;
  opts.withLoci = false;
  opts.syzygy = syz;
  opts.comboT = combo;
  load_curve(poly, field_from_text(field));
  AnalysisReport rep = analyze(poly, opts);
  if (asJson) {
    json j = envelope("bourbaki");
    j["plane"] = "primal";
    j["bourbaki"] = rep.bourbaki;
    j["checks"] = rep.checks;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_text(rep);
  }
  return rep.all_pass() ? kOk : kCheckFailed;
}

int cmd_corpus(const std::optional<std::string>& name, bool all, bool asJson) {
  std::vector<std::string> names;
  if (name) {
    corpus_entry(*name);
    names.push_back(*name);
  } else if (all) {
    for (auto& e : corpus_entries()) names.push_back(e.name);
  } else {
    for (auto& e : corpus_entries()) std::cout << e.name << "  " << e.poly << "  (" << e.summary << ")\n";
    std::cout << "parametric: fermat_<d>, cubic_<t>\n";
    return kOk;
  }
  bool pass = true;
  json out = envelope("corpus");
  out["entries"] = json::array();
  for (auto& n : names) {
    CorpusResult res = run_corpus_entry(n);
    pass = pass && res.pass();
    if (asJson) {
      out["entries"].push_back({{"name", n}, {"poly", res.entry.poly}, {"pass", res.pass()}, {"checks", res.checks}, {"seconds", res.seconds}});
      continue;
    }
    std::cout << n << "  " << (res.pass() ? "PASS" : "FAIL") << "  (" << res.seconds << " s)\n";
    for (auto& c : res.checks) std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  }
  if (asJson) std::cout << out.dump(2) << "\n";
  return pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jumping lines and Bourbaki ideals of plane curves"};
  app.require_subcommand(1);
  std::string poly, field, line, cacheDir;
  bool asJson = false;
  int bound = -1;

  auto* analyzeCmd = app.add_subcommand("analyze", "full report for a curve");
  analyzeCmd->add_option("poly", poly, "homogeneous polynomial in x,y,z")->required();
  analyzeCmd->add_option("--field", field, "minimal polynomial in t of the coefficient field");
  analyzeCmd->add_flag("--json", asJson);
  analyzeCmd->add_option("--degree-bound", bound, "degree bound for syzygy generators");
  analyzeCmd->add_option("--cache-dir", cacheDir);

  auto* splitCmd = app.add_subcommand("splitting", "splitting type along one line");
  splitCmd->add_option("poly", poly)->required();
  splitCmd->add_option("--line", line, "a,b,c for the line ax+by+cz=0")->required();
  splitCmd->add_option("--field", field);
  splitCmd->add_flag("--json", asJson);

  std::optional<int> k;
  auto* lociCmd = app.add_subcommand("loci", "jumping loci V_k in the dual plane");
  lociCmd->add_option("poly", poly)->required();
  lociCmd->add_option("--k", k);
  lociCmd->add_option("--field", field);
  lociCmd->add_flag("--json", asJson);

  std::optional<std::string> syz, combo;
  auto* bourbakiCmd = app.add_subcommand("bourbaki", "Bourbaki ideal and its zero scheme");
  bourbakiCmd->add_option("poly", poly)->required();
  auto* syzOpt = bourbakiCmd->add_option("--syzygy", syz, "explicit rho1 as \"a;b;c\"");
  bourbakiCmd->add_option("--syzygy-combo", combo, "rho1 = b1 + t*b2")->excludes(syzOpt);
  bourbakiCmd->add_option("--field", field);
  bourbakiCmd->add_flag("--json", asJson);

  std::optional<std::string> name;
  bool all = false;
  auto* corpusCmd = app.add_subcommand("corpus", "worked examples with stored expectations");
  auto* nameOpt = corpusCmd->add_option("--name", name);
  corpusCmd->add_flag("--all", all)->excludes(nameOpt);
  corpusCmd->add_flag("--json", asJson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*analyzeCmd) return cmd_analyze(poly, field, asJson, bound, cacheDir);
    if (*splitCmd) return cmd_splitting(poly, field, line, asJson);
    if (*lociCmd) return cmd_loci(poly, field, k, asJson);
    if (*bourbakiCmd) return cmd_bourbaki(poly, field, syz, combo, asJson);
    if (*corpusCmd) return cmd_corpus(name, all, asJson);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CurveError& e) {
    std::cerr << "unusable curve: " << e.what() << "\n";
    return kBadCurve;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kParse : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
