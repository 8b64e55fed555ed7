#include "jumploci/report.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "jumploci/bourbaki.hpp"
#include "jumploci/checks.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/parse.hpp"

namespace jumploci {

namespace {

std::string dual(const Poly& p) { return p.to_string(kDualNames); }

LineEntry line_entry(const LineComparison& c) {
  LineEntry e;
  e.line = point_to_string(c.line);
  e.mL = c.prediction.mL;
  e.kind = prediction_kind_name(c.prediction.kind);
  if (c.prediction.kind == SplittingPrediction::Kind::Exact) e.predicted = {c.prediction.type.d1, c.prediction.type.d2};
  e.lowerBound = c.prediction.lowerBound;
  e.direct = {c.direct.d1, c.direct.d2};
  e.agrees = c.agrees;
  return e;
}

Syzygy choose_rho1(const JacobianData& jd, int r, const AnalyzeOptions& opts, const NumberField* K, std::string& choice) {
  if (opts.syzygy) {
    choice = "explicit";
    return parse_syzygy(jd, *opts.syzygy, K);
  }
  if (opts.comboT) {
    choice = "combo t=" + *opts.comboT;
    return combo_rho1(jd, r, parse_scalar(*opts.comboT, K));
  }
  choice = "default";
  return default_rho1(jd, r);
}

void bourbaki_section(AnalysisReport& rep, const JacobianData& jd, const SyzygyModuleData& sm, const AnalyzeOptions& opts, const NumberField* K,
                      std::mt19937_64& rng) {
  const int d = jd.degree(), r = sm.r;
  BourbakiEntry be;
  Syzygy rho1 = choose_rho1(jd, r, opts, K, be.choice);
  be.rho1 = rho1.to_string();
  BourbakiData bd;
  try {
    bd = bourbaki_ideal(jd, sm, rho1, K);
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::DegreeFormulaMismatch && e.code() != ErrorCode::DivisibilityFailure) throw;
    rep.checks.push_back({"bourbaki_degree_formula", false, e.what()});
    return;
  }
  for (auto& g : bd.generators) be.generators.push_back(g.to_string());
  be.degree = bd.degree;
  be.formulaDegree = bd.formulaDegree;
  be.unitIdeal = bd.unitIdeal;
  be.distinctPoints = bd.distinctPoints;
  for (auto& p : bd.supportPoints) be.supportPoints.push_back(point_to_string(p));
  be.supportMultiplicities = bd.supportMultiplicities;
  be.deficit = bd.deficit;
  rep.checks.push_back({"bourbaki_degree_formula", true, std::to_string(bd.degree)});

  const ClassKind kind = sm.classification.kind;
  rep.checks.push_back({"free_iff_unit_ideal", (kind == ClassKind::Free) == bd.unitIdeal, {}});
  const bool reducedPoint = bd.degree == 1 && bd.distinctPoints == 1;
  rep.checks.push_back({"nearly_free_iff_reduced_point", (kind == ClassKind::NearlyFree) == reducedPoint, {}});
  if (2 * r < d) rep.checks.push_back({"bourbaki_degree_equals_nu", bd.degree == jd.nu(), std::to_string(bd.degree) + " vs " + std::to_string(jd.nu())});

  auto lines = probe_lines(bd, opts.predictionLines, rng);
  bool agree = true;
  for (auto& c : compare_predictions(jd, r, bd, lines)) {
    be.lines.push_back(line_entry(c));
    agree = agree && c.agrees;
  }
  rep.checks.push_back({"splitting_predictions", agree, std::to_string(lines.size()) + " lines"});
  CheckOutcome arr = check_arrangement(jd, r, bd, lines);
  rep.checks.push_back({arr.name, arr.pass, arr.detail});
  rep.bourbaki = be;
}

}  // namespace

LocusEntry locus_entry(const LocusReport& lr) {
  LocusEntry e;
  e.k = lr.k;
  e.shape = lr.shape;
  e.rows = lr.rows;
  e.cols = lr.cols;
  e.dimension = lr.dimension;
  e.degree = lr.degree;
  e.length = lr.length;
  if (lr.definingPolynomial) e.definingPolynomial = dual(lr.definingPolynomial->normalized());
  if (lr.reducedCurve) e.reducedCurve = dual(lr.reducedCurve->normalized());
  e.minorCount = static_cast<int>(lr.minorGenerators.size());
  for (auto& p : lr.rationalPoints) e.rationalPoints.push_back(point_to_string(p));
  e.pointDeficit = lr.pointDeficit;
  return e;
}

bool AnalysisReport::all_pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const NumberField* field_from_text(const std::string& minpoly) {
  if (minpoly.empty()) return nullptr;
  return NumberField::intern(parse_min_poly(minpoly));
}

AnalysisReport analyze(const std::string& polyText, const AnalyzeOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const NumberField* K = field_from_text(opts.field);
  Poly f = parse_poly(polyText, K);
  validate_curve(f);

  AnalysisReport rep;
  rep.input = polyText;
  rep.canonical = f.normalized().to_string();
  rep.field = K ? K->to_string() : "QQ";
  JacobianData jd(f);
  const int d = jd.degree();
  rep.degree = d;
  rep.tjurina = jd.tjurina();
  SyzygyModuleData sm = analyze_syzygies(jd, opts.degreeBound);
  const int r = sm.r;
  rep.mdr = r;
  rep.generatorDegrees = sm.generator_degrees();
  rep.degreeBound = sm.degreeBound;
  for (auto& [k, n] : jd.n_table())
    if (n > 0) rep.nTable.push_back({k, n});
  rep.nu = jd.nu();
  rep.classification = class_kind_name(sm.classification.kind);
  if (sm.classification.kind != ClassKind::Neither) rep.exponents = std::vector<int>{sm.classification.d1, sm.classification.d2};
  rep.stability = stability_name(stability_class(d, r));
  NormalizedChern nc = normalized_chern(d, rep.tjurina);
  rep.chernTwist = nc.twist;
  rep.c1 = nc.classes.c1;
  rep.c2 = nc.classes.c2;
  SplittingType g = generic_splitting(d, r);
  rep.genericSplitting = {g.d1, g.d2};

  std::mt19937_64 rng(opts.seed);
  auto add = [&](const CheckOutcome& c) { rep.checks.push_back({c.name, c.pass, c.detail}); };
  add(check_n_duality(jd));
  add(check_dimension_identity(jd));
  add(check_generic_chern(jd, r));
  add(check_hilbert_shape(jd, r));
  add(check_generic_splitting(jd, r, rng));
  add(check_weak_lefschetz(jd, rng));
  add(check_strong_lefschetz(jd, r, rng));

  if (opts.withLoci) {
    auto chain = locus_chain(jd, r, K);
    bool nested = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      rep.loci.push_back(locus_entry(chain[i]));
      if (i + 1 < chain.size())
        for (auto& p : chain[i].rationalPoints) nested = nested && in_locus(jd, r, chain[i].k + 1, p);
    }
    add({"loci_nested", nested, {}});
    const int half = (3 * d - 6) / 2;
    if (d % 2 == 0 && 2 * r >= d && jd.n(half - 1) > 0 && jd.n(half - 1) <= kSymbolicDeterminantCap) {
      Poly h = hulek_second_kind(jd);
      rep.hulekDeterminant = dual(h.normalized());
      add({"hulek_degree", h.degree() == 2 * (rep.nu - 1), std::to_string(h.degree()) + " vs 2(nu-1) = " + std::to_string(2 * (rep.nu - 1))});
    }
  }
  if (opts.withBourbaki) bourbaki_section(rep, jd, sm, opts, K, rng);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string render_text(const AnalysisReport& rep) {
  std::ostringstream os;
  auto list = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, std::string>) s += v[i];
      else s += std::to_string(v[i]);
    }
    return s;
  };
  os << "curve      " << rep.canonical << "   over " << rep.field << "\n";
  os << "degree " << rep.degree << "  tau " << rep.tjurina << "  mdr " << rep.mdr << "  nu " << rep.nu << "\n";
  os << "generators of AR(f) in degrees " << list(rep.generatorDegrees) << "\n";
  os << "n(f):";
  for (auto& e : rep.nTable) os << " n" << e.degree << "=" << e.dim;
  os << "\n";
  os << "class " << rep.classification;
  if (rep.exponents) os << " (" << (*rep.exponents)[0] << "," << (*rep.exponents)[1] << ")";
  os << "   bundle " << rep.stability << "   normalized twist " << rep.chernTwist << ": c1=" << rep.c1 << " c2=" << rep.c2 << "\n";
  os << "generic splitting (" << rep.genericSplitting[0] << "," << rep.genericSplitting[1] << ")\n";
  if (!rep.loci.empty()) {
    os << "\njumping loci (dual plane, points are lines ax+by+cz=0)\n";
    for (auto& l : rep.loci) {
      os << "  V_" << l.k << ": " << l.shape << ", " << l.rows << "x" << l.cols;
      if (l.dimension == -2) {
        os << ", too many minors to expand\n";
        continue;
      }
      os << ", dim " << l.dimension << ", degree " << l.degree;
      if (l.length) os << ", length " << l.length;
      os << "\n";
      if (l.reducedCurve) os << "     curve " << *l.reducedCurve << "\n";
      if (!l.rationalPoints.empty()) os << "     points " << list(l.rationalPoints) << "\n";
      if (l.pointDeficit) os << "     " << l.pointDeficit << " point(s) not defined over the field\n";
    }
    if (rep.hulekDeterminant) os << "  second kind: " << *rep.hulekDeterminant << "\n";
  }
  if (rep.bourbaki) {
    const auto& b = *rep.bourbaki;
    os << "\nBourbaki ideal (primal plane), rho1 = (" << b.rho1 << ") [" << b.choice << "]\n";
    os << "  generators " << list(b.generators) << "\n";
    os << "  degree " << b.degree << " (formula " << b.formulaDegree << ")";
    if (b.unitIdeal) os << ", unit ideal";
    os << "\n";
    for (std::size_t i = 0; i < b.supportPoints.size(); ++i) os << "  support " << b.supportPoints[i] << "  length " << b.supportMultiplicities[i] << "\n";
    if (b.deficit) os << "  length " << b.deficit << " at points not defined over the field\n";
    for (auto& l : b.lines) {
      os << "  line " << l.line << ": m_L=" << l.mL << " " << l.kind;
      if (!l.predicted.empty()) os << " (" << l.predicted[0] << "," << l.predicted[1] << ")";
      if (l.kind == "lower_bound") os << " d1>=" << l.lowerBound;
      os << " direct (" << l.direct[0] << "," << l.direct[1] << ")" << (l.agrees ? "" : "  MISMATCH") << "\n";
    }
  }
  os << "\nchecks\n";
  for (auto& c : rep.checks) os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  return os.str();
}

}  // namespace jumploci
