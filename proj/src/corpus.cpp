#include "jumploci/corpus.hpp"

#include <chrono>
#include <functional>

#include "jumploci/bourbaki.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/parse.hpp"

namespace jumploci {

namespace {

std::string str(int v) { return std::to_string(v); }
std::string str(const std::string& s) { return s; }
std::string str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Sheet {
  std::vector<CheckEntry>& out;
  void ok(const std::string& name, bool pass, const std::string& detail = {}) { out.push_back({name, pass, detail}); }
  template <class T>
  void eq(const std::string& name, const T& got, const T& want) {
    ok(name, got == want, "got " + str(got) + ", expected " + str(want));
  }
};

// Dual-plane forms are written in a,b,c.
Poly dual_poly(std::string s, const NumberField* K = nullptr) {
  for (char& ch : s) {
    if (ch == 'a') ch = 'x';
    else if (ch == 'b') ch = 'y';
    else if (ch == 'c') ch = 'z';
  }
  return parse_poly(s, K);
}

std::vector<Poly> polys(const std::vector<std::string>& texts, const NumberField* K = nullptr) {
  std::vector<Poly> out;
  for (auto& t : texts) out.push_back(parse_poly(t, K));
  return out;
}

bool contains(const std::vector<Point>& pts, const Point& p) {
  for (auto& q : pts)
    if (projectively_equal(q, p)) return true;
  return false;
}

void same_points(Sheet& s, const std::string& name, const std::vector<Point>& got, const std::vector<std::string>& want, const NumberField* K = nullptr) {
  bool pass = got.size() == want.size();
  std::string missing;
  for (auto& w : want)
    if (!contains(got, parse_point(w, K))) {
      pass = false;
      missing += " (" + w + ")";
    }
  std::string detail = "got " + std::to_string(got.size()) + " point(s)";
  if (!missing.empty()) detail += ", missing" + missing;
  s.ok(name, pass, detail);
}

bool up_to_scalar(const Poly& a, const Poly& b) { return !a.is_zero() && a.normalized() == b.normalized(); }

void up_to_scalar_check(Sheet& s, const std::string& name, const std::optional<Poly>& got, const Poly& want) {
  s.ok(name, got && up_to_scalar(*got, want), got ? got->to_string(kDualNames) : "no polynomial");
}

void multiplicity_at(Sheet& s, const BourbakiData& bd, const std::string& line, int want) {
  int m = intersection_multiplicity(bd, parse_point(line));
  s.ok("m_L on " + line, m == want, "got " + std::to_string(m));
}

void prediction_matches(Sheet& s, const JacobianData& jd, int r, const BourbakiData& bd, const std::string& line) {
  Point L = parse_point(line);
  SplittingPrediction p = predicted_splitting(jd.degree(), r, intersection_multiplicity(bd, L));
  SplittingType direct = splitting_along_line(jd, r, L);
  s.ok("prediction on " + line, p.kind != SplittingPrediction::Kind::None && p.agrees(direct),
       std::string(prediction_kind_name(p.kind)) + ", direct (" + std::to_string(direct.d1) + "," + std::to_string(direct.d2) + ")");
}

void n_table(Sheet& s, const JacobianData& jd, int from, const std::vector<int>& dims) {
  std::vector<int> got;
  for (int j = from; j < from + static_cast<int>(dims.size()); ++j) got.push_back(jd.n(j));
  int outside = 0;
  for (auto& [k, n] : jd.n_table())
    if (k < from || k >= from + static_cast<int>(dims.size())) outside += n;
  s.eq("n(f) on " + std::to_string(from) + ".." + std::to_string(from + dims.size() - 1), got, dims);
  s.eq("n(f) vanishes elsewhere", outside, 0);
}

void report_checks(Sheet& s, const std::string& poly, const std::string& field) {
  AnalyzeOptions opts;
  opts.field = field;
  AnalysisReport rep = analyze(poly, opts);
  std::string failed;
  for (auto& c : rep.checks)
    if (!c.pass) failed += " " + c.name;
  s.ok("report theorem checks", failed.empty(), failed.empty() ? std::to_string(rep.checks.size()) + " checks" : "failed:" + failed);
}

void ex_s1(Sheet& s) {
  const char* f = "x^5+y^5+(x^4+y^4)*z";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("tau", jd.tjurina(), 9);
  s.eq("mdr", sm.r, 2);
  s.eq("generator degrees", sm.generator_degrees(), {2, 4, 4, 4});
  n_table(s, jd, 3, {2, 3, 3, 2});
  s.eq("nu", jd.nu(), 3);
  s.eq("stability", std::string(stability_name(stability_class(5, sm.r))), std::string("StrictlySemistable"));
  SplittingType g = generic_splitting(5, sm.r);
  s.eq("generic splitting", std::vector<int>{g.d1, g.d2}, {2, 2});
  LocusReport v0 = locus_report(jd, sm.r, 0);
  s.eq("V_0 dimension", v0.dimension, 0);
  same_points(s, "V_0 points", v0.rationalPoints, {"0,0,1", "0,5,4", "5,0,4"});
  s.eq("V_0 deficit", v0.pointDeficit, 0);
  LocusReport v1 = locus_report(jd, sm.r, 1);
  up_to_scalar_check(s, "V_1 determinant", v1.definingPolynomial, dual_poly("a*b*(4*a+4*b-5*c)"));
  BourbakiData bd = bourbaki_ideal(jd, sm, default_rho1(jd, sm.r));
  same_points(s, "Z support", bd.supportPoints, {"1,0,0", "0,1,0", "4,4,-5"});
  for (const char* L : {"0,0,1", "0,5,4", "5,0,4"}) {
    multiplicity_at(s, bd, L, 2);
    prediction_matches(s, jd, sm.r, bd, L);
  }
  report_checks(s, f, "");
}

void ex_1(Sheet& s) {
  const char* f = "2*x^5+2*y^5+5*x^2*y^2*z";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("tau", jd.tjurina(), 10);
  s.eq("mdr", sm.r, 3);
  s.eq("generator degrees", sm.generator_degrees(), {3, 3, 3, 3});
  n_table(s, jd, 4, {2, 2});
  s.eq("stability", std::string(stability_name(stability_class(5, sm.r))), std::string("Stable"));
  LocusReport v0 = locus_report(jd, sm.r, 0);
  s.eq("V_0 empty", v0.dimension, -1);
  LocusReport v1 = locus_report(jd, sm.r, 1);
  up_to_scalar_check(s, "V_1 determinant", v1.definingPolynomial, dual_poly("a*b-c^2"));
  BourbakiData bd = bourbaki_ideal(jd, sm, parse_syzygy(jd, "0;x^2*y;-2*(y^3+x^2*z)"));
  s.ok("B for the printed rho1", same_ideal(bd.generators, polys({"x*z", "y^2", "x*y"})));
  s.eq("deg Z", bd.degree, 3);
  // (s^2 : t^2 : st) parametrizes ab = c^2; x = 0 and y = 0 are excluded
  int checked = 0;
  bool all = true;
  for (const char* L : {"1,1,1", "4,1,2", "1,4,2", "9,1,3", "1,9,3", "9,4,6", "4,9,-6"}) {
    Point p = parse_point(L);
    if (intersection_multiplicity(bd, p) != 0) continue;
    ++checked;
    all = all && splitting_along_line(jd, sm.r, p).d1 == 1 && predicted_splitting(5, sm.r, 0).lowerBound == 1;
  }
  s.ok("conic lines avoiding Z have d1 = 1", all && checked >= 5, std::to_string(checked) + " lines");
  report_checks(s, f, "");
}

void zariski(Sheet& s) {
  const char* f = "(x^2+y^2)^3+(y^3+z^3)^2";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("tau", jd.tjurina(), 12);
  s.eq("mdr", sm.r, 3);
  s.eq("generator degrees", sm.generator_degrees(), {3, 5, 5, 5});
  n_table(s, jd, 3, {1, 4, 6, 7, 6, 4, 1});
  SplittingType g = generic_splitting(6, sm.r);
  s.eq("generic splitting", std::vector<int>{g.d1, g.d2}, {2, 3});
  LocusReport v0 = locus_report(jd, sm.r, 0);
  same_points(s, "V_0 points", v0.rationalPoints, {"1,0,0", "0,1,0", "0,0,1"});
  LocusReport v1 = locus_report(jd, sm.r, 1);
  s.eq("V_1 dimension", v1.dimension, 1);
  up_to_scalar_check(s, "V_1 curve part", v1.reducedCurve, dual_poly("a"));
  same_points(s, "V_1 isolated points", v1.rationalPoints, {"1,0,0"});
  BourbakiData bd = bourbaki_ideal(jd, sm, parse_syzygy(jd, "y*z^2;-x*z^2;x*y^2"));
  s.ok("B", same_ideal(bd.generators, polys({"x*y^2", "x*z^2", "y*z^2"})));
  s.eq("deg Z", bd.degree, 7);
  report_checks(s, f, "");
}

void ex_2(Sheet& s) {
  const char* f = "x^6+y^6+3*x^2*y^2*z^2";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("tau", jd.tjurina(), 12);
  s.eq("mdr", sm.r, 4);
  s.eq("generator degrees", sm.generator_degrees(), {4, 4, 5, 5, 5});
  n_table(s, jd, 4, {3, 6, 7, 6, 3});
  s.eq("nu", jd.nu(), 7);
  LocusReport v0 = locus_report(jd, sm.r, 0);
  same_points(s, "V_0 points", v0.rationalPoints, {"0,0,1"});
  LocusReport v1 = locus_report(jd, sm.r, 1);
  s.eq("V_1 dimension", v1.dimension, 0);
  s.eq("V_1 degree", v1.degree, 11);
  same_points(s, "V_1 rational points", v1.rationalPoints, {"1,1,1", "1,1,-1", "1,-1,1", "-1,1,1", "1,0,0", "0,1,0", "0,0,1"});
  {
    const NumberField* w = field_from_text("t^2+t+1");
    JacobianData jw(parse_poly(f, w));
    // alpha = t, beta = -t
    bool all = true;
    for (const char* p : {"t^2,t,1", "t,t^2,1", "t^2,-t,1", "-t,t^2,1"}) all = all && in_locus(jw, 4, 1, parse_point(p, w));
    s.ok("P8..P11 in V_1 over Q(t), t^2+t+1=0", all);
  }
  Syzygy r1 = parse_syzygy(jd, "0;-x^2*y*z;y^4+x^2*z^2");
  Syzygy r2 = parse_syzygy(jd, "-x*y^2*z;0;x^4+y^2*z^2");
  BourbakiData c1 = bourbaki_ideal(jd, sm, r1);
  s.ok("Choice 1 generators", same_ideal(c1.generators, polys({"-x*y*z", "x*z^3", "-y^3*z", "-y^4-x^2*z^2"})));
  same_points(s, "Choice 1 support", c1.supportPoints, {"1,0,0", "0,0,1"});
  BourbakiData c2 = bourbaki_ideal(jd, sm, r2);
  s.ok("Choice 2 generators", same_ideal(c2.generators, polys({"x*y*z", "x^3*z", "-y*z^3", "-x^4-y^2*z^2"})));
  same_points(s, "Choice 2 support", c2.supportPoints, {"0,1,0", "0,0,1"});
  {
    const NumberField* gi = field_from_text("t^2+1");
    JacobianData ji(parse_poly(f, gi));
    SyzygyModuleData si = analyze_syzygies(ji);
    // rho1' + t rho2' at t = -1
    Syzygy mix = parse_syzygy(ji, "x*y^2*z;-x^2*y*z;y^4+x^2*z^2-x^4-y^2*z^2", gi);
    BourbakiData c3 = bourbaki_ideal(ji, si, mix, gi);
    // k1..k5 at t = -1; the variable t is the field generator here, so the
    // parameter is substituted by hand
    s.ok("Choice 3 generators (t=-1)",
         same_ideal(c3.generators, polys({"-x*y*z", "-x*y*z", "x*z*(z^2-x^2)", "-y*z*(y^2-z^2)", "-y^2*(y^2-z^2)-x^2*(-x^2+z^2)"}, gi)));
    same_points(s, "Choice 3 support (s=1)", c3.supportPoints, {"1,1,0", "-1,1,0", "t,1,0", "-t,1,0", "0,1,-1", "0,1,1", "-1,0,1", "1,0,1", "0,0,1"}, gi);
    s.eq("Choice 3 degree formula", c3.formulaDegree, 9);
    s.eq("Choice 3 degree", c3.degree, 9);
  }
  s.eq("Choice 1 degree", c1.degree, 9);
  s.eq("Choice 2 degree", c2.degree, 9);
  report_checks(s, f, "");
}

void nonic(Sheet& s) {
  const char* f = "x^5*y^2*z^2+x^9+y^9";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("mdr", sm.r, 4);
  s.eq("ar(f)_4", ar_dim(jd, 4), 1);
  Syzygy rho1 = parse_syzygy(jd, "-2*x*y^2*z;0;9*x^4+5*y^2*z^2");
  BourbakiData bd = bourbaki_ideal(jd, sm, rho1);
  same_points(s, "Z support", bd.supportPoints, {"0,1,0"});
  s.eq("Z distinct points", bd.distinctPoints, 1);
  s.ok("components of rho1 also vanish at (0:0:1)", vanishes_at({rho1.comp[0], rho1.comp[1], rho1.comp[2]}, parse_point("0,0,1")));
}

void fermat(Sheet& s, int d) {
  std::string f = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" + std::to_string(d);
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  s.eq("tau (smooth)", jd.tjurina(), 0);
  s.eq("mdr", sm.r, d - 1);
  Partials p = jd.gradient();
  BourbakiData bd = bourbaki_ideal(jd, sm, make_syzygy(jd, p.fy, -p.fx, Poly()));
  same_points(s, "Z support for (f_y,-f_x,0)", bd.supportPoints, {"0,0,1"});
  s.eq("deg Z", bd.degree, (d - 1) * (d - 1));
  s.eq("d1 on z=0", splitting_along_line(jd, sm.r, parse_point("0,0,1")).d1, 0);
  if (d == 4) {
    LocusReport v0 = locus_report(jd, sm.r, 0);
    s.eq("V_0 dimension", v0.dimension, 1);
    up_to_scalar_check(s, "V_0 reduced curve", v0.reducedCurve, dual_poly("a*b*c"));
    Poly h = hulek_second_kind(jd);
    up_to_scalar_check(s, "second-kind determinant", h, dual_poly("a^4*b^4*c^4"));
    s.eq("second-kind degree = 2(nu-1)", h.degree(), 2 * (jd.nu() - 1));
  }
  report_checks(s, f, "");
}

void cubic(Sheet& s, const std::string& tText) {
  Scalar t = parse_scalar(tText);
  std::string f = "x^3+y^3+z^3+3*(" + tText + ")*x*y*z";
  JacobianData jd(parse_poly(f));
  SyzygyModuleData sm = analyze_syzygies(jd);
  LocusReport v0 = locus_report(jd, sm.r, 0);
  Poly want = dual_poly("a^3+b^3+c^3") * t + dual_poly("a*b*c") * (Scalar(2) - t * t * t);
  up_to_scalar_check(s, "V_0 determinant", v0.definingPolynomial, want);
  report_checks(s, f, "");
}

struct Fixed {
  CorpusEntry entry;
  std::function<void(Sheet&)> run;
};

const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> all{
      {{"exS1_quintic", "x^5+y^5+(x^4+y^4)*z", "", "semistable quintic, three jumping points"}, ex_s1},
      {{"ex1_quintic", "2*x^5+2*y^5+5*x^2*y^2*z", "", "stable quintic, conic of jumping lines"}, ex_1},
      {{"zariski_sextic", "(x^2+y^2)^3+(y^3+z^3)^2", "", "six cusps on a conic"}, zariski},
      {{"ex2_sextic", "x^6+y^6+3*x^2*y^2*z^2", "", "three choices of rho1"}, ex_2},
      {{"rkC_nonic", "x^5*y^2*z^2+x^9+y^9", "", "Bourbaki support versus syzygy support"}, nonic},
  };
  return all;
}

bool parse_family(const std::string& name, const std::string& prefix, std::string& arg) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return false;
  arg = name.substr(prefix.size());
  return true;
}

}  // namespace

bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  int top = 0;
  for (auto& g : a) top = std::max(top, g.degree());
  for (auto& g : b) top = std::max(top, g.degree());
  auto span = [](const std::vector<Poly>& gens, int k) {
    EchelonSpace sp(static_cast<int>(dim_forms(k)));
    for (auto& g : gens) {
      if (g.is_zero() || g.degree() > k) continue;
      for (auto& m : monomial_basis(k - g.degree())) sp.insert((Poly::term(m) * g).coefficients(k));
    }
    return sp;
  };
  for (int k = 0; k <= top; ++k) {
    EchelonSpace sa = span(a, k), sb = span(b, k);
    if (sa.dim() != sb.dim()) return false;
    for (auto& row : sb.rows())
      if (!sa.contains(row)) return false;
  }
  return true;
}

bool CorpusResult::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<CorpusEntry> corpus_entries() {
  std::vector<CorpusEntry> out;
  for (auto& f : fixed_entries()) out.push_back(f.entry);
  out.push_back(corpus_entry("fermat_4"));
  out.push_back(corpus_entry("cubic_2"));
  return out;
}

CorpusEntry corpus_entry(const std::string& name) {
  for (auto& f : fixed_entries())
    if (f.entry.name == name) return f.entry;
  std::string arg;
  if (parse_family(name, "fermat_", arg)) {
    int d = 0;
    try {
      d = std::stoi(arg);
    } catch (const std::exception&) {
      d = 0;
    }
    if (d < 3 || std::to_string(d) != arg) throw MathError(ErrorCode::InvalidArgument, "fermat_<d> needs an integer d >= 3");
    return {name, "x^" + arg + "+y^" + arg + "+z^" + arg, "", "Fermat curve of degree " + arg};
  }
  if (parse_family(name, "cubic_", arg)) {
    Scalar t = parse_scalar(arg);
    if ((t * t * t + Scalar(1)).is_zero()) throw MathError(ErrorCode::InvalidArgument, "cubic_<t> needs t^3 != -1");
    return {name, "x^3+y^3+z^3+3*(" + arg + ")*x*y*z", "", "Hesse cubic, t = " + arg};
  }
  throw MathError(ErrorCode::InvalidArgument, "unknown corpus entry '" + name + "'");
}

CorpusResult run_corpus_entry(const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  CorpusResult res;
  res.entry = corpus_entry(name);
  Sheet s{res.checks};
  std::string arg;
  try {
    bool done = false;
    for (auto& f : fixed_entries())
      if (f.entry.name == name) {
        f.run(s);
        done = true;
      }
    if (!done && parse_family(name, "fermat_", arg)) fermat(s, std::stoi(arg));
    else if (!done && parse_family(name, "cubic_", arg)) cubic(s, arg);
  } catch (const std::exception& e) {
    s.ok("completed without error", false, e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace jumploci
