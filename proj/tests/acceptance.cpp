// Acceptance run: one PASS/FAIL line per criterion.  Exit status is the
// number of failing criteria.
//
//   acceptance [--only N] [--seed S] [--curves K] [--verbose 1]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jumploci/bundle.hpp"
#include "jumploci/checks.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/jacobian.hpp"
#include "jumploci/linalg.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/parse.hpp"
#include "jumploci/report.hpp"
#include "jumploci/syzygy.hpp"

using namespace jumploci;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string failed_names(const std::vector<CheckEntry>& checks) {
  std::string s;
  for (auto& c : checks)
    if (!c.pass) s += (s.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  return s;
}

// Runs corpus entries, each under its own time budget.
Verdict corpus_criterion(const std::vector<std::string>& names, double budget) {
  Verdict v;
  std::ostringstream os;
  for (auto& n : names) {
    CorpusResult res = run_corpus_entry(n);
    const bool inTime = res.seconds < budget;
    os << n << " " << res.checks.size() << " checks " << std::fixed << std::setprecision(2) << res.seconds << "s";
    if (!res.pass()) os << " failed: " << failed_names(res.checks);
    if (!inTime) os << " over budget " << budget << "s";
    os << "; ";
    v.pass = v.pass && res.pass() && inTime;
  }
  v.detail = os.str();
  return v;
}

// Random homogeneous forms with small coefficients.  Sparse supports and
// products with a line make singular curves common; dense forms would be
// smooth almost always.
std::string random_curve(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> coef(-3, 3), style(0, 2);
  auto form = [&](int deg, int terms) {
    auto monos = monomial_basis(deg);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Poly p;
    for (int i = 0; i < terms; ++i) {
      int c = coef(rng);
      if (c == 0) c = 1;
      p = p + Poly::term(monos[pick(rng)]) * Scalar(c);
    }
    return p;
  };
  std::uniform_int_distribution<int> nterms(3, 6);
  Poly f;
  switch (style(rng)) {
    case 0: f = form(d, nterms(rng)); break;
    case 1: f = form(1, 2) * form(d - 1, nterms(rng)); break;
    default: f = form(d, nterms(rng)) + form(d, 8); break;
  }
  return f.to_string();
}

Point random_line(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  for (;;) {
    Point L{Scalar(c(rng)), Scalar(c(rng)), Scalar(c(rng))};
    if (!L[0].is_zero() || !L[1].is_zero() || !L[2].is_zero()) return L;
  }
}

Verdict property_suite(std::uint64_t seed, int wanted, bool verbose) {
  std::mt19937_64 rng(seed);
  set_rank_cross_check(true);
  reset_rank_oracle_stats();
  int accepted = 0, discarded = 0, checks = 0, lineChecks = 0;
  std::map<std::string, int> kinds, classes;
  std::vector<int> perDegree(8, 0);
  std::string failures;
  for (int attempt = 0; accepted < wanted && attempt < 40 * wanted; ++attempt) {
    const int d = 4 + accepted % 4;
    const std::string text = random_curve(rng, d);
    Poly f;
    try {
      f = parse_poly(text);
      validate_curve(f);
    } catch (const MathError&) {
      ++discarded;
      continue;
    }
    if (f.degree() != d) {
      ++discarded;
      continue;
    }
    ++accepted;
    ++perDegree[d];
    if (verbose) std::cerr << "  " << text << std::flush;
    const auto t0 = std::chrono::steady_clock::now();
    AnalyzeOptions opts;
    opts.seed = rng();
    opts.predictionLines = 10;
    try {
      AnalysisReport rep = analyze(text, opts);
      checks += static_cast<int>(rep.checks.size());
      ++classes[rep.classification];
      if (rep.bourbaki)
        for (auto& l : rep.bourbaki->lines) ++kinds[l.kind];
      if (!rep.all_pass()) failures += text + ": " + failed_names(rep.checks) + "; ";
      JacobianData jd(f);
      for (int i = 0; i < 30; ++i) {
        CheckOutcome c = check_line_facts(jd, rep.mdr, random_line(rng));
        ++lineChecks;
        if (!c.pass) failures += text + ": " + c.name + " " + c.detail + "; ";
      }
    } catch (const std::exception& e) {
      failures += text + ": exception " + e.what() + "; ";
    }
    if (verbose)
      std::cerr << "  " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s" << std::endl;
  }
  RankOracleStats st = rank_oracle_stats();
  set_rank_cross_check(false);

  Verdict v;
  v.pass = accepted >= wanted && failures.empty() && st.disagreements == 0 && st.compared > 0;
  std::ostringstream os;
  os << accepted << " curves (d=4..7: " << perDegree[4] << "/" << perDegree[5] << "/" << perDegree[6] << "/" << perDegree[7] << "), " << discarded
     << " non-reduced discarded, " << checks << " report checks, " << lineChecks << " line checks, rank calls " << st.calls << " compared "
     << st.compared << " certified " << st.certified << " disagreements " << st.disagreements << "; classes";
  for (auto& [k, n] : classes) os << " " << k << "=" << n;
  os << "; predictions";
  for (auto& [k, n] : kinds) os << " " << k << "=" << n;
  if (!failures.empty()) os << "; failures: " << failures;
  v.detail = os.str();
  return v;
}

Verdict trivial_cases() {
  Verdict v;
  std::ostringstream os;
  {
    AnalysisReport rep = analyze("x*y*z");
    bool ok = rep.classification == "Free" && rep.exponents && *rep.exponents == std::vector<int>{1, 1};
    // no jumping lines: every V_k below the generic d1 is empty
    for (auto& l : rep.loci)
      if (l.k < rep.genericSplitting[0]) ok = ok && l.dimension == -1;
    ok = ok && rep.all_pass();
    os << "xyz " << rep.classification << (ok ? " ok" : " FAILED") << "; ";
    v.pass = v.pass && ok;
  }
  for (const char* f : {"x*y*z", "z*(x*z-y^2)", "x*y*(x-y)*z", "x*y*(x+y)*(x-y)*z", "x*y*z*(x-y)*(y-z)*(x-z)"}) {
    AnalysisReport rep = analyze(f);
    const bool ok = rep.classification == "Free" && rep.bourbaki && rep.bourbaki->unitIdeal && rep.all_pass();
    os << f << (ok ? " unit" : " FAILED") << "; ";
    v.pass = v.pass && ok;
  }
  // converse direction on non-free curves
  for (const char* f : {"y^2*z-x^3", "x*y*z*(x+y+z)", "x^5+y^5+(x^4+y^4)*z"}) {
    AnalysisReport rep = analyze(f);
    const bool ok = rep.classification != "Free" && rep.bourbaki && !rep.bourbaki->unitIdeal;
    os << f << (ok ? " proper" : " FAILED") << "; ";
    v.pass = v.pass && ok;
  }
  v.detail = os.str();
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0, curves = 24;
  bool verbose = false;
  std::uint64_t seed = 20240607;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--only") only = std::atoi(argv[i + 1]);
    else if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    else if (flag == "--curves") curves = std::atoi(argv[i + 1]);
    else if (flag == "--verbose") verbose = std::atoi(argv[i + 1]) != 0;
    else {
      std::cerr << "unknown flag " << flag << "\n";
      return 64;
    }
  }

  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, [] { return corpus_criterion({"exS1_quintic"}, 5); }},
      {2, [] { return corpus_criterion({"ex1_quintic"}, 5); }},
      {3, [] { return corpus_criterion({"zariski_sextic"}, 20); }},
      {4, [] { return corpus_criterion({"ex2_sextic"}, 60); }},
      {5, [] { return corpus_criterion({"fermat_4", "cubic_1", "cubic_2"}, 5); }},
      {6, [] { return corpus_criterion({"rkC_nonic"}, 60); }},
      {7, [&] { return property_suite(seed, curves, verbose); }},
      {8, [] { return trivial_cases(); }},
  };

  int failed = 0;
  for (auto& [id, run] : criteria) {
    if (only && id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (id == 7 && secs >= 600) {
      v.pass = false;
      v.detail += "; over the 10 min budget";
    }
    failed += v.pass ? 0 : 1;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(2) << secs << " s)  " << v.detail
              << std::endl;
  }
  return failed;
}
