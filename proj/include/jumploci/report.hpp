#ifndef JUMPLOCI_REPORT_HPP
#define JUMPLOCI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumploci/loci.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};
NLOHMANN_JSON_NAMESPACE_END

namespace jumploci {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string detail;
  bool operator==(const CheckEntry&) const = default;
};

struct NEntry {
  int degree = 0;
  int dim = 0;
  bool operator==(const NEntry&) const = default;
};

struct LocusEntry {
  int k = 0;
  std::string shape;
  int rows = 0, cols = 0;
  int dimension = -1;
  int degree = 0;
  int length = 0;
  std::optional<std::string> definingPolynomial;
  std::optional<std::string> reducedCurve;
  int minorCount = 0;
  std::vector<std::string> rationalPoints;
  int pointDeficit = 0;
  bool operator==(const LocusEntry&) const = default;
};

struct LineEntry {
  std::string line;
  int mL = 0;
  std::string kind;
  std::vector<int> predicted;  // exact type, empty otherwise
  int lowerBound = 0;
  std::vector<int> direct;
  bool agrees = true;
  bool operator==(const LineEntry&) const = default;
};

struct BourbakiEntry {
  std::string rho1;
  std::string choice;  // "default", "explicit", "combo t=..."
  std::vector<std::string> generators;
  int degree = 0;
  int formulaDegree = 0;
  bool unitIdeal = false;
  int distinctPoints = 0;
  std::vector<std::string> supportPoints;
  std::vector<int> supportMultiplicities;
  int deficit = 0;
  std::vector<LineEntry> lines;
  bool operator==(const BourbakiEntry&) const = default;
};

struct AnalysisReport {
  int schemaVersion = kSchemaVersion;
  std::string toolVersion = kToolVersion;
  std::string input;
  std::string canonical;
  std::string field;  // "QQ" or the minimal polynomial in t
  int degree = 0;
  int tjurina = 0;
  int mdr = 0;
  std::vector<int> generatorDegrees;
  int degreeBound = 0;
  std::vector<NEntry> nTable;
  int nu = 0;
  std::string classification;
  std::optional<std::vector<int>> exponents;
  std::string stability;
  int chernTwist = 0;
  long c1 = 0, c2 = 0;
  std::vector<int> genericSplitting;
  std::string lociPlane = "dual";
  std::vector<LocusEntry> loci;
  std::optional<std::string> hulekDeterminant;
  std::string bourbakiPlane = "primal";
  std::optional<BourbakiEntry> bourbaki;
  std::vector<CheckEntry> checks;
  double seconds = 0;

  bool all_pass() const;
  bool operator==(const AnalysisReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckEntry, name, pass, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NEntry, degree, dim)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LocusEntry, k, shape, rows, cols, dimension, degree, length, definingPolynomial, reducedCurve, minorCount,
                                   rationalPoints, pointDeficit)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LineEntry, line, mL, kind, predicted, lowerBound, direct, agrees)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BourbakiEntry, rho1, choice, generators, degree, formulaDegree, unitIdeal, distinctPoints, supportPoints,
                                   supportMultiplicities, deficit, lines)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schemaVersion, toolVersion, input, canonical, field, degree, tjurina, mdr, generatorDegrees,
                                   degreeBound, nTable, nu, classification, exponents, stability, chernTwist, c1, c2, genericSplitting,
                                   lociPlane, loci, hulekDeterminant, bourbakiPlane, bourbaki, checks, seconds)

struct AnalyzeOptions {
  std::string field;  // minimal polynomial text; empty for QQ
  int degreeBound = -1;
  std::optional<std::string> syzygy;    // explicit rho1 "a;b;c"
  std::optional<std::string> comboT;    // rho1 = b1 + t*b2
  bool withLoci = true;
  bool withBourbaki = true;
  std::uint64_t seed = 0x51ab1e;
  int predictionLines = 10;
};

const NumberField* field_from_text(const std::string& minpoly);

// Parse, validate and run the whole pipeline.  Throws ParseError for bad
// text and MathError(NonHomogeneous / NonReducedSuspected / InvalidArgument)
// for unusable curves; theorem failures are recorded in checks.
AnalysisReport analyze(const std::string& polyText, const AnalyzeOptions& opts = {});

LocusEntry locus_entry(const LocusReport& lr);
std::string render_text(const AnalysisReport& rep);

}  // namespace jumploci

#endif
