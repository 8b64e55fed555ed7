#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "jumploci/cache.hpp"
#include "jumploci/corpus.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/report.hpp"

using namespace jumploci;
using nlohmann::json;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("jumploci_test_" + tag + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  AnalysisReport rep = analyze("x^5+y^5+(x^4+y^4)*z");
  json j = rep;
  EXPECT_EQ(j.at("schemaVersion"), kSchemaVersion);
  AnalysisReport back = json::parse(j.dump()).get<AnalysisReport>();
  EXPECT_EQ(back, rep);
  ASSERT_TRUE(back.bourbaki.has_value());
  EXPECT_EQ(back.bourbaki->degree, 3);
}

TEST(Report, OptionalFieldsSerializeAsNull) {
  AnalyzeOptions opts;
  opts.withBourbaki = false;
  AnalysisReport rep = analyze("x^3+y^3+z^3", opts);
  json j = rep;
  EXPECT_TRUE(j.at("bourbaki").is_null());
  EXPECT_TRUE(j.at("exponents").is_null());  // smooth cubic is neither free nor nearly free
  EXPECT_EQ(json(rep).get<AnalysisReport>(), rep);
}

TEST(Report, FreeCurveSummary) {
  AnalysisReport rep = analyze("x*y*z");
  EXPECT_EQ(rep.classification, "Free");
  ASSERT_TRUE(rep.exponents);
  EXPECT_EQ(*rep.exponents, (std::vector<int>{1, 1}));
  ASSERT_TRUE(rep.bourbaki);
  EXPECT_TRUE(rep.bourbaki->unitIdeal);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Report, RejectsUnusableInput) {
  EXPECT_THROW(analyze("x^2+y^3"), MathError);
  EXPECT_THROW(analyze("x^2*y"), MathError);
  EXPECT_THROW(analyze("x^2+*y"), ParseError);
}

TEST(Cache, HitReturnsIdenticalReport) {
  auto dir = fresh_dir("hit");
  ReportCache cache(dir);
  AnalyzeOptions opts;
  AnalysisReport rep = analyze("x^4+y^4+z^4", opts);
  const std::string key = ReportCache::key(rep.canonical, rep.field, opts);
  EXPECT_EQ(key.size(), 16u);
  EXPECT_FALSE(cache.load(key));
  cache.store(key, rep);
  auto hit = cache.load(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, rep);
  EXPECT_EQ(json(*hit).dump(), json(rep).dump());
  std::filesystem::remove_all(dir);
}

TEST(Cache, KeyDependsOnOptions) {
  AnalyzeOptions a, b;
  b.comboT = "2";
  EXPECT_NE(ReportCache::key("x^3+y^3+z^3", "QQ", a), ReportCache::key("x^3+y^3+z^3", "QQ", b));
  EXPECT_NE(ReportCache::key("x^3+y^3+z^3", "QQ", a), ReportCache::key("x^3+y^3+z^3", "t^2+1", a));
  EXPECT_EQ(ReportCache::key("x^3+y^3+z^3", "QQ", a), ReportCache::key("x^3+y^3+z^3", "QQ", AnalyzeOptions{}));
}

TEST(Cache, CorruptEntryIsDiscarded) {
  auto dir = fresh_dir("corrupt");
  ReportCache cache(dir);
  AnalysisReport rep = analyze("x*y*z");
  const std::string key = ReportCache::key(rep.canonical, rep.field, {});
  cache.store(key, rep);
  {
    std::ofstream out(cache.path_for(key), std::ios::trunc);
    out << "{\"key\": \"" << key << "\", \"report\": {\"degree\": ";
  }
  std::string warning;
  EXPECT_FALSE(cache.load(key, &warning));
  EXPECT_FALSE(warning.empty());
  EXPECT_FALSE(std::filesystem::exists(cache.path_for(key)));
  cache.store(key, rep);
  EXPECT_TRUE(cache.load(key));
  std::filesystem::remove_all(dir);
}

TEST(Cache, StaleVersionIsDiscarded) {
  auto dir = fresh_dir("stale");
  ReportCache cache(dir);
  AnalysisReport rep = analyze("x*y*z");
  const std::string key = ReportCache::key(rep.canonical, rep.field, {});
  cache.store(key, rep);
  json j;
  {
    std::ifstream in(cache.path_for(key));
    j = json::parse(in);
  }
  j["toolVersion"] = "0.0.0-old";
  {
    std::ofstream out(cache.path_for(key), std::ios::trunc);
    out << j.dump();
  }
  std::string warning;
  EXPECT_FALSE(cache.load(key, &warning));
  EXPECT_FALSE(warning.empty());
  std::filesystem::remove_all(dir);
}

TEST(Corpus, NameParsing) {
  EXPECT_NE(corpus_entry("fermat_5").poly.find("x^5"), std::string::npos);
  EXPECT_NO_THROW(corpus_entry("cubic_1/2"));
  EXPECT_NO_THROW(corpus_entry("zariski_sextic"));
  EXPECT_THROW(corpus_entry("fermat_2"), MathError);
  EXPECT_THROW(corpus_entry("cubic_-1"), MathError);
  EXPECT_THROW(corpus_entry("nonsense"), MathError);
  EXPECT_GE(corpus_entries().size(), 7u);
}

TEST(Corpus, FermatFamilyPasses) {
  for (int d = 3; d <= 5; ++d) {
    CorpusResult res = run_corpus_entry("fermat_" + std::to_string(d));
    EXPECT_TRUE(res.pass()) << "fermat_" << d;
  }
}
