#include "jumploci/cache.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

namespace jumploci {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ReportCache::ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string ReportCache::key(const std::string& canonical, const std::string& field, const AnalyzeOptions& opts) {
  std::ostringstream os;
  os << canonical << '|' << field << '|' << kToolVersion << '|' << kSchemaVersion << '|' << opts.degreeBound << '|' << opts.syzygy.value_or("-") << '|'
     << opts.comboT.value_or("-") << '|' << opts.withLoci << opts.withBourbaki << '|' << opts.seed << '|' << opts.predictionLines;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(os.str())));
  return buf;
}

std::filesystem::path ReportCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<AnalysisReport> ReportCache::load(const std::string& key, std::string* warning) const {
  const auto p = path_for(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key || j.at("toolVersion").get<std::string>() != kToolVersion)
      throw std::runtime_error("stale entry");
    return j.at("report").get<AnalysisReport>();
  } catch (const std::exception& e) {
    if (warning) *warning = "discarding cache entry " + p.string() + ": " + e.what();
    std::error_code ec;
    std::filesystem::remove(p, ec);
    return std::nullopt;
  }
}

void ReportCache::store(const std::string& key, const AnalysisReport& rep) const {
  nlohmann::json j{{"key", key}, {"toolVersion", kToolVersion}, {"report", rep}};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace jumploci
