#ifndef JUMPLOCI_CACHE_HPP
#define JUMPLOCI_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "jumploci/report.hpp"

namespace jumploci {

std::uint64_t fnv1a64(const std::string& s);

// On-disk store of analysis reports keyed by canonical form, field, tool
// version and every option that changes the output.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  static std::string key(const std::string& canonical, const std::string& field, const AnalyzeOptions& opts);
  std::filesystem::path path_for(const std::string& key) const;

  // Corrupt or stale entries are removed; a warning goes to `warning`.
  std::optional<AnalysisReport> load(const std::string& key, std::string* warning = nullptr) const;
  // Write to a temporary file in the same directory, then rename.
  void store(const std::string& key, const AnalysisReport& rep) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace jumploci

#endif
