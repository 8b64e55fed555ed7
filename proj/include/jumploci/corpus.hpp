#ifndef JUMPLOCI_CORPUS_HPP
#define JUMPLOCI_CORPUS_HPP

#include <string>
#include <vector>

#include "jumploci/poly.hpp"
#include "jumploci/report.hpp"

namespace jumploci {

struct CorpusEntry {
  std::string name;
  std::string poly;
  std::string field;  // empty for QQ
  std::string summary;
};

struct CorpusResult {
  CorpusEntry entry;
  std::vector<CheckEntry> checks;
  double seconds = 0;
  bool pass() const;
};

// Fixed entries plus fermat_4 and cubic_2 as representatives of the two
// parametric families.
std::vector<CorpusEntry> corpus_entries();
// Accepts the fixed names, fermat_<d> (d >= 3) and cubic_<t> (t rational,
// t^3 != -1); throws InvalidArgument otherwise.
CorpusEntry corpus_entry(const std::string& name);
CorpusResult run_corpus_entry(const std::string& name);

// Ideals generated by homogeneous forms, compared degree by degree up to
// the largest generator degree.
bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b);

}  // namespace jumploci

#endif
