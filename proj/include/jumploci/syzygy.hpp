#ifndef JUMPLOCI_SYZYGY_HPP
#define JUMPLOCI_SYZYGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/jacobian.hpp"

namespace jumploci {

struct Syzygy {
  int degree = 0;
  std::array<Poly, 3> comp;

  // coordinates over three copies of monomial_basis(degree)
  Vec to_vector() const;
  static Syzygy from_vector(int degree, const Vec& v);
  Syzygy operator*(const Poly& m) const;
  bool is_zero() const;
  // "a;b;c"
  std::string to_string() const;
};

bool is_syzygy(const JacobianData& jd, const Syzygy& s);
// Checks the relation; throws InvalidArgument otherwise.
Syzygy make_syzygy(const JacobianData& jd, const Poly& a, const Poly& b, const Poly& c);
Syzygy parse_syzygy(const JacobianData& jd, const std::string& text, const NumberField* field = nullptr);

// det3((x,y,z), rho1, rho) / f; throws DivisibilityFailure if not exact.
Poly delta_quotient(const JacobianData& jd, const Syzygy& rho1, const Syzygy& rho);

// Reduced echelon basis of AR(f)_k.
std::vector<Syzygy> ar_piece(const JacobianData& jd, int k);
// dim AR(f)_k from the Hilbert function of the Jacobian algebra.
int ar_dim(const JacobianData& jd, int k);
int mdr(const JacobianData& jd);
// dim KR(f)_k for the submodule spanned by the Koszul relations.
int koszul_dim(int d, int k);

enum class ClassKind { Free, NearlyFree, Neither };
const char* class_kind_name(ClassKind k);

struct Classification {
  ClassKind kind = ClassKind::Neither;
  int d1 = 0, d2 = 0;
  int nu = 0;
};

struct SyzygyModuleData {
  int r = 0;
  std::map<int, int> arDims;
  std::vector<Syzygy> generators;
  std::map<int, int> koszulDims;
  // unset for smooth curves, where AR(f) = KR(f)
  std::optional<int> mdrPrime;
  std::optional<int> ct;
  int degreeBound = 0;
  Classification classification;

  std::vector<int> generator_degrees() const;
};

std::vector<Syzygy> minimal_generators(const JacobianData& jd, int degreeBound = -1, int* usedBound = nullptr);
std::optional<std::pair<int, int>> mdr_prime_and_ct(const JacobianData& jd);
Classification classify(const JacobianData& jd, const std::vector<Syzygy>& generators);
SyzygyModuleData analyze_syzygies(const JacobianData& jd, int degreeBound = -1);

}  // namespace jumploci

#endif
