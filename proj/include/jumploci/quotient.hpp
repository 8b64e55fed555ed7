#ifndef JUMPLOCI_QUOTIENT_HPP
#define JUMPLOCI_QUOTIENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "jumploci/linalg.hpp"
#include "jumploci/poly.hpp"

namespace jumploci {

using SparseVec = std::vector<std::pair<int, Scalar>>;

// Echelonized subspace of S_k, stored over monomial_basis(k).
struct GradedSubspace {
  int degree = 0;
  EchelonSpace space;

  int dim() const { return space.dim(); }
  std::vector<Poly> basis() const;
  bool contains(const Poly& p) const;
};

// Reduced echelon form over sparse rows; rows never share pivot columns.
class SparseEchelon {
 public:
  explicit SparseEchelon(int ncols);
  SparseVec reduce(const SparseVec& v);
  bool insert(const SparseVec& v);
  bool is_pivot(int col) const { return pivotRow_[static_cast<std::size_t>(col)] >= 0; }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int n_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivotRow_;
  std::vector<Scalar> scratch_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

// Degree-by-degree normal forms for a homogeneous ideal of K[x,y,z].  Each
// graded piece of S/I gets a set of standard monomials and, for every
// monomial, its coordinates in that basis.  Degree k+1 is built only from
// degree k, so no Groebner basis is needed.
class GradedQuotient {
 public:
  explicit GradedQuotient(const std::vector<Poly>& generators);

  void compute_to(int degree);
  int top() const { return static_cast<int>(pieces_.size()) - 1; }

  int quotient_dim(int k) const;
  int ideal_dim(int k) const { return static_cast<int>(dim_forms(k)) - quotient_dim(k); }
  const std::vector<int>& standard(int k) const { return piece(k).stdIdx; }
  const SparseVec& normal_form_monomial(int k, int index) const { return piece(k).nf[static_cast<std::size_t>(index)]; }
  // Dense coordinates in the standard basis of degree p.degree().
  Vec normal_form(const Poly& p) const;
  Vec normal_form(int k, const Poly& p) const;
  bool contains(const Poly& p) const { return is_zero_vec(normal_form(p)); }
  Poly lift(int k, const Vec& standardCoords) const;
  GradedSubspace ideal_piece(int k) const;

  // Downward colon recursion from a seed degree whose piece is assumed
  // saturated; fills the kernels of (S/I)_k -> (S/I^sat)_{k+1}^3.
  void saturate_from(int seed);
  int saturation_seed() const { return seed_; }
  const EchelonSpace& saturation_kernel(int k) const;
  int saturated_quotient_dim(int k) const;
  GradedSubspace saturated_piece(int k) const;
  bool in_saturation(const Poly& p) const;

 private:
  struct Piece {
    std::vector<int> stdIdx;
    std::vector<int> stdPos;
    std::vector<SparseVec> nf;
  };
  const Piece& piece(int k) const;
  void build_degree_zero();
  void step();

  std::map<int, std::vector<Vec>> gens_;
  std::vector<Piece> pieces_;
  int seed_ = -1;
  std::vector<EchelonSpace> satKernel_;
};

}  // namespace jumploci

#endif
