#ifndef JUMPLOCI_JACOBIAN_HPP
#define JUMPLOCI_JACOBIAN_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jumploci/linalg.hpp"
#include "jumploci/poly.hpp"
#include "jumploci/quotient.hpp"

namespace jumploci {

// gcd(f, f_x, f_y, f_z) is a constant.
bool is_reduced(const Poly& f);
// Throws NonHomogeneous / InvalidArgument / NonReducedSuspected.
void validate_curve(const Poly& f);

class JacobianData {
 public:
  explicit JacobianData(const Poly& f);

  const Poly& f() const { return f_; }
  int degree() const { return d_; }
  int top_degree() const { return 3 * (d_ - 2); }  // T
  int tjurina() const { return tau_; }
  int nu() const { return n(top_degree() / 2); }
  const Partials& gradient() const { return grad_; }
  const GradedQuotient& engine() const { return *engine_; }

  // dim (S/J_f)_k for every k >= 0
  int m(int k) const;
  // dim N(f)_k
  int n(int k) const;
  std::map<int, int> n_table() const;

  // Coset representatives of N(f)_k as monomials, and their classes in
  // the standard coordinates of (S/J_f)_k.
  const std::vector<Poly>& n_basis(int k) const;
  const std::vector<Vec>& n_basis_classes(int k) const;
  // Coordinates in n_basis(k) of a form of degree k lying in the saturation.
  Vec n_coordinates(int k, const Poly& g) const;
  Vec n_coordinates_of_class(int k, const Vec& cls) const;
  // Multiplication by x, y, z as maps N(f)_j -> N(f)_{j+1} in the n_basis
  // coordinates (rows: degree j+1, columns: degree j).
  const std::array<Matrix, 3>& variable_action(int j) const;

 private:
  struct NPiece {
    std::vector<Poly> reps;
    std::vector<Vec> classes;
  };
  const NPiece& npiece(int k) const;

  Poly f_;
  int d_;
  int tau_;
  Partials grad_;
  std::shared_ptr<GradedQuotient> engine_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<NPiece>> nCache_;
  mutable std::map<int, std::unique_ptr<std::array<Matrix, 3>>> actionCache_;
};

// Multiplication by a form g as a map N(f)_j -> N(f)_{j+deg g}.
Matrix n_multiplication(const JacobianData& jd, int j, const Poly& g);

GradedSubspace jacobian_piece(const JacobianData& jd, int k);
GradedSubspace saturate(const JacobianData& jd, int k);
int tjurina(const Poly& f);

struct ShapeEntry {
  int degree;
  int expected;
  int actual;
  bool pass;
};

struct HilbertShapeReport {
  std::string regime;  // "stable" or "unstable"
  std::vector<ShapeEntry> entries;
  bool pass = true;
};

HilbertShapeReport verify_hilbert_shape(const JacobianData& jd, int mdr);

}  // namespace jumploci

#endif
