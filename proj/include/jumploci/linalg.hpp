#ifndef JUMPLOCI_LINALG_HPP
#define JUMPLOCI_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

using Vec = std::vector<Scalar>;

bool is_zero_vec(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return data_[idx(i, j)]; }
  const Scalar& at(int i, int j) const { return data_[idx(i, j)]; }
  Vec row(int i) const;
  Vec column(int j) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_rational() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Fraction-free elimination (integer Bareiss after row scaling over Q).
int rank_exact(const Matrix& m);
// Rank modulo word-size primes, accepted only after an exact nonsingular
// minor of that size and an exact kernel of complementary dimension are
// exhibited.  nullopt when certification fails or K is a number field.
std::optional<int> rank_modular_certified(const Matrix& m);
// Exact rank; uses the certified modular path for larger rational matrices.
int rank(const Matrix& m);

// When enabled, every rank() call on a rational matrix runs both paths and
// throws InternalInconsistency on disagreement.
struct RankOracleStats {
  std::uint64_t calls = 0;
  std::uint64_t compared = 0;
  std::uint64_t certified = 0;
  std::uint64_t disagreements = 0;
};
void set_rank_cross_check(bool enabled);
RankOracleStats rank_oracle_stats();
void reset_rank_oracle_stats();

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;
};
RrefResult rref(const Matrix& m);
// A^{-1} B for square A; nullopt when A is singular.
std::optional<Matrix> solve_square(const Matrix& A, const Matrix& B);
// Reduced echelon basis of the right kernel.
std::vector<Vec> kernel_basis(const Matrix& m);
// Coefficients c with v = sum c_i basis_i; throws NotInSpan.
Vec coordinates_in_span(const Vec& v, const std::vector<Vec>& basis);
// Ambient vectors whose classes form a basis of span(W)/span(U); standard
// unit vectors are preferred, in coordinate order.  Throws NotSubspace.
std::vector<Vec> complement_basis(const std::vector<Vec>& U, const std::vector<Vec>& W);

// Incrementally maintained reduced row echelon basis of a subspace.
class EchelonSpace {
 public:
  explicit EchelonSpace(int ambient = 0) : ambient_(ambient) {}
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  // True when v enlarged the space.
  bool insert(const Vec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  // Coefficients with respect to rows(); throws NotInSpan.
  Vec coordinates(const Vec& v) const;
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace jumploci

#endif
