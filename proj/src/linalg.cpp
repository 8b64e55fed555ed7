#include "jumploci/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "jumploci/errors.hpp"

namespace jumploci {

bool is_zero_vec(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(data_.begin() + static_cast<long>(idx(i, 0)), data_.begin() + static_cast<long>(idx(i, 0)) + cols_);
}

Vec Matrix::column(int j) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  Vec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero() || v[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return s;
}

bool Matrix::is_rational() const {
  for (auto& x : data_)
    if (!x.is_rational()) return false;
  return true;
}

bool Matrix::is_zero() const { return is_zero_vec(data_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError(ErrorCode::InvalidArgument, "matrix shapes differ");
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw MathError(ErrorCode::InvalidArgument, "matrix shapes differ");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat integer_rows(const Matrix& m) {
  ZMat z(static_cast<std::size_t>(m.rows()), std::vector<mpz_class>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      mpq_class v = m.at(i, j).rational() * l;
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.get_num();
    }
  }
  return z;
}

int bareiss_rank(ZMat a, int rows, int cols) {
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    std::size_t bestBits = 0;
    for (int i = r; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      if (sgn(row[static_cast<std::size_t>(c)]) == 0) continue;
      std::size_t bits = 0;
      for (int j = c; j < cols; ++j) bits = std::max(bits, mpz_sizeinbase(row[static_cast<std::size_t>(j)].get_mpz_t(), 2));
      if (best < 0 || bits < bestBits) {
        best = i;
        bestBits = bits;
      }
    }
    if (best < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(best)]);
    auto& pr = a[static_cast<std::size_t>(r)];
    const mpz_class& piv = pr[static_cast<std::size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      const mpz_class lead = row[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = piv * row[static_cast<std::size_t>(j)] - lead * pr[static_cast<std::size_t>(j)];
        mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::size_t row_bits(const Matrix& m, int i, int from) {
  std::size_t b = 0;
  for (int j = from; j < m.cols(); ++j) b = std::max(b, m.at(i, j).bit_length());
  return b;
}

void swap_rows(Matrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// Gauss-Jordan over K with the deterministic pivot rule.
RrefResult gauss_jordan(Matrix m, int stopCol = -1) {
  const int cols = stopCol < 0 ? m.cols() : stopCol;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < m.rows(); ++c) {
    int best = -1;
    std::size_t bestBits = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      std::size_t bits = row_bits(m, i, c);
      if (best < 0 || bits < bestBits) {
        best = i;
        bestBits = bits;
      }
    }
    if (best < 0) continue;
    swap_rows(m, r, best);
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::atomic<bool> g_crossCheck{false};
std::atomic<std::uint64_t> g_calls{0}, g_compared{0}, g_certified{0}, g_disagree{0};

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

struct ModElim {
  int rank = 0;
  std::vector<int> pivotRows, pivotCols;
};

std::optional<ModElim> modular_elimination(const Matrix& m, u64 p) {
  const int R = m.rows(), C = m.cols();
  std::vector<std::vector<u64>> a(static_cast<std::size_t>(R), std::vector<u64>(static_cast<std::size_t>(C)));
  mpz_class pz(static_cast<unsigned long>(p));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      if (sgn(q) == 0) continue;
      mpz_class num = q.get_num() % pz, den = q.get_den() % pz;
      if (num < 0) num += pz;
      if (den == 0) return std::nullopt;
      u64 d = den.get_ui();
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mulmod(num.get_ui(), powmod(d, p - 2, p), p);
    }
  std::vector<int> rowId(static_cast<std::size_t>(R));
  for (int i = 0; i < R; ++i) rowId[static_cast<std::size_t>(i)] = i;
  ModElim out;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(piv)]);
    std::swap(rowId[static_cast<std::size_t>(r)], rowId[static_cast<std::size_t>(piv)]);
    auto& pr = a[static_cast<std::size_t>(r)];
    u64 inv = powmod(pr[static_cast<std::size_t>(c)], p - 2, p);
    for (int i = r + 1; i < R; ++i) {
      auto& row = a[static_cast<std::size_t>(i)];
      if (row[static_cast<std::size_t>(c)] == 0) continue;
      u64 f = mulmod(row[static_cast<std::size_t>(c)], inv, p);
      for (int j = c; j < C; ++j) {
        if (pr[static_cast<std::size_t>(j)] == 0) continue;
        row[static_cast<std::size_t>(j)] = (row[static_cast<std::size_t>(j)] + p - mulmod(f, pr[static_cast<std::size_t>(j)], p)) % p;
      }
    }
    out.pivotRows.push_back(rowId[static_cast<std::size_t>(r)]);
    out.pivotCols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

int rank_exact(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_rational()) return bareiss_rank(integer_rows(m), m.rows(), m.cols());
  return static_cast<int>(gauss_jordan(m).pivots.size());
}

std::optional<int> rank_modular_certified(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.is_rational()) return std::nullopt;
  std::mt19937_64 rng(0x5eedf00dULL);
  std::optional<ModElim> best;
  for (int t = 0; t < 2; ++t) {
    mpz_class cand(static_cast<unsigned long>((rng() >> 3) | (1ULL << 60)));
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    auto e = modular_elimination(m, cand.get_ui());
    if (e && (!best || e->rank > best->rank)) best = e;
  }
  if (!best) return std::nullopt;
  const int r = best->rank;
  std::vector<int> rowsSel = best->pivotRows, colsSel = best->pivotCols;
  std::sort(rowsSel.begin(), rowsSel.end());
  if (r > 0 && rank_exact(m.submatrix(rowsSel, colsSel)) != r) return std::nullopt;
  // kernel vectors for each non-pivot column, solved on the pivot rows
  std::vector<int> freeCols;
  for (int j = 0, k = 0; j < m.cols(); ++j) {
    if (k < r && colsSel[static_cast<std::size_t>(k)] == j) {
      ++k;
      continue;
    }
    freeCols.push_back(j);
  }
  if (freeCols.empty()) return r;
  Matrix aug(r, r + static_cast<int>(freeCols.size()));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) aug.at(i, j) = m.at(rowsSel[static_cast<std::size_t>(i)], colsSel[static_cast<std::size_t>(j)]);
    for (std::size_t f = 0; f < freeCols.size(); ++f)
      aug.at(i, r + static_cast<int>(f)) = -m.at(rowsSel[static_cast<std::size_t>(i)], freeCols[f]);
  }
  RrefResult red = gauss_jordan(aug, r);
  if (static_cast<int>(red.pivots.size()) != r) return std::nullopt;
  for (std::size_t f = 0; f < freeCols.size(); ++f) {
    Vec v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(freeCols[f])] = Scalar(1);
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(colsSel[static_cast<std::size_t>(i)])] = red.reduced.at(i, r + static_cast<int>(f));
    if (!is_zero_vec(m.apply(v))) return std::nullopt;
  }
  return r;
}

int rank(const Matrix& m) {
  ++g_calls;
  if (!m.is_rational()) return rank_exact(m);
  if (g_crossCheck) {
    int e = rank_exact(m);
    auto mod = rank_modular_certified(m);
    ++g_compared;
    if (mod) {
      ++g_certified;
      if (*mod != e) {
        ++g_disagree;
        throw MathError(ErrorCode::InternalInconsistency, "modular and fraction-free ranks disagree");
      }
    }
    return e;
  }
  if (static_cast<long>(m.rows()) * m.cols() >= 4000) {
    if (auto mod = rank_modular_certified(m)) return *mod;
  }
  return rank_exact(m);
}

void set_rank_cross_check(bool enabled) { g_crossCheck = enabled; }

RankOracleStats rank_oracle_stats() { return {g_calls.load(), g_compared.load(), g_certified.load(), g_disagree.load()}; }

void reset_rank_oracle_stats() {
  g_calls = 0;
  g_compared = 0;
  g_certified = 0;
  g_disagree = 0;
}

RrefResult rref(const Matrix& m) { return gauss_jordan(m); }

std::optional<Matrix> solve_square(const Matrix& A, const Matrix& B) {
  const int n = A.rows();
  if (A.cols() != n || B.rows() != n) throw MathError(ErrorCode::IncompatibleDegrees, "solve_square shape mismatch");
  Matrix aug(n, n + B.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols(); ++j) aug.at(i, n + j) = B.at(i, j);
  }
  RrefResult red = gauss_jordan(aug, n);
  if (static_cast<int>(red.pivots.size()) < n) return std::nullopt;
  Matrix out(n, B.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < B.cols(); ++j) out.at(i, j) = red.reduced.at(i, n + j);
  return out;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult red = gauss_jordan(m);
  std::vector<char> isPivot(static_cast<std::size_t>(m.cols()), 0);
  for (int p : red.pivots) isPivot[static_cast<std::size_t>(p)] = 1;
  EchelonSpace space(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    if (isPivot[static_cast<std::size_t>(j)]) continue;
    Vec v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(j)] = Scalar(1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
      v[static_cast<std::size_t>(red.pivots[i])] = -red.reduced.at(static_cast<int>(i), j);
    space.insert(v);
  }
  return space.rows();
}

Vec coordinates_in_span(const Vec& v, const std::vector<Vec>& basis) {
  const int n = static_cast<int>(v.size());
  const int k = static_cast<int>(basis.size());
  Matrix aug(n, k + 1);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) aug.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) aug.at(i, k) = v[static_cast<std::size_t>(i)];
  RrefResult red = gauss_jordan(aug, k);
  for (int i = static_cast<int>(red.pivots.size()); i < n; ++i)
    if (!red.reduced.at(i, k).is_zero()) throw MathError(ErrorCode::NotInSpan, "vector outside the span");
  Vec c(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) c[static_cast<std::size_t>(red.pivots[i])] = red.reduced.at(static_cast<int>(i), k);
  return c;
}

std::vector<Vec> complement_basis(const std::vector<Vec>& U, const std::vector<Vec>& W) {
  int n = 0;
  if (!W.empty()) n = static_cast<int>(W.front().size());
  else if (!U.empty()) n = static_cast<int>(U.front().size());
  EchelonSpace w(n), acc(n);
  for (auto& v : W) w.insert(v);
  for (auto& u : U) {
    if (!w.contains(u)) throw MathError(ErrorCode::NotSubspace, "U is not contained in W");
    acc.insert(u);
  }
  const int want = w.dim() - acc.dim();
  std::vector<Vec> out;
  for (int i = 0; i < n && static_cast<int>(out.size()) < want; ++i) {
    Vec e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = Scalar(1);
    if (w.contains(e) && acc.insert(e)) out.push_back(e);
  }
  for (auto& v : w.rows()) {
    if (static_cast<int>(out.size()) >= want) break;
    if (acc.insert(v)) out.push_back(v);
  }
  return out;
}

bool EchelonSpace::insert(const Vec& v) {
  Vec r = reduce(v);
  int p = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!r[static_cast<std::size_t>(j)].is_zero()) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Scalar inv = r[static_cast<std::size_t>(p)].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    if (row[static_cast<std::size_t>(p)].is_zero()) continue;
    Scalar f = row[static_cast<std::size_t>(p)];
    for (int j = p; j < ambient_; ++j)
      if (!r[static_cast<std::size_t>(j)].is_zero()) row[static_cast<std::size_t>(j)] -= f * r[static_cast<std::size_t>(j)];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + offset, std::move(r));
  return true;
}

Vec EchelonSpace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (v[static_cast<std::size_t>(p)].is_zero()) continue;
    Scalar f = v[static_cast<std::size_t>(p)];
    const Vec& row = rows_[i];
    for (int j = p; j < ambient_; ++j)
      if (!row[static_cast<std::size_t>(j)].is_zero()) v[static_cast<std::size_t>(j)] -= f * row[static_cast<std::size_t>(j)];
  }
  return v;
}

Vec EchelonSpace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[static_cast<std::size_t>(pivots_[i])];
  if (!is_zero_vec(reduce(v))) throw MathError(ErrorCode::NotInSpan, "vector outside the span");
  return c;
}

}  // namespace jumploci
