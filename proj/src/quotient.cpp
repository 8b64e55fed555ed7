#include "jumploci/quotient.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"

namespace jumploci {

std::vector<Poly> GradedSubspace::basis() const {
  std::vector<Poly> out;
  for (auto& r : space.rows()) out.push_back(Poly::from_coefficients(degree, r));
  return out;
}

bool GradedSubspace::contains(const Poly& p) const {
  if (p.is_zero()) return true;
  if (p.degree() != degree || !p.is_homogeneous()) return false;
  return space.contains(p.coefficients(degree));
}

SparseEchelon::SparseEchelon(int ncols)
    : n_(ncols),
      pivotRow_(static_cast<std::size_t>(ncols), -1),
      scratch_(static_cast<std::size_t>(ncols)),
      mark_(static_cast<std::size_t>(ncols), 0) {}

SparseVec SparseEchelon::reduce(const SparseVec& v) {
  touched_.clear();
  for (auto& [c, x] : v) {
    scratch_[static_cast<std::size_t>(c)] = x;
    mark_[static_cast<std::size_t>(c)] = 1;
    touched_.push_back(c);
  }
  for (auto& [c, x] : v) {
    int r = pivotRow_[static_cast<std::size_t>(c)];
    if (r < 0) continue;
    Scalar f = scratch_[static_cast<std::size_t>(c)];
    if (f.is_zero()) continue;
    for (auto& [cc, y] : rows_[static_cast<std::size_t>(r)]) {
      if (!mark_[static_cast<std::size_t>(cc)]) {
        mark_[static_cast<std::size_t>(cc)] = 1;
        scratch_[static_cast<std::size_t>(cc)] = Scalar();
        touched_.push_back(cc);
      }
      scratch_[static_cast<std::size_t>(cc)] -= f * y;
    }
  }
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  for (int c : touched_) {
    if (!scratch_[static_cast<std::size_t>(c)].is_zero()) out.emplace_back(c, scratch_[static_cast<std::size_t>(c)]);
    scratch_[static_cast<std::size_t>(c)] = Scalar();
    mark_[static_cast<std::size_t>(c)] = 0;
  }
  return out;
}

bool SparseEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const int p = r.front().first;
  Scalar inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), p, [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != p) continue;
    Scalar f = it->second;
    SparseVec merged;
    merged.reserve(row.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < r.size()) {
      if (j == r.size() || (i < row.size() && row[i].first < r[j].first)) {
        merged.push_back(row[i++]);
      } else if (i == row.size() || r[j].first < row[i].first) {
        merged.emplace_back(r[j].first, -(f * r[j].second));
        ++j;
      } else {
        Scalar s = row[i].second - f * r[j].second;
        if (!s.is_zero()) merged.emplace_back(row[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
  }
  pivotRow_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

GradedQuotient::GradedQuotient(const std::vector<Poly>& generators) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw MathError(ErrorCode::NonHomogeneous, "ideal generator is not homogeneous");
    gens_[g.degree()].push_back(g.coefficients(g.degree()));
  }
}

const GradedQuotient::Piece& GradedQuotient::piece(int k) const {
  if (k < 0 || k > top()) throw MathError(ErrorCode::InvalidArgument, "degree " + std::to_string(k) + " not computed");
  return pieces_[static_cast<std::size_t>(k)];
}

int GradedQuotient::quotient_dim(int k) const {
  if (k < 0) return 0;
  return static_cast<int>(piece(k).stdIdx.size());
}

void GradedQuotient::build_degree_zero() {
  Piece p;
  bool unit = false;
  auto it = gens_.find(0);
  if (it != gens_.end())
    for (auto& g : it->second)
      if (!g[0].is_zero()) unit = true;
  p.stdPos.assign(1, unit ? -1 : 0);
  p.nf.resize(1);
  if (!unit) {
    p.stdIdx.push_back(0);
    p.nf[0].emplace_back(0, Scalar(1));
  }
  pieces_.push_back(std::move(p));
}

void GradedQuotient::step() {
  const int k = top();
  const int n = k + 1;
  const Piece& prev = pieces_[static_cast<std::size_t>(k)];
  const int D = static_cast<int>(dim_forms(n));
  const std::size_t ns = prev.stdIdx.size();

  std::vector<int> ePos(static_cast<std::size_t>(D), -1);
  std::vector<std::array<int, 3>> mulIdx(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    Monomial m = monomial_at(k, prev.stdIdx[s]);
    for (int i = 0; i < 3; ++i) {
      Monomial mi = m;
      mi.e[static_cast<std::size_t>(i)] += 1;
      int idx = monomial_index(mi);
      mulIdx[s][static_cast<std::size_t>(i)] = idx;
      ePos[static_cast<std::size_t>(idx)] = 1;
    }
  }
  std::vector<int> eIdx;
  for (int j = 0; j < D; ++j)
    if (ePos[static_cast<std::size_t>(j)] > 0) {
      ePos[static_cast<std::size_t>(j)] = static_cast<int>(eIdx.size());
      eIdx.push_back(j);
    }
  for (auto& a : mulIdx)
    for (auto& idx : a) idx = ePos[static_cast<std::size_t>(idx)];

  SparseEchelon rel(static_cast<int>(eIdx.size()));
  std::vector<SparseVec> canon(static_cast<std::size_t>(D));
  auto image = [&](int idxPrev, int var) {
    SparseVec out;
    for (auto& [pos, c] : prev.nf[static_cast<std::size_t>(idxPrev)]) out.emplace_back(mulIdx[static_cast<std::size_t>(pos)][static_cast<std::size_t>(var)], c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  for (int j = 0; j < D; ++j) {
    Monomial mono = monomial_at(n, j);
    bool first = true;
    bool canonStandard = false;
    for (int i = 0; i < 3; ++i) {
      if (mono.e[static_cast<std::size_t>(i)] == 0) continue;
      Monomial lower = mono;
      lower.e[static_cast<std::size_t>(i)] -= 1;
      int li = monomial_index(lower);
      bool lowerStandard = prev.stdPos[static_cast<std::size_t>(li)] >= 0;
      if (first) {
        canon[static_cast<std::size_t>(j)] = image(li, i);
        canonStandard = lowerStandard;
        first = false;
        continue;
      }
      if (lowerStandard && canonStandard) continue;
      SparseVec other = image(li, i);
      // other - canon
      SparseVec diff;
      const SparseVec& a = other;
      const SparseVec& b = canon[static_cast<std::size_t>(j)];
      std::size_t p = 0, q = 0;
      while (p < a.size() || q < b.size()) {
        if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
          diff.push_back(a[p++]);
        } else if (p == a.size() || b[q].first < a[p].first) {
          diff.emplace_back(b[q].first, -b[q].second);
          ++q;
        } else {
          Scalar s = a[p].second - b[q].second;
          if (!s.is_zero()) diff.emplace_back(a[p].first, std::move(s));
          ++p;
          ++q;
        }
      }
      if (!diff.empty()) rel.insert(diff);
    }
  }
  auto git = gens_.find(n);
  if (git != gens_.end()) {
    std::vector<Scalar> acc(eIdx.size());
    for (auto& g : git->second) {
      for (auto& x : acc) x = Scalar();
      for (int j = 0; j < D; ++j) {
        const Scalar& c = g[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        for (auto& [col, v] : canon[static_cast<std::size_t>(j)]) acc[static_cast<std::size_t>(col)] += c * v;
      }
      SparseVec sv;
      for (std::size_t col = 0; col < acc.size(); ++col)
        if (!acc[col].is_zero()) sv.emplace_back(static_cast<int>(col), acc[col]);
      if (!sv.empty()) rel.insert(sv);
    }
  }

  Piece next;
  next.stdPos.assign(static_cast<std::size_t>(D), -1);
  std::vector<int> colToStd(eIdx.size(), -1);
  for (std::size_t col = 0; col < eIdx.size(); ++col) {
    if (rel.is_pivot(static_cast<int>(col))) continue;
    colToStd[col] = static_cast<int>(next.stdIdx.size());
    next.stdPos[static_cast<std::size_t>(eIdx[col])] = static_cast<int>(next.stdIdx.size());
    next.stdIdx.push_back(eIdx[col]);
  }
  next.nf.resize(static_cast<std::size_t>(D));
  for (int j = 0; j < D; ++j) {
    SparseVec red = rel.reduce(canon[static_cast<std::size_t>(j)]);
    for (auto& e : red) e.first = colToStd[static_cast<std::size_t>(e.first)];
    next.nf[static_cast<std::size_t>(j)] = std::move(red);
  }
  pieces_.push_back(std::move(next));
}

void GradedQuotient::compute_to(int degree) {
  if (pieces_.empty()) build_degree_zero();
  while (top() < degree) step();
}

Vec GradedQuotient::normal_form(int k, const Poly& p) const {
  const Piece& pc = piece(k);
  Vec out(pc.stdIdx.size());
  for (auto& [m, c] : p.terms()) {
    if (m.degree() != k) throw MathError(ErrorCode::IncompatibleDegrees, "normal form of a form of another degree");
    for (auto& [pos, v] : pc.nf[static_cast<std::size_t>(monomial_index(m))]) out[static_cast<std::size_t>(pos)] += c * v;
  }
  return out;
}

Vec GradedQuotient::normal_form(const Poly& p) const {
  if (p.is_zero()) return {};
  return normal_form(p.degree(), p);
}

Poly GradedQuotient::lift(int k, const Vec& c) const {
  const Piece& pc = piece(k);
  Poly out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out.add_term(monomial_at(k, pc.stdIdx[i]), c[i]);
  return out;
}

GradedSubspace GradedQuotient::ideal_piece(int k) const {
  GradedSubspace g{k, EchelonSpace(static_cast<int>(dim_forms(k)))};
  if (k < 0) return g;
  const Piece& pc = piece(k);
  const int D = static_cast<int>(dim_forms(k));
  for (int j = 0; j < D; ++j) {
    if (pc.stdPos[static_cast<std::size_t>(j)] >= 0) continue;
    Vec v(static_cast<std::size_t>(D));
    v[static_cast<std::size_t>(j)] = Scalar(1);
    for (auto& [pos, c] : pc.nf[static_cast<std::size_t>(j)]) v[static_cast<std::size_t>(pc.stdIdx[static_cast<std::size_t>(pos)])] -= c;
    g.space.insert(v);
  }
  return g;
}

void GradedQuotient::saturate_from(int seed) {
  compute_to(seed);
  seed_ = seed;
  satKernel_.assign(static_cast<std::size_t>(seed) + 1, EchelonSpace());
  satKernel_[static_cast<std::size_t>(seed)] = EchelonSpace(quotient_dim(seed));
  for (int k = seed - 1; k >= 0; --k) {
    const Piece& pc = pieces_[static_cast<std::size_t>(k)];
    const int ck = static_cast<int>(pc.stdIdx.size());
    const int cn = quotient_dim(k + 1);
    const EchelonSpace& above = satKernel_[static_cast<std::size_t>(k) + 1];
    Matrix A(3 * cn, ck);
    for (int s = 0; s < ck; ++s) {
      Monomial m = monomial_at(k, pc.stdIdx[static_cast<std::size_t>(s)]);
      for (int i = 0; i < 3; ++i) {
        Monomial mi = m;
        mi.e[static_cast<std::size_t>(i)] += 1;
        Vec v(static_cast<std::size_t>(cn));
        for (auto& [pos, c] : pieces_[static_cast<std::size_t>(k) + 1].nf[static_cast<std::size_t>(monomial_index(mi))]) v[static_cast<std::size_t>(pos)] = c;
        v = above.reduce(std::move(v));
        for (int r = 0; r < cn; ++r) A.at(i * cn + r, s) = v[static_cast<std::size_t>(r)];
      }
    }
    EchelonSpace ker(ck);
    if (ck > 0)
      for (auto& v : kernel_basis(A)) ker.insert(v);
    satKernel_[static_cast<std::size_t>(k)] = std::move(ker);
  }
}

const EchelonSpace& GradedQuotient::saturation_kernel(int k) const {
  if (seed_ < 0) throw MathError(ErrorCode::InvalidArgument, "saturation not computed");
  if (k < 0 || k > seed_) throw MathError(ErrorCode::InvalidArgument, "degree outside the saturation window");
  return satKernel_[static_cast<std::size_t>(k)];
}

int GradedQuotient::saturated_quotient_dim(int k) const {
  if (k < 0) return 0;
  if (k >= seed_) return quotient_dim(k);
  return quotient_dim(k) - saturation_kernel(k).dim();
}

GradedSubspace GradedQuotient::saturated_piece(int k) const {
  GradedSubspace g = ideal_piece(k);
  if (k < seed_) {
    for (auto& v : saturation_kernel(k).rows()) g.space.insert(lift(k, v).coefficients(k));
  }
  return g;
}

bool GradedQuotient::in_saturation(const Poly& p) const {
  if (p.is_zero()) return true;
  int k = p.degree();
  Vec v = normal_form(k, p);
  if (k >= seed_) return is_zero_vec(v);
  return saturation_kernel(k).contains(v);
}

}  // namespace jumploci
