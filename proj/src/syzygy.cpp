#include "jumploci/syzygy.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"
#include "jumploci/parse.hpp"

namespace jumploci {

Vec Syzygy::to_vector() const {
  const std::size_t n = static_cast<std::size_t>(dim_forms(degree));
  Vec v(3 * n);
  for (std::size_t w = 0; w < 3; ++w) {
    if (comp[w].is_zero()) continue;
    Vec c = comp[w].coefficients(degree);
    for (std::size_t i = 0; i < n; ++i) v[w * n + i] = c[i];
  }
  return v;
}

Syzygy Syzygy::from_vector(int degree, const Vec& v) {
  const std::size_t n = static_cast<std::size_t>(dim_forms(degree));
  Syzygy s;
  s.degree = degree;
  for (std::size_t w = 0; w < 3; ++w) s.comp[w] = Poly::from_coefficients(degree, Vec(v.begin() + static_cast<long>(w * n), v.begin() + static_cast<long>((w + 1) * n)));
  return s;
}

Syzygy Syzygy::operator*(const Poly& m) const {
  Syzygy s;
  s.degree = degree + m.degree();
  for (std::size_t w = 0; w < 3; ++w) s.comp[w] = comp[w] * m;
  return s;
}

bool Syzygy::is_zero() const { return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero(); }

std::string Syzygy::to_string() const { return comp[0].to_string() + ";" + comp[1].to_string() + ";" + comp[2].to_string(); }

bool is_syzygy(const JacobianData& jd, const Syzygy& s) {
  const Partials& g = jd.gradient();
  return (s.comp[0] * g.fx + s.comp[1] * g.fy + s.comp[2] * g.fz).is_zero();
}

Syzygy make_syzygy(const JacobianData& jd, const Poly& a, const Poly& b, const Poly& c) {
  Syzygy s;
  s.comp = {a, b, c};
  int deg = -1;
  for (auto& p : s.comp) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || (deg >= 0 && p.degree() != deg))
      throw MathError(ErrorCode::InvalidArgument, "syzygy components must be forms of one degree");
    deg = p.degree();
  }
  if (deg < 0) throw MathError(ErrorCode::InvalidArgument, "zero syzygy");
  s.degree = deg;
  if (!is_syzygy(jd, s)) throw MathError(ErrorCode::InvalidArgument, "triple is not a Jacobian syzygy");
  return s;
}

Syzygy parse_syzygy(const JacobianData& jd, const std::string& text, const NumberField* field) {
  std::array<std::string, 3> parts;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t sep = text.find(';', start);
    if ((i < 2) != (sep != std::string::npos)) throw ParseError("expected three ';'-separated components", start);
    parts[static_cast<std::size_t>(i)] = text.substr(start, i < 2 ? sep - start : std::string::npos);
    start = sep + 1;
  }
  return make_syzygy(jd, parse_poly(parts[0], field), parse_poly(parts[1], field), parse_poly(parts[2], field));
}

Poly delta_quotient(const JacobianData& jd, const Syzygy& rho1, const Syzygy& rho) {
  Poly det = det3({{{Poly::var(0), Poly::var(1), Poly::var(2)}, rho1.comp, rho.comp}});
  Poly q;
  if (!try_exact_divide(det, jd.f(), q)) throw MathError(ErrorCode::DivisibilityFailure, "determinant not divisible by f");
  return q;
}

std::vector<Syzygy> ar_piece(const JacobianData& jd, int k) {
  if (k < 0) return {};
  const int d = jd.degree();
  const int n = static_cast<int>(dim_forms(k));
  const int rows = static_cast<int>(dim_forms(k + d - 1));
  Matrix M(rows, 3 * n);
  auto basis = monomial_basis(k);
  for (int w = 0; w < 3; ++w)
    for (int j = 0; j < n; ++j) {
      Poly prod = Poly::term(basis[static_cast<std::size_t>(j)]) * jd.gradient()[w];
      for (auto& [m, c] : prod.terms()) M.at(monomial_index(m), w * n + j) = c;
    }
  std::vector<Syzygy> out;
  for (auto& v : kernel_basis(M)) {
    Syzygy s = Syzygy::from_vector(k, v);
    if (!is_syzygy(jd, s)) throw MathError(ErrorCode::InternalInconsistency, "kernel vector is not a syzygy");
    out.push_back(std::move(s));
  }
  return out;
}

int ar_dim(const JacobianData& jd, int k) {
  if (k < 0) return 0;
  const int d = jd.degree();
  const long image = dim_forms(k + d - 1) - jd.m(k + d - 1);
  return static_cast<int>(3 * dim_forms(k) - image);
}

int mdr(const JacobianData& jd) {
  if (ar_dim(jd, 0) > 0) throw MathError(ErrorCode::MdrZero, "the curve has a syzygy of degree 0");
  for (int k = 1;; ++k)
    if (ar_dim(jd, k) > 0) return k;
}

int koszul_dim(int d, int k) { return static_cast<int>(3 * dim_forms(k - d + 1) - dim_forms(k - 2 * d + 2)); }

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Free: return "Free";
    case ClassKind::NearlyFree: return "NearlyFree";
    case ClassKind::Neither: return "Neither";
  }
  return "Neither";
}

std::vector<int> SyzygyModuleData::generator_degrees() const {
  std::vector<int> out;
  for (auto& g : generators) out.push_back(g.degree);
  return out;
}

namespace {

// Tracks dim of the submodule generated by the syzygies found so far.  The
// map v = delta_quotient(rho1, .) is S-linear with kernel S*rho1, so
// dim M_k = dim S_{k-r} + dim (v(M))_{k+r+1-d} and v(M) is the ideal
// generated by the images of the generators.
class SubmoduleDims {
 public:
  SubmoduleDims(const JacobianData& jd, int r) : jd_(jd), r_(r) {}

  void add(const Syzygy& s) {
    if (gens_.empty()) rho1_ = s;
    gens_.push_back(s);
    Poly v = delta_quotient(jd_, rho1_, s);
    if (!v.is_zero()) images_.push_back(v);
    engine_.reset();
  }

  int dim(int k) {
    if (gens_.empty()) return 0;
    int j = k + r_ + 1 - jd_.degree();
    int image = 0;
    if (j >= 0 && !images_.empty()) {
      if (!engine_) engine_ = std::make_unique<GradedQuotient>(images_);
      engine_->compute_to(j);
      image = engine_->ideal_dim(j);
    }
    return static_cast<int>(dim_forms(k - r_)) + image;
  }

  const std::vector<Syzygy>& gens() const { return gens_; }

 private:
  const JacobianData& jd_;
  int r_;
  Syzygy rho1_;
  std::vector<Syzygy> gens_;
  std::vector<Poly> images_;
  std::unique_ptr<GradedQuotient> engine_;
};

}  // namespace

std::vector<Syzygy> minimal_generators(const JacobianData& jd, int degreeBound, int* usedBound) {
  const int d = jd.degree();
  const int r = mdr(jd);
  int bound = degreeBound < 0 ? 2 * d - 2 : degreeBound;
  bound = std::max(bound, r);
  SubmoduleDims sub(jd, r);
  auto scan = [&](int from, int to) {
    for (int k = from; k <= to; ++k) {
      const int ar = ar_dim(jd, k);
      const int have = sub.dim(k);
      if (have > ar) throw MathError(ErrorCode::InternalInconsistency, "submodule larger than AR(f) in degree " + std::to_string(k));
      if (have == ar) continue;
      EchelonSpace span(3 * static_cast<int>(dim_forms(k)));
      for (auto& g : sub.gens())
        for (auto& m : monomial_basis(k - g.degree)) span.insert((g * Poly::term(m)).to_vector());
      if (span.dim() != have) throw MathError(ErrorCode::InternalInconsistency, "submodule dimension count disagrees with its span");
      int need = ar - have;
      for (auto& s : ar_piece(jd, k)) {
        if (need == 0) break;
        if (span.insert(s.to_vector())) {
          sub.add(s);
          --need;
        }
      }
      if (need != 0) throw MathError(ErrorCode::InternalInconsistency, "could not complete generators in degree " + std::to_string(k));
    }
  };
  auto window_ok = [&](int b) {
    for (int k = b + 1; k <= b + 2; ++k)
      if (sub.dim(k) != ar_dim(jd, k)) return false;
    return true;
  };
  scan(r, bound);
  if (!window_ok(bound)) {
    int raised = 2 * bound;
    scan(bound + 1, raised);
    bound = raised;
    if (!window_ok(bound)) throw MathError(ErrorCode::GeneratorBoundExceeded, "generators not complete below degree " + std::to_string(bound));
  }
  if (usedBound) *usedBound = bound;
  return sub.gens();
}

std::optional<std::pair<int, int>> mdr_prime_and_ct(const JacobianData& jd) {
  const int d = jd.degree();
  // ar - kr equals m(f) minus the complete-intersection Hilbert function in
  // degree k+d-1, which is tau from 2d-4 on; smooth curves never exceed KR.
  for (int k = 0; k <= 2 * d; ++k)
    if (ar_dim(jd, k) > koszul_dim(d, k)) return std::make_pair(k, d - 2 + k);
  return std::nullopt;
}

Classification classify(const JacobianData& jd, const std::vector<Syzygy>& gens) {
  Classification c;
  c.nu = jd.nu();
  const int d = jd.degree();
  std::vector<int> deg;
  for (auto& g : gens) deg.push_back(g.degree);
  std::sort(deg.begin(), deg.end());
  if (c.nu == 0) {
    if (deg.size() != 2 || deg[0] + deg[1] != d - 1)
      throw MathError(ErrorCode::InternalInconsistency, "nu = 0 but the syzygy module is not free of the expected rank");
    c.kind = ClassKind::Free;
    c.d1 = deg[0];
    c.d2 = deg[1];
  } else if (c.nu == 1) {
    if (deg.size() != 3 || deg[1] != deg[2] || deg[0] + deg[1] != d)
      throw MathError(ErrorCode::InternalInconsistency, "nu = 1 but the generator degrees are not those of a nearly free curve");
    c.kind = ClassKind::NearlyFree;
    c.d1 = deg[0];
    c.d2 = deg[1];
  } else {
    if (deg.size() <= 2) throw MathError(ErrorCode::InternalInconsistency, "two generators but nu > 1");
    c.kind = ClassKind::Neither;
  }
  return c;
}

SyzygyModuleData analyze_syzygies(const JacobianData& jd, int degreeBound) {
  SyzygyModuleData s;
  const int d = jd.degree();
  s.r = mdr(jd);
  s.generators = minimal_generators(jd, degreeBound, &s.degreeBound);
  if (auto mc = mdr_prime_and_ct(jd)) {
    s.mdrPrime = mc->first;
    s.ct = mc->second;
  }
  for (int k = 0; k <= std::max(s.degreeBound + 2, 2 * d); ++k) {
    s.arDims[k] = ar_dim(jd, k);
    s.koszulDims[k] = koszul_dim(d, k);
  }
  s.classification = classify(jd, s.generators);
  return s;
}

}  // namespace jumploci
