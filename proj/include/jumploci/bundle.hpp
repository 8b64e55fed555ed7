#ifndef JUMPLOCI_BUNDLE_HPP
#define JUMPLOCI_BUNDLE_HPP

#include <random>
#include <string>

#include "jumploci/jacobian.hpp"

namespace jumploci {

struct SplittingType {
  int d1 = 0, d2 = 0;
  friend bool operator==(const SplittingType& a, const SplittingType& b) { return a.d1 == b.d1 && a.d2 == b.d2; }
};

struct ChernClasses {
  long c1 = 0, c2 = 0;
};

// Chern classes of T<C>(k).
ChernClasses chern(int d, int tau, int k);

// The twist T<C>(k) with c1 in {0, -1}, and its Chern classes.
struct NormalizedChern {
  int twist = 0;
  ChernClasses classes;
};
NormalizedChern normalized_chern(int d, int tau);

enum class Stability { Unstable, StrictlySemistable, Stable };
const char* stability_name(Stability s);
Stability stability_class(int d, int r);

SplittingType generic_splitting(int d, int r);

// Dual coordinates (a:b:c) of the line ax+by+cz=0, canonicalized; throws
// InvalidArgument for the zero vector.
Point canonical_line(const Point& L);
Poly line_form(const Point& L);

// a*M_x + b*M_y + c*M_z for the multiplication N(f)_j -> N(f)_{j+1}.
Matrix multiplication_at(const JacobianData& jd, int j, const Point& L);

// d1 along L from the first non-injective multiplication below mdr.
int splitting_d1(const JacobianData& jd, int r, const Point& L);
SplittingType splitting_along_line(const JacobianData& jd, int r, const Point& L);
int jumping_order(const JacobianData& jd, int r, const Point& L);

// Random line with integer coordinates in [-bound, bound], not all zero.
Point random_line(std::mt19937_64& rng, int bound = 20);

// Weak Lefschetz for one line: N_s -> N_{s+1} injective for s < ceil(T/2),
// surjective from there on.
bool weak_lefschetz_holds(const JacobianData& jd, const Point& L);
// Powers of alpha_L are isomorphisms on the plateau [d+r-3, 2d-r-3]; only
// meaningful when 2r < d, returns true otherwise.
bool strong_lefschetz_holds(const JacobianData& jd, int r, const Point& L);

// Sampling protocol for "generic line" properties: one draw plus up to
// three resamples.
struct GenericCheck {
  bool pass = false;
  int attempts = 0;
  Point line;
};
template <class Pred>
GenericCheck check_generic(std::mt19937_64& rng, Pred&& pred, int resamples = 3) {
  GenericCheck g;
  for (int i = 0; i <= resamples; ++i) {
    g.line = random_line(rng);
    ++g.attempts;
    if (pred(g.line)) {
      g.pass = true;
      break;
    }
  }
  return g;
}

}  // namespace jumploci

#endif
