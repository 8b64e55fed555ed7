#ifndef JUMPLOCI_POLYALG_HPP
#define JUMPLOCI_POLYALG_HPP

#include <optional>
#include <vector>

#include "jumploci/linalg.hpp"
#include "jumploci/poly.hpp"
#include "jumploci/univariate.hpp"

namespace jumploci {

// gcd of homogeneous forms, normalized (see Poly::normalized).
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& forms);
// Product of the distinct irreducible factors of a homogeneous form.
Poly squarefree_part(const Poly& p);

// Fraction-free elimination over K[x,y,z]; entries need not be homogeneous.
Poly determinant(std::vector<std::vector<Poly>> m);
// Sylvester resultant with respect to the variable `var`.
Poly resultant(const Poly& p, const Poly& q, int var);

Scalar determinant(const Matrix& m);
// det(t*I - m) via reduction to Hessenberg form.
UPoly characteristic_polynomial(const Matrix& m);
// Characteristic polynomial of B^{-1} C, that is det(t*B - C) / det(B); empty
// when B is singular.  Over Q this runs modulo word-size primes until their
// product exceeds twice a Hadamard-type bound on the integer coefficients of
// the row-scaled pencil, so the result is exact.  Other fields fall back to
// exact elimination.
std::optional<UPoly> pencil_charpoly(const Matrix& B, const Matrix& C);

// z -> 1
Poly dehomogenize(const Poly& p);
// inverse of dehomogenize for a polynomial in x,y of total degree <= deg
Poly homogenize(const Poly& p, int deg);

}  // namespace jumploci

#endif
