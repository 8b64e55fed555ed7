#ifndef JUMPLOCI_PARSE_HPP
#define JUMPLOCI_PARSE_HPP

#include <string>
#include <vector>

#include "jumploci/poly.hpp"

namespace jumploci {

// Grammar: variables x,y,z (and t when a field is given), integer or a/b
// literals, + - * ^ and parentheses.  No implicit multiplication.
Poly parse_poly(const std::string& text, const NumberField* field = nullptr);
Scalar parse_scalar(const std::string& text, const NumberField* field = nullptr);
// Univariate polynomial in t, returned from the constant term upward.
std::vector<mpq_class> parse_min_poly(const std::string& text);
// "a,b,c" with entries parsed as scalars.
Point parse_point(const std::string& text, const NumberField* field = nullptr);

}  // namespace jumploci

#endif
