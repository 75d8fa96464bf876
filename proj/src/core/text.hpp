#ifndef QDGA_CORE_TEXT_HPP
#define QDGA_CORE_TEXT_HPP

#include <string>

#include "core/ncpoly.hpp"

namespace qdga {

// Text form: terms `coeff * name1.name2` joined by +/-, composition right to
// left ("a1*.a1" is a_1* after a_1), idempotents "e<label>", coefficients as
// exact fractions, dual numbers "(p/q + r/u s)", Laurent "(... T^k ...)".
// Path names must exist in the quiver; "e<label>" needs the vertex label.
NCPoly parse_ncpoly(const Quiver& q, RingKind ring, const std::string& text);

// Scalar-only parser for CLI vectors like "2,3,1/6" (single entry).
Scalar parse_scalar(RingKind ring, const std::string& text);

std::vector<Scalar> parse_scalar_csv(RingKind ring, const std::string& csv);

}  // namespace qdga

#endif
