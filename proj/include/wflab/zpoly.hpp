#pragma once

#include "wflab/bigint.hpp"

#include <string>
#include <vector>

namespace wflab {

// Dense integer polynomial, coefficients lowest-degree first.
// The zero polynomial is the empty vector.
using ZPoly = std::vector<Int>;

namespace zp {

ZPoly trim(ZPoly a);
int degree(const ZPoly& a); // -1 for zero
bool is_zero(const ZPoly& a);
bool is_monic(const ZPoly& a);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly neg(ZPoly a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly mul_scalar(ZPoly a, const Int& c);
ZPoly derivative(const ZPoly& a);
Int eval(const ZPoly& a, const Int& x);

// Division by a monic divisor; exact remainder handling.
void divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);
// Exact division, throws on nonzero remainder.
ZPoly div_exact_monic(const ZPoly& a, const ZPoly& b);

Int content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);

// Resultant via fraction-free (Bareiss) elimination on the Sylvester matrix.
Int resultant(const ZPoly& a, const ZPoly& b);
// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)
Int discriminant(const ZPoly& f);

// Number of distinct real roots, by Sturm's theorem (exact).
int count_real_roots(const ZPoly& f);

std::string to_string(const ZPoly& a, const std::string& var = "t");

} // namespace zp
} // namespace wflab
