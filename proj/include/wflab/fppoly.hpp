#pragma once

#include "wflab/bigint.hpp"
#include "wflab/zpoly.hpp"

#include <cstdint>
#include <vector>

namespace wflab {

// Dense polynomial over F_p, coefficients in [0, p), lowest-degree first.
struct FpPoly {
    Int p;
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

namespace fp {

FpPoly make(const Int& p, std::vector<Int> coeffs);
FpPoly from_zpoly(const Int& p, const ZPoly& f);
FpPoly constant(const Int& p, const Int& value);
FpPoly x(const Int& p);

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly gcd(FpPoly a, FpPoly b); // monic
FpPoly monic(FpPoly a);
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m);
FpPoly derivative(const FpPoly& a);
Int eval(const FpPoly& a, const Int& x);

// Lexicographic-by-(degree, coefficients) ordering used for canonical output.
bool less(const FpPoly& a, const FpPoly& b);

struct Factor {
    FpPoly poly; // monic irreducible
    int multiplicity;
};

// Complete factorization of a nonzero polynomial into monic irreducibles,
// sorted by (degree, coefficients). Randomized equal-degree splitting uses
// the explicit seed; the sorted output does not depend on it.
std::vector<Factor> factor(const FpPoly& f, std::uint64_t seed);

bool is_irreducible(const FpPoly& f);

} // namespace fp
} // namespace wflab
