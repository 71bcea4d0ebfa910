#pragma once

#include "wflab/bigint.hpp"
#include "wflab/zpoly.hpp"

#include <cstdint>
#include <vector>

namespace wflab {

enum class Primality { Composite, Prime, ProbablePrime };

/// Deterministic Miller-Rabin below 3.317e24 (fixed proven base set);
/// 64 seeded rounds above, reported as ProbablePrime.
Primality classify_prime(const Int& n, std::uint64_t seed = 1);
bool is_prime(const Int& n, std::uint64_t seed = 1);

struct Factorization {
    enum class Status { Complete, PartialCofactorComposite };
    std::vector<std::pair<Int, int>> factors; // (prime, exponent), primes ascending
    Int cofactor = 1;                         // 1 when complete
    Status status = Status::Complete;

    bool complete() const { return status == Status::Complete; }
    Int value() const; // |input| = prod p^e * cofactor
    Int squarefree_kernel() const; // product of distinct listed primes
};

/// Trial division to 10^6, then seeded Pollard rho (Brent) within budget
/// (budget counts rho iterations). Never fails: leftover composite mass is
/// returned in `cofactor` with Partial status.
Factorization factor_integer(const Int& n, std::uint64_t budget = 1u << 22,
                             std::uint64_t seed = 1);

/// Requires a complete factorization within the budget.
Int euler_phi(const Int& n, std::uint64_t budget = 1u << 22, std::uint64_t seed = 1);

struct CyclotomicPoly {
    unsigned long n;
    ZPoly coeffs; // degree phi(n)
};

CyclotomicPoly cyclotomic_poly(unsigned long n);

/// Prop-style lower bound (1/3)((z-1)/3)^(phi(n)-1) for |Phi_n| on |z| >= 2.
double cyclotomic_lower_bound(unsigned long n, double z_abs);

/// Primes <= limit, ascending.
const std::vector<std::uint32_t>& small_primes();
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

} // namespace wflab
