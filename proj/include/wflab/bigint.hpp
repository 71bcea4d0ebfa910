#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace wflab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(const Int& a) { return ::abs(a); }
inline Int gcd(const Int& a, const Int& b) { return ::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return ::lcm(a, b); }

inline Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Natural log of |a|, usable far beyond double range.
inline double log_abs(const Int& a) {
    if (a == 0) return 0.0;
    signed long e;
    double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * 0.6931471805599453;
}

inline int bit_length(const Int& a) {
    return a == 0 ? 0 : static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

/// v_p(n) for n != 0.
inline int padic_valuation(Int n, const Int& p) {
    int v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

// splitmix64: used to derive independent per-work-item seeds from a run seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

/// Deterministic uniform generator over [0, n) for mpz, seeded explicitly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
        state_.seed(static_cast<unsigned long>(seed ^ (seed >> 32)));
    }
    Int below(const Int& n) { return state_.get_z_range(n); }
    std::uint64_t next_u64() {
        Int r = state_.get_z_bits(64);
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, 8, 0, 0, r.get_mpz_t());
        return out;
    }

  private:
    gmp_randclass state_;
};

} // namespace wflab
