#include "wflab/arith.hpp"

#include "wflab/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace wflab {

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a witnesses that n is composite
    Int nm1 = n - 1;
    unsigned long r = mpz_scan1(nm1.get_mpz_t(), 0);
    Int d = nm1 >> r;
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == nm1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == nm1) return false;
    }
    return true;
}

} // namespace

Primality classify_prime(const Int& n, std::uint64_t seed) {
    if (n < 2) return Primality::Composite;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (long p : small) {
        if (n == p) return Primality::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
            return Primality::Composite;
    }
    // base set proven deterministic for n < 3.317e24 (first 13 primes)
    static const Int kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit) {
        for (long p : small)
            if (miller_rabin_witness(n, Int(p))) return Primality::Composite;
        return Primality::Prime;
    }
    Rng rng(seed);
    for (int round = 0; round < 64; ++round) {
        Int a = rng.below(n - 3) + 2;
        if (miller_rabin_witness(n, a)) return Primality::Composite;
    }
    return Primality::ProbablePrime;
}

bool is_prime(const Int& n, std::uint64_t seed) {
    return classify_prime(n, seed) != Primality::Composite;
}

Int Factorization::value() const {
    Int v = cofactor;
    for (const auto& [p, e] : factors) v *= pow_ui(p, static_cast<unsigned long>(e));
    return v;
}

Int Factorization::squarefree_kernel() const {
    Int v = 1;
    for (const auto& [p, e] : factors) v *= p;
    return v;
}

const std::vector<std::uint32_t>& small_primes() {
    static std::once_flag flag;
    static std::vector<std::uint32_t> table;
    std::call_once(flag, [] { table = primes_up_to(1000000); });
    return table;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

namespace {

// Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0 if
// the iteration budget ran out. `budget` is decremented in place.
Int pollard_brent(const Int& n, std::uint64_t& budget, Rng& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    auto charge = [&budget](std::uint64_t units) {
        std::uint64_t spent = std::min(budget, units);
        budget -= spent;
        return spent;
    };
    while (budget > 0) {
        Int y = rng.below(n - 1) + 1;
        Int c = rng.below(n - 1) + 1;
        const std::uint64_t m = 128;
        Int g = 1, q = 1, x, ys;
        std::uint64_t r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = charge(r); i > 0; --i) y = (y * y + c) % n;
            std::uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                std::uint64_t chunk = charge(std::min(m, r - k));
                for (std::uint64_t i = 0; i < chunk; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // product lost the factor; backtrack one step at a time
            g = 1;
            std::uint64_t guard = 1u << 20;
            while (g == 1 && guard-- > 0) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n && g != 1) return g;
        // trivial outcome; retry with a new constant
    }
    return 0;
}

void factor_rec(const Int& n, std::uint64_t& budget, Rng& rng,
                std::map<Int, int>& primes, std::vector<Int>& leftovers) {
    if (n == 1) return;
    if (is_prime(n, rng.next_u64())) {
        primes[n] += 1;
        return;
    }
    // perfect powers split for free
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= static_cast<unsigned long>(bit_length(n)); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Int, int> sub;
                std::vector<Int> subleft;
                factor_rec(root, budget, rng, sub, subleft);
                for (const auto& [p, e] : sub) primes[p] += e * static_cast<int>(k);
                for (const auto& l : subleft)
                    for (unsigned long i = 0; i < k; ++i) leftovers.push_back(l);
                return;
            }
        }
    }
    Int d = pollard_brent(n, budget, rng);
    if (d == 0) {
        leftovers.push_back(n);
        return;
    }
    factor_rec(d, budget, rng, primes, leftovers);
    factor_rec(n / d, budget, rng, primes, leftovers);
}

} // namespace

Factorization factor_integer(const Int& n_in, std::uint64_t budget, std::uint64_t seed) {
    Factorization out;
    Int n = abs(n_in);
    if (n <= 1) return out;
    std::map<Int, int> primes;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            primes[Int(p)] += 1;
        }
        if (n == 1) break;
    }
    if (n > 1) {
        Rng rng(seed);
        std::vector<Int> leftovers;
        factor_rec(n, budget, rng, primes, leftovers);
        Int cof = 1;
        for (const auto& l : leftovers) cof *= l;
        out.cofactor = cof;
        out.status = (cof == 1) ? Factorization::Status::Complete
                                : Factorization::Status::PartialCofactorComposite;
    }
    for (const auto& [p, e] : primes) out.factors.emplace_back(p, e);
    return out;
}

Int euler_phi(const Int& n, std::uint64_t budget, std::uint64_t seed) {
    if (n < 1) raise(errc::internal, "euler_phi: n must be positive");
    if (n == 1) return 1;
    Factorization f = factor_integer(n, budget, seed);
    if (!f.complete()) raise(errc::factorization_incomplete, "euler_phi(" + n.get_str() + ")");
    Int phi = 1;
    for (const auto& [p, e] : f.factors)
        phi *= pow_ui(p, static_cast<unsigned long>(e - 1)) * (p - 1);
    return phi;
}

CyclotomicPoly cyclotomic_poly(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, ZPoly> cache;
    if (n < 1) raise(errc::internal, "cyclotomic_poly: n must be positive");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return {n, it->second};
    }
    // x^n - 1 divided by all lower-index cyclotomics
    ZPoly num(static_cast<size_t>(n + 1), Int(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = zp::div_exact_monic(num, cyclotomic_poly(d).coeffs);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        cache[n] = num;
    }
    return {n, num};
}

double cyclotomic_lower_bound(unsigned long n, double z_abs) {
    if (z_abs < 2.0)
        raise(errc::domain_too_small, "cyclotomic_lower_bound needs |z| >= 2");
    double phi = euler_phi(Int(n)).get_d();
    return (1.0 / 3.0) * std::pow((z_abs - 1.0) / 3.0, phi - 1.0);
}

} // namespace wflab
