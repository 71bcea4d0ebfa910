#include "wflab/fppoly.hpp"

#include "wflab/error.hpp"

#include <algorithm>
#include <map>

namespace wflab {
namespace fp {

namespace {

Int mod(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

FpPoly trim(FpPoly a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    return a;
}

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        raise(errc::internal, "inv_mod: not invertible");
    return r;
}

} // namespace

FpPoly make(const Int& p, std::vector<Int> coeffs) {
    FpPoly r{p, std::move(coeffs)};
    for (auto& c : r.c) c = mod(c, p);
    return trim(std::move(r));
}

FpPoly from_zpoly(const Int& p, const ZPoly& f) {
    return make(p, std::vector<Int>(f.begin(), f.end()));
}

FpPoly constant(const Int& p, const Int& value) { return make(p, {value}); }

FpPoly x(const Int& p) { return make(p, {Int(0), Int(1)}); }

FpPoly add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, std::vector<Int>(std::max(a.c.size(), b.c.size()), Int(0))};
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod(r.c[i] + b.c[i], a.p);
    return trim(std::move(r));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, std::vector<Int>(std::max(a.c.size(), b.c.size()), Int(0))};
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod(r.c[i] - b.c[i], a.p);
    return trim(std::move(r));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly{a.p, {}};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return make(a.p, std::move(r));
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return rem(mul(a, b), m); }

void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) raise(errc::internal, "FpPoly division by zero");
    const Int& p = a.p;
    r = a;
    int db = b.degree();
    if (a.degree() < db) {
        q = FpPoly{p, {}};
        return;
    }
    Int linv = inv_mod(b.c.back(), p);
    q = FpPoly{p, std::vector<Int>(a.c.size() - b.c.size() + 1, Int(0))};
    for (int i = r.degree(); i >= db; --i) {
        if (r.c[static_cast<size_t>(i)] == 0) continue;
        Int coef = mod(r.c[static_cast<size_t>(i)] * linv, p);
        q.c[static_cast<size_t>(i - db)] = coef;
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            r.c[k] = mod(r.c[k] - coef * b.c[static_cast<size_t>(j)], p);
        }
    }
    r = trim(std::move(r));
    q = trim(std::move(q));
}

FpPoly rem(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    divrem(a, b, q, r);
    return r;
}

FpPoly monic(FpPoly a) {
    if (a.is_zero() || a.c.back() == 1) return a;
    Int linv = inv_mod(a.c.back(), a.p);
    for (auto& c : a.c) c = mod(c * linv, a.p);
    return a;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
    FpPoly result = constant(base.p, 1);
    FpPoly b = rem(base, m);
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        result = mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = mulmod(result, b, m);
    }
    return result;
}

FpPoly derivative(const FpPoly& a) {
    if (a.c.size() <= 1) return FpPoly{a.p, {}};
    std::vector<Int> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * Int(static_cast<long>(i));
    return make(a.p, std::move(r));
}

Int eval(const FpPoly& a, const Int& xv) {
    Int acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = (acc * xv + a.c[i]) % a.p;
    if (acc < 0) acc += a.p;
    return acc;
}

bool less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    }
    return false;
}

namespace {

FpPoly random_poly(const Int& p, int deg, Rng& rng) {
    std::vector<Int> c(static_cast<size_t>(deg + 1));
    for (auto& v : c) v = rng.below(p);
    return make(p, std::move(c));
}

// p-th root under Frobenius: g(x^p) -> g(x); coefficients are fixed by x->x^p.
FpPoly pth_root(const FpPoly& f) {
    unsigned long p = f.p.get_ui();
    std::vector<Int> c;
    for (size_t i = 0; i < f.c.size(); i += p) c.push_back(f.c[i]);
    return FpPoly{f.p, std::move(c)};
}

// Squarefree decomposition in characteristic p: list of (g_i, i) with
// f = prod g_i^i, g_i squarefree and pairwise coprime.
void squarefree_decompose(const FpPoly& f, int outer_mult,
                          std::map<int, FpPoly>& out) {
    FpPoly fd = derivative(f);
    if (fd.is_zero()) {
        // f = g(x^p); every multiplicity gains a factor p
        if (f.degree() == 0) return;
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(f.p.get_ui()), out);
        return;
    }
    FpPoly c = gcd(f, fd);
    FpPoly w, tmp;
    divrem(f, c, w, tmp);
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = gcd(w, c);
        FpPoly fac;
        divrem(w, y, fac, tmp);
        if (fac.degree() > 0) {
            auto it = out.find(i * outer_mult);
            if (it == out.end())
                out.emplace(i * outer_mult, monic(fac));
            else
                it->second = mul(it->second, monic(fac));
        }
        w = std::move(y);
        FpPoly q;
        divrem(c, w, q, tmp);
        c = std::move(q);
        ++i;
    }
    // what remains of c is a p-th power
    if (c.degree() > 0)
        squarefree_decompose(pth_root(monic(c)), outer_mult * static_cast<int>(c.p.get_ui()), out);
}

// Distinct-degree decomposition of a squarefree monic f: (product, degree).
std::vector<std::pair<FpPoly, int>> distinct_degree(const FpPoly& f) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rest = f;
    FpPoly h = rem(x(f.p), rest); // x^(p^k) mod rest, iterated
    int k = 0;
    while (rest.degree() > 0) {
        ++k;
        if (2 * k > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        h = powmod(h, f.p, rest);
        FpPoly g = gcd(sub(h, x(f.p)), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            FpPoly q, r;
            divrem(rest, g, q, r);
            rest = std::move(q);
            if (rest.degree() > 0) h = rem(h, rest);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting, both odd and char-2 cases.
void equal_degree_split(const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(monic(f));
        return;
    }
    const Int& p = f.p;
    FpPoly g;
    while (true) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (a.is_zero()) continue;
        g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) break;
        if (p == 2) {
            // trace map over F_{2^d}
            FpPoly t = a;
            FpPoly acc = a;
            for (int i = 1; i < d; ++i) {
                t = mulmod(t, t, f);
                acc = add(acc, t);
            }
            g = gcd(acc, f);
        } else {
            Int e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
            FpPoly b = powmod(a, e, f);
            g = gcd(sub(b, constant(p, 1)), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    FpPoly q, r;
    divrem(f, g, q, r);
    equal_degree_split(g, d, rng, out);
    equal_degree_split(q, d, rng, out);
}

} // namespace

std::vector<Factor> factor(const FpPoly& f_in, std::uint64_t seed) {
    if (f_in.is_zero()) raise(errc::internal, "factor of zero polynomial");
    FpPoly f = monic(f_in);
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    std::map<int, FpPoly> sqf;
    squarefree_decompose(f, 1, sqf);
    Rng rng(seed);
    for (const auto& [mult, part] : sqf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<FpPoly> irr;
            equal_degree_split(prod, d, rng, irr);
            for (auto& g : irr) out.push_back(Factor{std::move(g), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Factor& a, const Factor& b) { return less(a.poly, b.poly); });
    return out;
}

bool is_irreducible(const FpPoly& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1 for prime q | n
    FpPoly xp = x(f.p);
    FpPoly h = powmod(xp, pow_ui(f.p, static_cast<unsigned long>(n)), f);
    if (!(sub(h, xp).is_zero())) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool isprime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) isprime = false;
        if (!isprime) continue;
        FpPoly hk = powmod(xp, pow_ui(f.p, static_cast<unsigned long>(n / q)), f);
        if (gcd(sub(hk, xp), f).degree() != 0) return false;
    }
    return true;
}

} // namespace fp
} // namespace wflab
