#include "wflab/zpoly.hpp"

#include "wflab/error.hpp"

#include <algorithm>

namespace wflab {
namespace zp {

ZPoly trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const ZPoly& a) { return a.empty(); }

bool is_monic(const ZPoly& a) { return !a.empty() && a.back() == 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

ZPoly neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

ZPoly mul_scalar(ZPoly a, const Int& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

ZPoly derivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(static_cast<long>(i));
    return trim(std::move(r));
}

Int eval(const ZPoly& a, const Int& x) {
    Int acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

void divrem_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    if (!is_monic(b)) raise(errc::internal, "divrem_monic: divisor not monic");
    r = a;
    int db = degree(b);
    if (degree(a) < db) {
        q = {};
        return;
    }
    q.assign(a.size() - b.size() + 1, Int(0));
    for (int i = degree(r); i >= db; --i) {
        Int c = r[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r = trim(std::move(r));
    q = trim(std::move(q));
}

ZPoly div_exact_monic(const ZPoly& a, const ZPoly& b) {
    ZPoly q, r;
    divrem_monic(a, b, q, r);
    if (!r.empty()) raise(errc::internal, "div_exact_monic: nonzero remainder");
    return q;
}

Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    ZPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}

namespace {

// Fraction-free Gaussian elimination determinant (Bareiss).
Int bareiss_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

} // namespace

Int resultant(const ZPoly& a, const ZPoly& b) {
    int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) return pow_ui(a[0], static_cast<unsigned long>(db));
    if (db == 0) return pow_ui(b[0], static_cast<unsigned long>(da));
    size_t n = static_cast<size_t>(da + db);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m[r][r + da - i] = a[static_cast<size_t>(i)];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = b[static_cast<size_t>(i)];
    return bareiss_det(std::move(m));
}

Int discriminant(const ZPoly& f) {
    int d = degree(f);
    if (d < 1) raise(errc::internal, "discriminant of constant");
    Int res = resultant(f, derivative(f));
    Int disc = res / f.back();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

namespace {

int sign_at_inf(const ZPoly& p, bool plus) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (!plus && degree(p) % 2 != 0) s = -s;
    return s;
}

} // namespace

int count_real_roots(const ZPoly& f_in) {
    ZPoly f = primitive_part(trim(f_in));
    if (degree(f) <= 0) return 0;
    // Sturm chain with primitive normalization; multiply remainders by a
    // positive constant only (prem with even power of |lc|), then negate.
    std::vector<ZPoly> chain;
    chain.push_back(f);
    chain.push_back(derivative(f));
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        // pseudo-remainder; track how many times the (possibly negative)
        // leading coefficient multiplied in, to restore the true sign
        ZPoly r = a;
        Int lb = b.back();
        int db = degree(b);
        int steps = 0;
        while (!r.empty() && degree(r) >= db) {
            int dr = degree(r);
            Int c = r.back();
            ZPoly t(r.size(), Int(0));
            for (size_t i = 0; i < r.size(); ++i) t[i] = lb * r[i];
            for (int j = 0; j <= db; ++j)
                t[static_cast<size_t>(dr - db + j)] -= c * b[static_cast<size_t>(j)];
            r = trim(std::move(t));
            ++steps;
        }
        if (lb < 0 && steps % 2 != 0)
            for (auto& x : r) x = -x;
        // now r == prem(a,b) * positive; Sturm wants -rem
        for (auto& x : r) x = -x;
        r = primitive_part(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](bool plus) {
        int v = 0, prev = 0;
        for (const auto& p : chain) {
            int s = sign_at_inf(p, plus);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

std::string to_string(const ZPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t i = a.size(); i-- > 0;) {
        const Int& c = a[i];
        if (c == 0) continue;
        Int ac = abs(c);
        std::string term;
        if (i == 0) {
            term = ac.get_str();
        } else {
            std::string xpow = (i == 1) ? var : var + "^" + std::to_string(i);
            term = (ac == 1) ? xpow : ac.get_str() + xpow;
        }
        if (first) {
            out += (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? "-" : "+") + term;
        }
    }
    return out;
}

} // namespace zp
} // namespace wflab
