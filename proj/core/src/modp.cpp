#include "modp.hpp"

#include <stdexcept>

namespace polyinv::modp {

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly from_int_poly(const Poly& f, uint64_t p) {
    FpPoly r(f.coeffs().size());
    Int pp(static_cast<unsigned long>(p));
    for (size_t i = 0; i < r.size(); ++i) {
        Int c = f.coeffs()[i] % pp;
        if (c < 0) c += pp;
        r[i] = c.get_ui();
    }
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

FpPoly add(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

FpPoly scale(const FpPoly& a, uint64_t s, uint64_t p) {
    FpPoly r = a;
    for (auto& c : r) c = c * (s % p) % p;
    trim(r);
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    // extended Euclid on machine integers
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

void divmod_monic(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& q, FpPoly& r) {
    if (b.empty() || b.back() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
    r = a;
    trim(r);
    int db = degree(b);
    if (degree(r) < db) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    for (int i = degree(r); i >= db; --i) {
        uint64_t c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            r[k] = (r[k] + p - c * b[static_cast<size_t>(j)] % p) % p;
        }
    }
    trim(q);
    trim(r);
}

FpPoly make_monic(const FpPoly& a, uint64_t p) {
    if (a.empty()) return a;
    return scale(a, inv_mod(a.back(), p), p);
}

FpPoly gcd(FpPoly a, FpPoly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly q, r;
        divmod_monic(a, make_monic(b, p), p, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

FpPoly derivative(const FpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
    trim(r);
    return r;
}

FpPoly powmod_x(uint64_t e, const FpPoly& mod, uint64_t p) {
    FpPoly base{0, 1};
    FpPoly acc{1};
    FpPoly q, r;
    while (e > 0) {
        if (e & 1) {
            divmod_monic(mul(acc, base, p), mod, p, q, r);
            acc = r;
        }
        divmod_monic(mul(base, base, p), mod, p, q, r);
        base = r;
        e >>= 1;
    }
    return acc;
}

bool is_squarefree(const FpPoly& a, uint64_t p) {
    FpPoly d = derivative(a, p);
    if (d.empty()) return false;  // p | every exponent, a is a p-th power times unit
    return degree(gcd(a, d, p)) == 0;
}

FpBezout ext_gcd(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        FpPoly q, r;
        uint64_t lcinv = inv_mod(r1.back(), p);
        FpPoly r1m = scale(r1, lcinv, p);
        divmod_monic(r0, r1m, p, q, r);
        q = scale(q, lcinv, p);  // r0 = q*r1 + r with the original r1
        FpPoly s2 = sub(s0, mul(q, s1, p), p);
        FpPoly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // normalize g monic
    if (!r0.empty()) {
        uint64_t inv = inv_mod(r0.back(), p);
        r0 = scale(r0, inv, p);
        s0 = scale(s0, inv, p);
        t0 = scale(t0, inv, p);
    }
    return {r0, s0, t0};
}

std::vector<FpPoly> berlekamp(const FpPoly& f, uint64_t p) {
    int n = degree(f);
    if (n <= 1) return {f};
    // rows of Q: x^(p*i) mod f
    FpPoly xp = powmod_x(p, f, p);
    std::vector<FpPoly> rows(static_cast<size_t>(n));
    rows[0] = FpPoly{1};
    FpPoly q, r;
    for (int i = 1; i < n; ++i) {
        divmod_monic(mul(rows[static_cast<size_t>(i - 1)], xp, p), f, p, q, r);
        rows[static_cast<size_t>(i)] = r;
    }
    // M = (Q - I)^T; null space vectors w give Berlekamp subalgebra elements.
    std::vector<std::vector<uint64_t>> m(static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const FpPoly& row = rows[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            uint64_t v = (j <= degree(row)) ? row[static_cast<size_t>(j)] : 0;
            if (i == j) v = (v + p - 1) % p;
            m[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;  // transpose
        }
    }
    // Gaussian elimination; collect a null space basis.
    std::vector<int> pivot_of_col(static_cast<size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(piv)]);
        uint64_t inv = inv_mod(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(rank)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == rank) continue;
            uint64_t c = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (m[static_cast<size_t>(i)][static_cast<size_t>(j)] + p -
                     c * m[static_cast<size_t>(rank)][static_cast<size_t>(j)] % p) %
                    p;
        }
        pivot_of_col[static_cast<size_t>(col)] = rank;
        ++rank;
    }
    size_t nfactors = static_cast<size_t>(n - rank);
    std::vector<FpPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[static_cast<size_t>(col)] >= 0) continue;
        FpPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int c2 = 0; c2 < n; ++c2) {
            int pr = pivot_of_col[static_cast<size_t>(c2)];
            if (pr >= 0) {
                uint64_t val = m[static_cast<size_t>(pr)][static_cast<size_t>(col)];
                v[static_cast<size_t>(c2)] = val == 0 ? 0 : p - val;
            }
        }
        trim(v);
        basis.push_back(std::move(v));
    }
    std::vector<FpPoly> factors{f};
    if (nfactors <= 1) return factors;
    for (const FpPoly& v : basis) {
        if (factors.size() >= nfactors) break;
        if (degree(v) < 1) continue;  // the constant vector splits nothing
        for (size_t idx = 0; idx < factors.size() && factors.size() < nfactors; ++idx) {
            if (degree(factors[idx]) <= 1) continue;
            for (uint64_t s = 0; s < p && factors.size() < nfactors; ++s) {
                FpPoly shifted = v;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = (shifted[0] + p - s) % p;
                trim(shifted);
                if (shifted.empty()) continue;
                FpPoly g = gcd(factors[idx], shifted, p);
                int dg = degree(g);
                if (dg > 0 && dg < degree(factors[idx])) {
                    FpPoly co, rem;
                    divmod_monic(factors[idx], g, p, co, rem);
                    factors[idx] = std::move(g);
                    factors.push_back(make_monic(co, p));
                }
            }
        }
    }
    return factors;
}

}  // namespace polyinv::modp
