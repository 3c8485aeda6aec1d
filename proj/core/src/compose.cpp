#include "polyinv/compose.hpp"

#include <stdexcept>

namespace polyinv {

namespace {

// Monic associate a^(m-1) f(x/a) with root set {a*lambda}.
Poly monic_associate(const Poly& f) {
    int m = f.degree();
    const Int& a = f.lc();
    std::vector<Int> c(static_cast<size_t>(m) + 1);
    c[static_cast<size_t>(m)] = 1;
    for (int j = 0; j < m; ++j)
        c[static_cast<size_t>(j)] = f.coeff(j) * pow_int(a, static_cast<unsigned long>(m - 1 - j));
    return Poly(std::move(c));
}

// Power sums p_0..p_n of the roots of a monic integer polynomial, by the
// Newton recurrence; all values are integers.
std::vector<Int> power_sums(const Poly& f, int n) {
    int m = f.degree();
    std::vector<Int> p(static_cast<size_t>(n) + 1);
    p[0] = m;
    for (int k = 1; k <= n; ++k) {
        Int acc(0);
        for (int i = 1; i <= std::min(k - 1, m); ++i) acc += f.coeff(m - i) * p[static_cast<size_t>(k - i)];
        if (k <= m) acc += Int(k) * f.coeff(m - k);
        p[static_cast<size_t>(k)] = -acc;
    }
    return p;
}

// Monic polynomial of degree n with the given power sums.
Poly from_power_sums(const std::vector<Int>& p, int n) {
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        Int acc = p[static_cast<size_t>(k)];
        for (int i = 1; i < k; ++i) acc += c[static_cast<size_t>(n - i)] * p[static_cast<size_t>(k - i)];
        if (acc % k != 0) throw std::logic_error("from_power_sums: inexact Newton step");
        c[static_cast<size_t>(n - k)] = -acc / k;
    }
    return Poly(std::move(c));
}

// H(s*x), normalized to a primitive polynomial with positive leading coefficient.
Poly unscale(const Poly& h, const Int& s) {
    std::vector<Int> c(h.coeffs());
    Int power(1);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] *= power;
        power *= s;
    }
    return Poly(std::move(c)).primitive_part();
}

}  // namespace

Poly compose_mul(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero() || f.is_constant() || g.is_constant())
        throw std::invalid_argument("compose_mul: arguments must be nonconstant");
    if (f.constant_term() == 0 || g.constant_term() == 0)
        throw std::invalid_argument("compose_mul: arguments must have nonzero constant term");
    int m = f.degree(), n = g.degree();
    int nn = m * n;
    Poly fm = monic_associate(f), gm = monic_associate(g);
    std::vector<Int> pf = power_sums(fm, nn), pg = power_sums(gm, nn);
    std::vector<Int> ph(static_cast<size_t>(nn) + 1);
    for (int k = 0; k <= nn; ++k) ph[static_cast<size_t>(k)] = pf[static_cast<size_t>(k)] * pg[static_cast<size_t>(k)];
    ph[0] = nn;
    Poly h = from_power_sums(ph, nn);
    return unscale(h, f.lc() * g.lc());
}

Poly compose_pow_pre(const Poly& f, int i) {
    if (f.is_constant()) throw std::invalid_argument("compose_pow: constant input");
    if (i < 1) throw std::invalid_argument("compose_pow: exponent must be >= 1");
    int m = f.degree();
    Poly fm = monic_associate(f);
    std::vector<Int> pf = power_sums(fm, m * i);
    std::vector<Int> ph(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) ph[static_cast<size_t>(k)] = pf[static_cast<size_t>(k) * i];
    ph[0] = m;
    Poly h = from_power_sums(ph, m);
    return unscale(h, pow_int(f.lc(), static_cast<unsigned long>(i)));
}

Poly compose_pow(const Poly& f, int i) { return compose_pow_pre(f, i).inflate(i); }

}  // namespace polyinv
