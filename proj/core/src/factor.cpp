#include "polyinv/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modp.hpp"

namespace polyinv {

namespace {

Poly reduce_mod(const Poly& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (Int& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    return Poly(std::move(c));
}

Poly symmetric_mod(const Poly& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    Int half = m / 2;
    for (Int& x : c) {
        x %= m;
        if (x < 0) x += m;
        if (x > half) x -= m;
    }
    return Poly(std::move(c));
}

Poly mul_mod(const Poly& a, const Poly& b, const Int& m) { return reduce_mod(a * b, m); }

// Remainder and quotient by a monic divisor, coefficients mod m.
void divmod_monic_mod(const Poly& a, const Poly& b, const Int& m, Poly& q, Poly& r) {
    std::vector<Int> rc(a.coeffs());
    int db = b.degree();
    int da = static_cast<int>(rc.size()) - 1;
    if (da < db) {
        q = Poly();
        r = reduce_mod(a, m);
        return;
    }
    std::vector<Int> qc(static_cast<size_t>(da - db) + 1, Int(0));
    for (int i = da; i >= db; --i) {
        Int c = rc[static_cast<size_t>(i)] % m;
        if (c < 0) c += m;
        if (c == 0) {
            rc[static_cast<size_t>(i)] = 0;
            continue;
        }
        qc[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rc[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
        rc[static_cast<size_t>(i)] = 0;
    }
    for (Int& x : rc) {
        x %= m;
        if (x < 0) x += m;
    }
    q = Poly(std::move(qc));
    r = Poly(std::move(rc));
}

Poly from_fp(const modp::FpPoly& a) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Int(static_cast<unsigned long>(a[i]));
    return Poly(std::move(c));
}

// One quadratic Hensel step: from f == g*h (mod m), s*g + t*h == 1 (mod m)
// with f, g, h monic, to the same data mod m^2.
struct LiftPair {
    Poly g, h, s, t;
};

LiftPair hensel_step(const Poly& f, const LiftPair& in, const Int& m) {
    Int m2 = m * m;
    Poly e = reduce_mod(f - in.g * in.h, m2);
    Poly q, r;
    divmod_monic_mod(mul_mod(in.s, e, m2), in.h, m2, q, r);
    Poly g2 = reduce_mod(in.g + in.t * e + q * in.g, m2);
    Poly h2 = reduce_mod(in.h + r, m2);
    Poly b = reduce_mod(in.s * g2 + in.t * h2 - Poly(1), m2);
    Poly c, d;
    divmod_monic_mod(mul_mod(in.s, b, m2), h2, m2, c, d);
    Poly s2 = reduce_mod(in.s - d, m2);
    Poly t2 = reduce_mod(in.t - in.t * b - c * g2, m2);
    return {g2, h2, s2, t2};
}

// Lift the factorization f == prod(factors) (mod p), all monic, to mod p^K
// with p^K >= bound. Recursive subproduct tree.
void hensel_lift_tree(const Poly& f, const std::vector<modp::FpPoly>& fp_factors, size_t lo, size_t hi,
                      uint64_t p, const Int& bound, std::vector<Poly>& out) {
    if (hi - lo == 1) {
        // f itself is the lift of the single factor
        out.push_back(f);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    modp::FpPoly gp{1}, hp{1};
    for (size_t i = lo; i < mid; ++i) gp = modp::mul(gp, fp_factors[i], p);
    for (size_t i = mid; i < hi; ++i) hp = modp::mul(hp, fp_factors[i], p);
    auto bez = modp::ext_gcd(gp, hp, p);
    if (modp::degree(bez.g) != 0) throw std::logic_error("hensel: factors not coprime mod p");

    LiftPair cur{from_fp(gp), from_fp(hp), from_fp(bez.s), from_fp(bez.t)};
    Int m(static_cast<unsigned long>(p));
    while (m < bound) {
        cur = hensel_step(f, cur, m);
        m = m * m;
    }
    // recurse; g and h are monic lifts of the half products
    hensel_lift_tree(cur.g, fp_factors, lo, mid, p, bound, out);
    hensel_lift_tree(cur.h, fp_factors, mid, hi, p, bound, out);
}

bool is_small_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Coefficient bound for monic factors of a monic F: sqrt(d+1) * 2^d * height.
Int factor_bound(const Poly& f) {
    Int h(0);
    for (const Int& c : f.coeffs()) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    int d = f.degree();
    Int s = sqrt(Int(d + 1)) + 1;
    return s * pow_int(Int(2), static_cast<unsigned long>(d)) * h;
}

// Irreducible factors of a squarefree primitive polynomial with positive
// leading coefficient and nonzero constant term.
std::vector<Poly> factor_squarefree(const Poly& g) {
    if (g.degree() == 1) return {g};

    // monic associate: roots scaled by lc
    const Int& b = g.lc();
    int m = g.degree();
    std::vector<Int> mc(static_cast<size_t>(m) + 1);
    mc[static_cast<size_t>(m)] = 1;
    for (int j = 0; j < m; ++j)
        mc[static_cast<size_t>(j)] = g.coeff(j) * pow_int(b, static_cast<unsigned long>(m - 1 - j));
    Poly f(std::move(mc));

    // smallest odd prime keeping f squarefree
    uint64_t p = 3;
    modp::FpPoly fp;
    while (true) {
        if (is_small_prime(p)) {
            fp = modp::from_int_poly(f, p);
            if (modp::degree(fp) == f.degree() && modp::is_squarefree(fp, p)) break;
        }
        p += 2;
        if (p > 100000) throw std::logic_error("factor: no usable Hensel prime found");
    }

    std::vector<modp::FpPoly> fp_factors = modp::berlekamp(fp, p);
    std::vector<Poly> result;
    if (fp_factors.size() == 1) {
        result.push_back(g.primitive_part());
        return result;
    }
    std::sort(fp_factors.begin(), fp_factors.end());

    Int bound = 2 * factor_bound(f) + 1;
    Int q(static_cast<unsigned long>(p));
    while (q < bound) q = q * q;

    std::vector<Poly> lifted;
    hensel_lift_tree(f, fp_factors, 0, fp_factors.size(), p, bound, lifted);

    // subset recombination, smallest cardinality first
    Poly remaining = f;
    std::vector<Poly> monic_factors;
    std::vector<size_t> pool(lifted.size());
    for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;

    auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
        Poly cand(Int(1));
        for (size_t i : subset) cand = mul_mod(cand, lifted[pool[i]], q);
        cand = symmetric_mod(cand, q);
        if (remaining.constant_term() != 0 && cand.constant_term() != 0 &&
            remaining.constant_term() % cand.constant_term() != 0)
            return false;
        auto quo = try_divide(remaining, cand);
        if (!quo) return false;
        monic_factors.push_back(cand);
        remaining = *quo;
        std::vector<size_t> next;
        for (size_t i = 0; i < pool.size(); ++i)
            if (std::find(subset.begin(), subset.end(), i) == subset.end()) next.push_back(pool[i]);
        pool = next;
        return true;
    };

    for (size_t k = 1; 2 * k <= pool.size();) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            if (try_subset(idx)) {
                found = true;
                break;
            }
            // next k-combination of {0..pool.size()-1}
            size_t i = k;
            while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (remaining.degree() > 0) monic_factors.push_back(remaining);

    // map monic factors of f back to primitive factors of g
    for (const Poly& mf : monic_factors) {
        std::vector<Int> c(mf.coeffs());
        Int power(1);
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] *= power;
            power *= b;
        }
        result.push_back(Poly(std::move(c)).primitive_part());
    }
    return result;
}

}  // namespace

Poly Factorization::recompose() const {
    Poly r(Int(sign) * content);
    for (const Term& t : factors)
        for (int i = 0; i < t.multiplicity; ++i) r = r * t.poly;
    return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    Poly u = f.primitive_part();
    std::vector<std::pair<Poly, int>> parts;
    if (u.degree() < 1) return parts;

    Poly g = poly_gcd(u, u.derivative());
    if (g.degree() == 0) {
        parts.emplace_back(u, 1);
        return parts;
    }
    Poly w = divide_exact(u, g);
    Poly y = divide_exact(u.derivative(), g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly a = poly_gcd(w, z);
        if (a.degree() > 0) parts.emplace_back(a, i);
        w = divide_exact(w, a);
        y = divide_exact(z, a);
        z = y - w.derivative();
        ++i;
    }
    return parts;
}

Factorization factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    auto cd = content_primitive(f);
    Factorization out;
    out.sign = cd.sign;
    out.content = cd.content;
    if (cd.pp.degree() < 1) return out;

    std::map<Poly, int> acc;
    for (auto& [part, mult] : squarefree_decomposition(cd.pp)) {
        Poly rest = part;
        // strip a power of x so the Hensel path sees a nonzero constant term
        if (rest.constant_term() == 0) {
            acc[Poly::x()] += mult;
            rest = divide_exact(rest, Poly::x());
        }
        if (rest.degree() < 1) continue;
        for (const Poly& q : factor_squarefree(rest)) acc[q] += mult;
    }
    for (auto& [poly, mult] : acc) out.factors.push_back({poly, mult});
    return out;
}

int irr_count(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("irr_count: zero polynomial");
    int n = 0;
    for (const auto& t : factor(f).factors)
        if (t.poly.degree() > 0) n += t.multiplicity;
    return n;
}

Poly cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m must be >= 1");
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed bottom-up
    std::vector<int> divisors;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    std::map<int, Poly> phi;
    for (int d : divisors) {
        Poly num = Poly::monomial(1, d) - Poly(1);
        for (int e : divisors) {
            if (e >= d || d % e != 0) continue;
            num = divide_exact(num, phi[e]);
        }
        phi[d] = num;
    }
    return phi[m];
}

std::optional<int> cyclotomic_index(const Poly& q) {
    if (q.degree() < 1 || q.lc() != 1) return std::nullopt;
    int k = q.degree();
    auto euler_phi = [](int m) {
        int r = m;
        for (int d = 2; d * d <= m; ++d) {
            if (m % d) continue;
            r -= r / d;
            while (m % d == 0) m /= d;
        }
        if (m > 1) r -= r / m;
        return r;
    };
    int bound = 2 * k * k + 2;
    for (int m = 1; m <= bound; ++m) {
        if (euler_phi(m) != k) continue;
        if (q == cyclotomic(m)) return m;
    }
    return std::nullopt;
}

bool is_powerful(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_powerful: zero polynomial");
    if (f.is_constant()) return true;
    return f.deflate().exponent >= 2;
}

Poly radical(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("radical: zero polynomial");
    if (f.is_constant()) return Poly(1);
    Poly pp = f.primitive_part();
    Poly g = poly_gcd(pp, pp.derivative());
    return divide_exact(pp, g);
}

}  // namespace polyinv
