#include "polyinv/higman.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "polyinv/compose.hpp"
#include "polyinv/intfactor.hpp"
#include "polyinv/intmatrix.hpp"

namespace polyinv {

namespace {

Int binomial(int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Poly poly_pow(const Poly& f, int k) {
    Poly r(Int(1));
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

struct LevelCore {
    PolyDeflation defl;
    ClosedDivisorSet cds;
};

LevelCore level_core(const Poly& g) {
    LevelCore lc;
    lc.defl = g.deflate();
    lc.cds = closed_divisors(lc.defl.fbar);
    return lc;
}

Int rho2_core(const Poly& fbar, const Poly& fstar) {
    if (fstar.is_constant()) return fstar.coeff(0);
    Poly q = divide_exact(fbar, fstar);
    if (q.is_constant()) return q.coeff(0);
    return resultant(fstar, q);
}

Poly fstar2_core(const Poly& fstar) {
    if (fstar.is_constant()) return fstar;
    return compose_mul(fstar, fstar);
}

Int rho3_core(const Poly& fbar, const Poly& f2, Poly* u_out) {
    Poly u = poly_gcd(f2, fbar);
    if (u_out) *u_out = u;
    Poly q1 = divide_exact(fbar, u);
    if (q1.is_constant()) return q1.coeff(0);
    Poly q2 = divide_exact(f2, u);
    if (q2.is_constant()) return q2.coeff(0);
    return resultant(q2, q1);
}

Rho1Result rho1_core(const Poly& fbar, const Poly& fstar) {
    int m = fbar.degree();
    Rho1Result out;
    out.value = 1;
    for (int n = 2; n <= m + 1; ++n) {
        std::vector<Poly> sums;
        for (Poly& s : partial_sums(fbar, n))
            if (!s.is_zero()) sums.push_back(std::move(s));

        int d_bound = 2 * m;
        for (int attempt = 0;; ++attempt) {
            size_t rows = static_cast<size_t>(m + d_bound) + 1;
            size_t cols = sums.size() * (static_cast<size_t>(d_bound) + 1);
            IntMatrix a(rows, cols);
            for (size_t si = 0; si < sums.size(); ++si)
                for (int k = 0; k <= d_bound; ++k) {
                    size_t col = si * (static_cast<size_t>(d_bound) + 1) + static_cast<size_t>(k);
                    for (int i = 0; i <= sums[si].degree(); ++i)
                        a.at(static_cast<size_t>(i + k), col) = sums[si].coeff(i);
                }
            std::vector<Int> v(rows, Int(0));
            for (int i = 0; i <= fstar.degree(); ++i) v[static_cast<size_t>(i)] = fstar.coeff(i);

            SmithResult sm = smith_normal_form(a);
            std::vector<Int> w = sm.u * v;
            size_t nd = std::min(rows, cols);
            bool feasible = true;
            Int r_n(1);
            for (size_t i = 0; i < rows; ++i) {
                Int d = (i < nd) ? sm.s.at(i, i) : Int(0);
                if (d == 0) {
                    if (w[i] != 0) {
                        feasible = false;
                        break;
                    }
                    continue;
                }
                r_n = lcm(r_n, divexact(d, gcd(d, w[i])));
            }
            if (!feasible) {
                if (attempt >= 2) throw std::invalid_argument("infeasible: raise degree bound");
                d_bound *= 2;
                continue;
            }
            // cofactors from the Smith data: solve A x = r_n v
            std::vector<Int> y(cols, Int(0));
            for (size_t i = 0; i < nd; ++i) {
                Int d = sm.s.at(i, i);
                if (d != 0) y[i] = divexact(r_n * w[i], d);
            }
            std::vector<Int> x = sm.v * y;
            Rho1Witness wit;
            wit.n = n;
            wit.sums = sums;
            wit.r_n = r_n;
            Poly check;
            for (size_t si = 0; si < sums.size(); ++si) {
                std::vector<Int> cc(static_cast<size_t>(d_bound) + 1);
                for (int k = 0; k <= d_bound; ++k)
                    cc[static_cast<size_t>(k)] = x[si * (static_cast<size_t>(d_bound) + 1) + static_cast<size_t>(k)];
                wit.cofactors.push_back(Poly(std::move(cc)));
                check += wit.cofactors.back() * sums[si];
            }
            if (check != r_n * fstar) throw std::logic_error("rho1: cofactor certificate failed");
            out.value = lcm(out.value, r_n);
            out.witnesses.push_back(std::move(wit));
            break;
        }
    }
    return out;
}

void require_analyzable(const Poly& f, const char* who) {
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument(std::string(who) + ": nonconstant input required");
    if (f.constant_term() == 0) throw std::invalid_argument(std::string(who) + ": f(0) must be nonzero");
}

}  // namespace

std::vector<Poly> partial_sums(const Poly& fbar, int n) {
    if (n < 2) throw std::invalid_argument("partial_sums: n must be >= 2");
    if (fbar.is_constant()) throw std::invalid_argument("partial_sums: nonconstant input required");
    std::vector<std::vector<Int>> buckets(static_cast<size_t>(n));
    for (auto& b : buckets) b.assign(fbar.coeffs().size(), Int(0));
    for (size_t i = 0; i < fbar.coeffs().size(); ++i)
        buckets[i % static_cast<size_t>(n)][i] = fbar.coeffs()[i];
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly(std::move(b)));
    return out;
}

Poly fbar_n(const Poly& fbar, int n) {
    Poly g;
    for (const Poly& s : partial_sums(fbar, n)) {
        if (s.is_zero()) continue;
        g = g.is_zero() ? poly_gcd(s, Poly()) : poly_gcd(g, s);
        if (g.is_constant() && g.coeff(0) == 1) break;
    }
    return g;
}

std::set<size_t> powerful_support(const Factorization& fac) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < fac.factors.size(); ++i)
        if (fac.factors[i].poly.degree() > 0) idx.push_back(i);

    unsigned long combos = 1;
    for (size_t i : idx) {
        combos *= static_cast<unsigned long>(fac.factors[i].multiplicity) + 1;
        if (combos > (1ul << 20)) throw std::invalid_argument("powerful_support: factor lattice too large");
    }

    std::set<size_t> support;
    std::vector<int> exps(idx.size(), 0);
    while (true) {
        // advance the exponent odometer
        size_t pos = 0;
        while (pos < exps.size()) {
            if (exps[pos] < fac.factors[idx[pos]].multiplicity) {
                ++exps[pos];
                break;
            }
            exps[pos] = 0;
            ++pos;
        }
        if (pos == exps.size()) break;
        bool all_known = true;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0 && !support.count(idx[i])) all_known = false;
        if (all_known) continue;  // cannot enlarge the support
        Poly prod(Int(1));
        for (size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) prod = prod * fac.factors[idx[i]].poly;
        if (is_powerful(prod))
            for (size_t i = 0; i < exps.size(); ++i)
                if (exps[i] > 0) support.insert(idx[i]);
    }
    return support;
}

ClosedDivisorSet closed_divisors(const Poly& fbar) {
    if (fbar.is_zero()) throw std::invalid_argument("closed_divisors: zero polynomial");
    if (fbar.constant_term() == 0)
        throw std::invalid_argument("closed_divisors: fbar(0) must be nonzero");

    ClosedDivisorSet out;
    out.base = factor(fbar);
    out.forced_support = powerful_support(out.base);
    const auto& terms = out.base.factors;
    size_t k = terms.size();

    // root products of (i, j) that land on a root of r: resultant test
    std::vector<std::vector<bool>> hits(k * k, std::vector<bool>(k, false));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            Poly cm = compose_mul(terms[i].poly, terms[j].poly);
            for (size_t r = 0; r < k; ++r)
                if (resultant(cm, terms[r].poly) == 0) hits[i * k + j][r] = true;
        }

    std::vector<size_t> free_idx;
    for (size_t i = 0; i < k; ++i)
        if (!out.forced_support.count(i)) free_idx.push_back(i);
    if (free_idx.size() > 24) throw std::invalid_argument("closed_divisors: too many free factors");

    for (unsigned long mask = 0; mask < (1ul << free_idx.size()); ++mask) {
        std::vector<bool> in(k, false);
        for (size_t i : out.forced_support) in[i] = true;
        for (size_t b = 0; b < free_idx.size(); ++b)
            if (mask & (1ul << b)) in[free_idx[b]] = true;

        bool closed = true;
        for (size_t i = 0; i < k && closed; ++i) {
            if (!in[i]) continue;
            for (size_t j = i; j < k && closed; ++j) {
                if (!in[j]) continue;
                for (size_t r = 0; r < k; ++r)
                    if (!in[r] && hits[i * k + j][r]) {
                        closed = false;
                        break;
                    }
            }
        }
        if (!closed) continue;
        ClosedDivisorSet::Subset sub;
        Poly prod(out.base.content);
        for (size_t i = 0; i < k; ++i)
            if (in[i]) {
                sub.indices.push_back(i);
                prod = prod * poly_pow(terms[i].poly, terms[i].multiplicity);
            }
        sub.product = std::move(prod);
        out.closed_subsets.push_back(std::move(sub));
    }

    // gcd over all closed subsets: the factors present in every one
    std::vector<bool> common(k, true);
    for (const auto& sub : out.closed_subsets) {
        std::vector<bool> in(k, false);
        for (size_t i : sub.indices) in[i] = true;
        for (size_t i = 0; i < k; ++i)
            if (!in[i]) common[i] = false;
    }
    Poly g(out.base.content);
    for (size_t i = 0; i < k; ++i)
        if (common[i]) g = g * poly_pow(terms[i].poly, terms[i].multiplicity);
    out.gcd_product = std::move(g);
    return out;
}

Poly delta(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("delta: zero polynomial");
    if (f.is_constant()) return f;
    if (f.constant_term() == 0) throw std::invalid_argument("delta: f(0) must be nonzero");
    return closed_divisors(f.deflate().fbar).gcd_product;
}

Rho1Result rho1_with_witness(const Poly& f) {
    require_analyzable(f, "rho1");
    LevelCore lc = level_core(f);
    return rho1_core(lc.defl.fbar, lc.cds.gcd_product);
}

Int rho1(const Poly& f) { return rho1_with_witness(f).value; }

Int rho2(const Poly& f) {
    require_analyzable(f, "rho2");
    LevelCore lc = level_core(f);
    return rho2_core(lc.defl.fbar, lc.cds.gcd_product);
}

Poly fstar2(const Poly& f) {
    require_analyzable(f, "fstar2");
    LevelCore lc = level_core(f);
    return fstar2_core(lc.cds.gcd_product);
}

Int rho3(const Poly& f) {
    require_analyzable(f, "rho3");
    LevelCore lc = level_core(f);
    return rho3_core(lc.defl.fbar, fstar2_core(lc.cds.gcd_product), nullptr);
}

Int disc_radical(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("disc_radical: nonconstant input required");
    return discriminant(radical(f));
}

Int prodant(const Poly& f, ProdantPairs pairs) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("prodant: nonconstant input required");
    if (f.constant_term() == 0 || f.evaluate(1) == 0)
        throw std::invalid_argument("prodant: f(0)f(1) must be nonzero");
    Poly rad = radical(f);
    Poly f2 = compose_mul(rad, rad);
    if (pairs == ProdantPairs::distinct) {
        // take out the diagonal pairs (lambda, lambda)
        f2 = divide_exact(f2, compose_pow_pre(rad, 2)).primitive_part();
        if (f2.degree() == 0) return Int(1);
    }
    // divide out, entirely, every irreducible factor shared with rad
    Poly g = poly_gcd(f2, rad);
    while (g.degree() > 0) {
        f2 = divide_exact(f2, g);
        g = poly_gcd(f2, rad);
    }
    f2 = f2.primitive_part();
    if (f2.degree() == 0) return Int(1);
    return resultant(f2, rad);
}

HigmanReport analyze(const Poly& f, const AnalyzeOptions& opt) {
    if (f.is_zero()) throw std::invalid_argument("analyze: zero polynomial");
    HigmanReport rep;
    rep.input = f;
    rep.irr = irr_count(f);
    if (f.constant_term() == 0 || f.evaluate(1) == 0) {
        rep.status = HigmanStatus::degenerate;
        return rep;
    }

    Poly g = f;
    int steps = 0;
    while (true) {
        if (g.is_constant()) {
            rep.status = HigmanStatus::solvable;
            rep.terminal_constant = g.coeff(0);
            rep.len = steps;
            break;
        }
        LevelCore lc = level_core(g);
        const Poly& fstar = lc.cds.gcd_product;
        if (fstar == g || fstar == -g) {
            rep.status = HigmanStatus::fixed_point;
            break;
        }
        if (opt.with_invariants) {
            LevelInvariants lv;
            lv.f = g;
            lv.norm = lc.defl.exponent;
            lv.fbar = lc.defl.fbar;
            lv.fstar = fstar;
            lv.lc = g.lc();
            lv.f_at_1 = g.evaluate(1);
            lv.rho1 = rho1_core(lv.fbar, fstar).value;
            lv.rho2 = rho2_core(lv.fbar, fstar);
            lv.fstar2 = fstar2_core(fstar);
            lv.rho3 = rho3_core(lv.fbar, lv.fstar2, &lv.u);
            lv.disc = disc_radical(g);
            lv.prodant = prodant(g, opt.prodant_pairs);
            lv.level_factor = lv.f_at_1 * lv.lc * lv.rho1 * lv.rho2 * lv.rho3 * lv.disc * lv.prodant;
            if (lv.level_factor == 0) throw std::logic_error("analyze: vanishing level factor");
            rep.levels.push_back(std::move(lv));
        }
        ++steps;
        g = fstar;
    }

    if (rep.status == HigmanStatus::solvable && opt.with_invariants) {
        Int inv = rep.terminal_constant;
        std::map<Int, int> primes;
        auto absorb = [&primes](const Int& v) {
            for (auto& [p, e] : factorize(v)) primes[p] += e;
        };
        absorb(rep.terminal_constant);
        for (const LevelInvariants& lv : rep.levels) {
            inv *= lv.level_factor;
            absorb(lv.f_at_1);
            absorb(lv.lc);
            absorb(lv.rho1);
            absorb(lv.rho2);
            absorb(lv.rho3);
            absorb(lv.disc);
            absorb(lv.prodant);
        }
        rep.inv = inv;
        rep.inv_factorization.assign(primes.begin(), primes.end());
    }
    return rep;
}

Int inv_of(const Poly& f, ProdantPairs pairs) {
    AnalyzeOptions opt;
    opt.prodant_pairs = pairs;
    HigmanReport rep = analyze(f, opt);
    if (rep.status != HigmanStatus::solvable)
        throw std::invalid_argument("inv: input is not Higman-solvable");
    return rep.inv;
}

Poly certificate_poly(const Poly& a, int bound) {
    if (a.is_zero() || a.is_constant())
        throw std::invalid_argument("certificate_poly: nonconstant input required");
    if (a.lc() != 1) throw std::invalid_argument("certificate_poly: monic input required");
    if (bound < 1) throw std::invalid_argument("certificate_poly: bound must be >= 1");
    Poly r = Poly::monomial(1, 2) - Poly::x();  // x(x-1)
    r = r * compose_mul(a, a);
    for (int i = 1; i <= bound; ++i) r = r * compose_pow(a, i);
    return r;
}

BezoutResult resultant_bezout(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant_bezout: zero input");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) throw std::invalid_argument("resultant_bezout: both arguments constant");
    Int res = resultant(f, g);
    if (n == 0)
        return {res, Poly(), Poly(pow_int(g.lc(), static_cast<unsigned long>(m - 1)))};
    if (m == 0)
        return {res, Poly(pow_int(f.lc(), static_cast<unsigned long>(n - 1))), Poly()};

    size_t dim = static_cast<size_t>(m + n);
    IntMatrix mat(dim, dim);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= m; ++i) mat.at(static_cast<size_t>(i + j), static_cast<size_t>(j)) = f.coeff(i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= n; ++i)
            mat.at(static_cast<size_t>(i + j), static_cast<size_t>(n + j)) = g.coeff(i);
    std::vector<Int> rhs(dim, Int(0));
    rhs[0] = res;
    auto sol = solve_square_integer(mat, rhs);
    if (!sol) throw std::logic_error("resultant_bezout: Sylvester system has no integer solution");
    std::vector<Int> sc(sol->begin(), sol->begin() + n);
    std::vector<Int> tc(sol->begin() + n, sol->end());
    return {res, Poly(std::move(sc)), Poly(std::move(tc))};
}

MembershipCertificate rho2_certificate(const Poly& f, int k) {
    if (k < 1) throw std::invalid_argument("rho2_certificate: k must be >= 1");
    require_analyzable(f, "rho2_certificate");
    LevelCore lc = level_core(f);
    const Poly& fbar = lc.defl.fbar;
    const Poly& fstar = lc.cds.gcd_product;

    if (fstar.is_constant()) {
        Int c = fstar.coeff(0);
        return {pow_int(c, static_cast<unsigned long>(k)), Poly(c), Poly()};
    }
    Poly q = divide_exact(fbar, fstar);
    if (q.is_constant()) {
        Int e = q.coeff(0);
        return {pow_int(e, static_cast<unsigned long>(k)), Poly(),
                Poly(pow_int(e, static_cast<unsigned long>(k - 1)))};
    }
    BezoutResult bez = resultant_bezout(fstar, q);  // s*fstar + t*q == rho2
    Poly a = poly_pow(bez.s, k) * fstar;
    Poly b;
    for (int j = 0; j < k; ++j)
        b += Poly(binomial(k, j)) * poly_pow(bez.s, j) * poly_pow(fstar, j) *
             poly_pow(bez.t, k - j) * poly_pow(q, k - j - 1);
    return {pow_int(bez.res, static_cast<unsigned long>(k)), a, b};
}

MembershipCertificate rho3_certificate(const Poly& f, int k) {
    if (k < 1) throw std::invalid_argument("rho3_certificate: k must be >= 1");
    require_analyzable(f, "rho3_certificate");
    LevelCore lc = level_core(f);
    const Poly& fbar = lc.defl.fbar;
    const Poly& fstar = lc.cds.gcd_product;
    Poly f2 = fstar2_core(fstar);
    Poly u = poly_gcd(f2, fbar);
    Poly w = divide_exact(fstar, u);
    Poly q1 = divide_exact(fbar, u);
    if (q1.is_constant()) {
        Int e = q1.coeff(0);
        Poly b = Poly(pow_int(e, static_cast<unsigned long>(k - 1))) *
                 poly_pow(u, k - 1) * poly_pow(w, k);
        return {pow_int(e, static_cast<unsigned long>(k)), Poly(), b};
    }
    Poly q2 = divide_exact(f2, u);
    if (q2.is_constant()) {
        Int e = q2.coeff(0);
        return {pow_int(e, static_cast<unsigned long>(k)), poly_pow(w, k), Poly()};
    }
    BezoutResult bez = resultant_bezout(q2, q1);  // s*q2 + t*q1 == rho3
    Poly a = poly_pow(bez.s, k) * poly_pow(w, k);
    Poly b;
    for (int j = 0; j < k; ++j)
        b += Poly(binomial(k, j)) * poly_pow(bez.s, j) * poly_pow(q2, j) *
             poly_pow(bez.t, k - j) * poly_pow(q1, k - j - 1) * poly_pow(u, k - 1) * poly_pow(w, k);
    return {pow_int(bez.res, static_cast<unsigned long>(k)), a, b};
}

}  // namespace polyinv
