#ifndef POLYINV_HIGMAN_HPP
#define POLYINV_HIGMAN_HPP

#include <set>
#include <utility>
#include <vector>

#include "polyinv/factor.hpp"
#include "polyinv/poly.hpp"

namespace polyinv {

// Partial sums of fbar along residue classes mod n: entry i collects the
// monomials with exponent == i (mod n). Requires fbar nonconstant, n >= 2.
std::vector<Poly> partial_sums(const Poly& fbar, int n);

// gcd of the nonzero partial sums.
Poly fbar_n(const Poly& fbar, int n);

// Indices of the irreducible factors appearing in at least one powerful
// divisor (constants excluded; support membership suffices because closed
// divisors carry full multiplicity).
std::set<size_t> powerful_support(const Factorization& fac);

struct ClosedDivisorSet {
    Factorization base;              // factorization of fbar
    std::set<size_t> forced_support; // factor indices forced by powerful divisors
    struct Subset {
        std::vector<size_t> indices;
        Poly product;                // content(fbar) * prod of the factors
    };
    std::vector<Subset> closed_subsets;
    Poly gcd_product;                // f_*, positive leading coefficient
};

// All closed divisors of fbar, as subsets of its distinct irreducible factors
// taken with full multiplicity. Requires fbar != 0 and fbar(0) != 0.
ClosedDivisorSet closed_divisors(const Poly& fbar);

// Delta(f): deflate, then the gcd of all closed divisors of the deflation.
// Constants map to themselves; otherwise f(0) != 0 is required.
Poly delta(const Poly& f);

enum class HigmanStatus { solvable, fixed_point, degenerate };

enum class ProdantPairs { all, distinct };

struct LevelInvariants {
    Poly f;
    int norm;          // ||f||
    Poly fbar, fstar;
    Int rho1, rho2, rho3;
    Poly fstar2, u;
    Int disc, prodant;
    Int lc, f_at_1;
    Int level_factor;  // f(1) * lc * rho1 * rho2 * rho3 * disc * prodant
};

struct HigmanReport {
    Poly input;
    HigmanStatus status = HigmanStatus::degenerate;
    std::vector<LevelInvariants> levels;  // one per nonconstant Delta-iterate
    int len = -1;                         // defined when solvable
    int irr = 0;
    Int terminal_constant = 0;            // Delta^len(f), when solvable
    Int inv = 0;                          // defined when solvable
    std::vector<std::pair<Int, int>> inv_factorization;  // primes of |inv|
};

struct AnalyzeOptions {
    bool with_invariants = true;  // false: only the Delta-chain and status/len
    ProdantPairs prodant_pairs = ProdantPairs::all;
};

// Iterate Delta, recording the invariant tower. Status degenerate when
// f(0)f(1) == 0, fixed_point when Delta(g) is an associate of a nonconstant
// g, solvable when the chain reaches a constant.
HigmanReport analyze(const Poly& f, const AnalyzeOptions& opt = {});

// Minimal rho >= 1 with rho*fstar inside every partial-sum ideal, together
// with explicit cofactors certifying each per-n multiplier.
struct Rho1Witness {
    int n;
    std::vector<Poly> sums;       // the nonzero partial sums
    std::vector<Poly> cofactors;  // sum_i cofactor[i]*sums[i] == r_n * fstar
    Int r_n;
};
struct Rho1Result {
    Int value;
    std::vector<Rho1Witness> witnesses;
};
Rho1Result rho1_with_witness(const Poly& f);
Int rho1(const Poly& f);

// Three-branch resultant invariants. Both require f nonconstant, f(0) != 0.
Int rho2(const Poly& f);
Int rho3(const Poly& f);

// Composed square of f_*; f_* itself when constant.
Poly fstar2(const Poly& f);

// Classical discriminant of the radical of f. Requires f nonconstant.
Int disc_radical(const Poly& f);

// Product of rad(f) evaluated at the nonvanishing pairwise root products of
// rad(f); ordered pairs include the diagonal by default. Computed as
// Res(F2', rad) where F2' is the composed square with the factors shared
// with rad divided out. Requires f nonconstant with f(0)f(1) != 0.
Int prodant(const Poly& f, ProdantPairs pairs = ProdantPairs::all);

// The recursive invariant: product over the Delta-chain of
// f(1)*lc*rho1*rho2*rho3*disc*prodant, times the terminal constant.
// Errors unless f is Higman-solvable.
Int inv_of(const Poly& f, ProdantPairs pairs = ProdantPairs::all);

// x*(x-1)*compose_mul(a,a)*prod_i inflate(compose_pow_pre(a,i), i) for
// i = 1..bound; a coprime test against it certifies that a*b stays
// Higman-solvable for irreducible indecomposable b of bounded degree.
// Requires a monic and nonconstant.
Poly certificate_poly(const Poly& a, int bound);

// Cofactor certificates for the ideal-membership identities
//   rho2(f)^k * fstar == a*fstar^k  + b*fbar
//   rho3(f)^k * fstar^k == a*fstar2^k + b*fbar
struct MembershipCertificate {
    Int rho_power;  // rho^k
    Poly a, b;
};
MembershipCertificate rho2_certificate(const Poly& f, int k);
MembershipCertificate rho3_certificate(const Poly& f, int k);

// s*f + t*g == Res(f, g), by an exact integer solve on the Sylvester system.
struct BezoutResult {
    Int res;
    Poly s, t;
};
BezoutResult resultant_bezout(const Poly& f, const Poly& g);

}  // namespace polyinv

#endif
