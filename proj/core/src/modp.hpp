#ifndef POLYINV_MODP_HPP
#define POLYINV_MODP_HPP

#include <cstdint>
#include <vector>

#include "polyinv/poly.hpp"

// Internal F_p[x] arithmetic for the factorization pipeline. Coefficients are
// reduced residues in [0, p) with p an odd prime below 2^31.
namespace polyinv::modp {

using FpPoly = std::vector<uint64_t>;  // FpPoly[i] = coefficient of x^i

void trim(FpPoly& a);
int degree(const FpPoly& a);
FpPoly from_int_poly(const Poly& f, uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly add(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly scale(const FpPoly& a, uint64_t s, uint64_t p);
// division by a monic divisor
void divmod_monic(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& q, FpPoly& r);
FpPoly make_monic(const FpPoly& a, uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, uint64_t p);
FpPoly derivative(const FpPoly& a, uint64_t p);
FpPoly powmod_x(uint64_t e, const FpPoly& mod, uint64_t p);  // x^e mod `mod`
uint64_t inv_mod(uint64_t a, uint64_t p);

bool is_squarefree(const FpPoly& a, uint64_t p);

// Berlekamp factorization of a monic squarefree polynomial mod p.
// Deterministic: null-space basis vectors and field elements are scanned in a
// fixed order.
std::vector<FpPoly> berlekamp(const FpPoly& f, uint64_t p);

// Extended Euclid in F_p[x]: returns (g, s, t) with s*a + t*b = g, g monic.
struct FpBezout {
    FpPoly g, s, t;
};
FpBezout ext_gcd(const FpPoly& a, const FpPoly& b, uint64_t p);

}  // namespace polyinv::modp

#endif
