#ifndef POLYINV_INT_HPP
#define POLYINV_INT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polyinv {

// Arbitrary-precision integer. All arithmetic in this library is exact.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline int sign_of(const Int& a) { return sgn(a); }

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

// Floor division and remainder (remainder has the divisor's sign range [0, |d|)).
inline void fdiv_qr(Int& q, Int& r, const Int& n, const Int& d) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

// Exact division; the caller guarantees d | n.
inline Int divexact(const Int& n, const Int& d) {
    Int r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace polyinv

#endif
