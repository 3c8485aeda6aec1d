#include "polyinv/intfactor.hpp"

#include <map>
#include <stdexcept>

namespace polyinv {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> ps;
        std::vector<bool> sieve(10000, true);
        for (unsigned long i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

Int pollard_brent(const Int& n) {
    // Brent's cycle variant of Pollard rho with a fixed deterministic schedule.
    for (unsigned long c = 1; c < 64; ++c) {
        Int x(2), y(2), d(1);
        Int q(1);
        unsigned long m = 128;
        Int ys = y;
        unsigned long r = 1;
        auto step = [&](Int& v) { v = (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
            if (r > (1ul << 24)) break;  // give up on this c
        }
        if (d == n) {
            // backtrack
            d = 1;
            do {
                step(ys);
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != 1 && d != n) return d;
    }
    throw std::runtime_error("factorize: Pollard-Brent exhausted its schedule");
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(divexact(n, d), out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Int m = abs(n);
    std::map<Int, int> acc;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[Int(p)];
            m = divexact(m, Int(p));
        }
    }
    if (m > 1) factor_rec(m, acc);
    return {acc.begin(), acc.end()};
}

}  // namespace polyinv
