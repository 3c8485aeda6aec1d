#ifndef POLYINV_ROOTSET_HPP
#define POLYINV_ROOTSET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyinv/higman.hpp"
#include "polyinv/poly.hpp"

namespace polyinv {

// No roots a, b (a == b allowed) with a*b again a root. Decided exactly by
// gcd(compose_mul(rad f, rad f), rad f) being constant.
// Requires f nonconstant with f(0) != 0.
bool is_product_free(const Poly& f);

// No subset {b, a, a*b, a*b^2, ...} of the root set, coincidences allowed.
// Exact decision: 0 or 1 as a root is an immediate failure; with no
// cyclotomic divisor the set is free; otherwise a progression exists exactly
// when some root's full coset under an m-th root-of-unity group stays inside
// the root set. Requires f != 0.
bool is_arithmetically_free(const Poly& f);

// size^(2^size); 0 for the empty set. Sizes above 16 exceed the report cap.
Int nilpotency_bound(int size);

struct RootSetReport {
    Poly radical;
    bool product_free = false;
    bool arithmetically_free = false;
    std::vector<std::pair<int, Poly>> cyclotomic_divisors;  // (m, Phi_m)
    Int h_bound = 0;  // |X|^(2^|X|), |X| = deg(radical)
};

RootSetReport rootset_report(const Poly& f);  // f nonconstant

struct TheoremBounds {
    int fitting_height_bound;  // len
    int len, irr, deg;
    bool arithmetically_free, product_free;
    std::optional<Int> derived_length_bound;  // len * H(X) when arithmetically free
};

// Requires rep.status == solvable.
TheoremBounds theorem_bounds(const HigmanReport& rep, const RootSetReport& rs);

}  // namespace polyinv

#endif
