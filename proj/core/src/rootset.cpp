#include "polyinv/rootset.hpp"

#include <stdexcept>

#include "polyinv/compose.hpp"

namespace polyinv {

bool is_product_free(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("is_product_free: nonconstant input required");
    if (f.constant_term() == 0) throw std::invalid_argument("is_product_free: f(0) must be nonzero");
    Poly rad = radical(f);
    if (rad.degree() < 1) return true;
    return poly_gcd(compose_mul(rad, rad), rad).is_constant();
}

bool is_arithmetically_free(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_arithmetically_free: zero polynomial");
    if (f.is_constant()) return true;  // empty root set
    Poly rad = radical(f);
    // 0 as a root: {b, 0, 0, ...}; 1 as a root: {1, a} with b = 1
    if (rad.constant_term() == 0 || rad.evaluate(1) == 0) return false;

    Factorization fac = factor(rad);
    std::vector<int> orders;
    for (const auto& t : fac.factors)
        if (auto m = cyclotomic_index(t.poly)) orders.push_back(*m);
    if (orders.empty()) return true;  // every progression base has infinite order

    for (int m : orders) {
        Poly unity = Poly::monomial(1, m) - Poly(1);
        for (const auto& t : fac.factors) {
            // all products root-of-q times m-th root of unity
            Poly coset = compose_mul(t.poly, unity);
            if (divides(radical(coset), rad)) return false;
        }
    }
    return true;
}

Int nilpotency_bound(int size) {
    if (size < 0) throw std::invalid_argument("nilpotency_bound: negative size");
    if (size == 0) return Int(0);
    if (size > 16) throw std::invalid_argument("nilpotency_bound: size exceeds the report cap");
    return pow_int(Int(size), 1ul << static_cast<unsigned>(size));
}

RootSetReport rootset_report(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("rootset_report: nonconstant input required");
    RootSetReport rs;
    rs.radical = radical(f);
    for (const auto& t : factor(rs.radical).factors)
        if (auto m = cyclotomic_index(t.poly)) rs.cyclotomic_divisors.push_back({*m, t.poly});
    if (rs.radical.constant_term() == 0) {
        rs.product_free = false;  // 0*0 = 0 stays in the root set
    } else {
        rs.product_free = poly_gcd(compose_mul(rs.radical, rs.radical), rs.radical).is_constant();
    }
    rs.arithmetically_free = is_arithmetically_free(f);
    rs.h_bound = nilpotency_bound(rs.radical.degree());
    return rs;
}

TheoremBounds theorem_bounds(const HigmanReport& rep, const RootSetReport& rs) {
    if (rep.status != HigmanStatus::solvable)
        throw std::invalid_argument("theorem_bounds: report must be solvable");
    TheoremBounds b;
    b.len = rep.len;
    b.irr = rep.irr;
    b.deg = rep.input.degree();
    b.fitting_height_bound = rep.len;
    b.arithmetically_free = rs.arithmetically_free;
    b.product_free = rs.product_free;
    if (rep.len == 0) {
        b.derived_length_bound = Int(0);
    } else if (rs.arithmetically_free) {
        b.derived_length_bound = Int(rep.len) * (rs.product_free ? Int(1) : rs.h_bound);
    }
    return b;
}

}  // namespace polyinv
