#ifndef POLYINV_COMPOSE_HPP
#define POLYINV_COMPOSE_HPP

#include "polyinv/poly.hpp"

namespace polyinv {

// Polynomial whose root multiset is {lambda*mu : f(lambda)=0, g(mu)=0}, with
// multiplicity, returned primitive with positive leading coefficient.
// Computed through Newton power sums (the power sums of the product
// polynomial are the products of the power sums). Preconditions: f, g
// nonconstant with nonzero constant terms.
Poly compose_mul(const Poly& f, const Poly& g);

// Root multiset {lambda^i : f(lambda)=0}, primitive, degree deg f.
Poly compose_pow_pre(const Poly& f, int i);

// inflate(compose_pow_pre(f, i), i): root multiset {omega*lambda : omega^i=1}.
Poly compose_pow(const Poly& f, int i);

}  // namespace polyinv

#endif
