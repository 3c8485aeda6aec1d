#ifndef POLYINV_FACTOR_HPP
#define POLYINV_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polyinv/poly.hpp"

namespace polyinv {

// sign * content * prod(poly^multiplicity) == the factored input.
// Factors are primitive irreducible with positive leading coefficient,
// pairwise distinct, sorted by degree then by coefficients.
struct Factorization {
    int sign = 1;
    Int content = 1;
    struct Term {
        Poly poly;
        int multiplicity;
    };
    std::vector<Term> factors;

    Poly recompose() const;
};

// Yun decomposition of the primitive part: pairwise coprime squarefree parts
// with their multiplicities, product == pp(f).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Complete irreducible factorization over Z (squarefree split, Berlekamp mod
// a small prime, Hensel lifting past twice the coefficient bound, subset
// recombination smallest-first).
Factorization factor(const Poly& f);

// Number of irreducible factors of positive degree, with multiplicity.
int irr_count(const Poly& f);

// The m with q == Phi_m, when the (irreducible, primitive, monic) input is
// cyclotomic. Non-monic inputs return nullopt.
std::optional<int> cyclotomic_index(const Poly& q);

// f lies in Z[x^n] for some n >= 2; constants count as powerful.
bool is_powerful(const Poly& f);

// Product of the distinct irreducible factors of pp(f), positive leading
// coefficient. Constants map to 1.
Poly radical(const Poly& f);

// The m-th cyclotomic polynomial.
Poly cyclotomic(int m);

}  // namespace polyinv

#endif
