#ifndef POLYINV_GROUP_HPP
#define POLYINV_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyinv/higman.hpp"
#include "polyinv/intmatrix.hpp"
#include "polyinv/poly.hpp"

namespace polyinv {

// Finite group as an explicit Cayley table. The group axioms are verified at
// construction: full associativity check up to order 512, randomized triples
// above (fixed seed). Default order cap 5000.
class FiniteGroup {
 public:
    static constexpr size_t kDefaultOrderCap = 5000;
    static constexpr size_t kFullCheckLimit = 512;

    FiniteGroup(std::vector<uint32_t> table, size_t order,
                std::vector<std::string> labels = {}, size_t order_cap = kDefaultOrderCap);

    size_t order() const { return order_; }
    uint32_t identity() const { return identity_; }
    uint32_t mul(uint32_t a, uint32_t b) const { return table_[a * order_ + b]; }
    uint32_t inverse(uint32_t a) const { return inverses_[a]; }
    uint32_t power(uint32_t a, const Int& e) const;
    size_t element_order(uint32_t a) const;
    const std::vector<std::string>& labels() const { return labels_; }

 private:
    size_t order_;
    std::vector<uint32_t> table_;
    uint32_t identity_;
    std::vector<uint32_t> inverses_;
    std::vector<std::string> labels_;
};

// Automorphism given as an index permutation; bijectivity and
// multiplicativity verified at construction (full check up to 512, sampled
// above), order computed from the cycle structure.
class Automorphism {
 public:
    Automorphism(const FiniteGroup& g, std::vector<uint32_t> map);

    uint32_t operator()(uint32_t a) const { return map_[a]; }
    const std::vector<uint32_t>& map() const { return map_; }
    size_t order() const { return order_; }

    Automorphism power(const FiniteGroup& g, size_t k) const;

 private:
    std::vector<uint32_t> map_;
    size_t order_;
};

struct Subgroup {
    std::vector<uint32_t> elements;  // sorted
    size_t order() const { return elements.size(); }
    bool contains(uint32_t a) const;
    bool is_trivial() const { return elements.size() == 1; }
};

// Construction -------------------------------------------------------------

struct GroupWithAut {
    FiniteGroup group;
    Automorphism aut;
};

// (Z/p)^d under addition with the automorphism v -> M v (mod p).
// M must be invertible mod p and p^d must respect the order cap.
GroupWithAut build_elementary_abelian(long p, const IntMatrix& m,
                                      size_t order_cap = FiniteGroup::kDefaultOrderCap);

// (Z/p)^d semidirect <M> where M has exact multiplicative order mod_order
// mod p: (v, M^k)(w, M^l) = (v + M^k w, M^(k+l)).
FiniteGroup build_semidirect(long p, int d, const IntMatrix& m, int mod_order,
                             size_t order_cap = FiniteGroup::kDefaultOrderCap);

// Z/n with the multiplication-by-a map (gcd(a, n) = 1).
GroupWithAut build_cyclic(long n, long a, size_t order_cap = FiniteGroup::kDefaultOrderCap);

// Companion matrix of a monic polynomial.
IntMatrix companion_matrix(const Poly& f);

// Semidirect-product automorphism (v, k) -> (c v, k); c must commute with
// the twist, which scalars do.
Automorphism semidirect_scalar_aut(const FiniteGroup& g, long p, int d, int mod_order, long c);

// Predicates and series ------------------------------------------------------

bool is_fixed_point_free(const FiniteGroup& g, const Automorphism& a);

// g -> g^(-1) alpha(g) is a bijection; coincides with fixed-point-freeness.
bool twist_is_bijective(const FiniteGroup& g, const Automorphism& a);

// prod_i alpha^i(g)^(c_i) == 1 for every g, factors in index order.
bool ordered_identity_holds(const FiniteGroup& g, const Automorphism& a, const Poly& f);

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<uint32_t>& gens);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
int derived_length(const FiniteGroup& g);

// Stable term of the lower central series; for solvable groups this is the
// smallest normal subgroup with nilpotent quotient. The quotient is verified
// nilpotent. Errors on non-solvable input.
Subgroup nilpotent_residual(const FiniteGroup& g);

struct FittingData {
    int height;
    std::vector<size_t> series_orders;  // orders of the successive residuals
};
FittingData fitting_height(const FiniteGroup& g);

// Quotients / sections -------------------------------------------------------

bool is_normal(const FiniteGroup& g, const Subgroup& n);

struct QuotientGroup {
    FiniteGroup group;
    std::vector<uint32_t> coset_of;  // element index -> quotient index
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

struct SubgroupGroup {
    FiniteGroup group;
    std::vector<uint32_t> elements;  // new index -> old index
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

// Main-theorem verification ---------------------------------------------------

struct VerificationVerdict {
    bool identity_holds = false;
    bool fixed_point_free = false;
    bool higman_solvable = false;
    bool coprime = false;  // gcd(|G|, inv(f)) == 1
    bool hypotheses_ok = false;

    int fitting_height = -1;
    int irr = -1;
    int len = -1;
    bool height_le_irr = false;
    bool height_le_len = false;

    // Delta(f) as an ordered identity of alpha^||f|| on the abelianization of
    // the nilpotent residual; partial stand-in for the abelian-identity step.
    bool residual_step_checked = false;
    bool residual_step_holds = false;

    enum class Outcome { pass, hypothesis_violated, conclusion_violated };
    Outcome outcome = Outcome::hypothesis_violated;
    std::string detail;
};

VerificationVerdict verify_theorem_main(const FiniteGroup& g, const Automorphism& a, const Poly& f);

}  // namespace polyinv

#endif
