#ifndef POLYINV_POLY_HPP
#define POLYINV_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyinv/int.hpp"

namespace polyinv {

struct PolyDeflation;

// Dense univariate polynomial over Z. coeff(i) holds the coefficient of x^i.
// The zero polynomial is stored as an empty vector and reports degree() == -1;
// every nonzero value keeps a nonzero top coefficient.
class Poly {
 public:
    Poly() = default;
    Poly(long c) : Poly(Int(c)) {}
    Poly(Int c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly x() { return monomial(1, 1); }
    static Poly monomial(Int c, int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const;
    const Int& lc() const;
    const Int& constant_term() const { return coeff(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    int sign() const { return c_.empty() ? 0 : sign_of(c_.back()); }

    Int evaluate(const Int& a) const;
    Poly derivative() const;
    Poly shifted(int k) const;  // multiplication by x^k

    Int content() const;         // nonnegative; 0 only for the zero polynomial
    Poly primitive_part() const; // positive leading coefficient

    Poly inflate(int n) const;      // f(x^n), n >= 1
    PolyDeflation deflate() const;  // error on the zero polynomial

    // Canonical text form, parseable by parse_poly: "x^6 - 2*x^4 + 10".
    std::string str() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Int& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical order used to sort factor lists: by degree, then by
    // coefficients from the constant term up.
    friend bool operator<(const Poly& a, const Poly& b);

 private:
    std::vector<Int> c_;
    void normalize();
};

struct PolyDeflation {
    int exponent;  // largest n with f in Z[x^n]; 0 for constants
    Poly fbar;     // inflate(fbar, exponent) == f (fbar == f for constants)
};

struct ContentDecomposition {
    Int content;  // positive
    int sign;     // +1 or -1
    Poly pp;      // primitive, positive leading coefficient
};

// f = sign * content * pp. Errors on the zero polynomial.
ContentDecomposition content_primitive(const Poly& f);

// gcd(content(f), content(g)) * gcd(pp f, pp g), positive leading coefficient.
// gcd(f, 0) = |f| normalized; gcd(0, 0) is an error. Subresultant PRS inside.
Poly poly_gcd(const Poly& f, const Poly& g);

bool divides(const Poly& d, const Poly& f);
std::optional<Poly> try_divide(const Poly& f, const Poly& d);
Poly divide_exact(const Poly& f, const Poly& d);  // throws when d does not divide f

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
Poly pseudo_rem(const Poly& a, const Poly& b);

// Sylvester resultant, computed by the subresultant remainder sequence.
// Errors when either argument is zero.
Int resultant(const Poly& f, const Poly& g);

// Classical discriminant (-1)^(d(d-1)/2) Res(f, f') / lc(f).
// Requires deg f >= 1 and squarefree input; callers pass the radical.
Int discriminant(const Poly& f);

}  // namespace polyinv

#endif
