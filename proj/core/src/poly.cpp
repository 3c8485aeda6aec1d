#include "polyinv/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyinv {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Int c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c_.back() = std::move(c);
    return p;
}

const Int& Poly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return zero;
    return c_[static_cast<size_t>(i)];
}

const Int& Poly::lc() const {
    if (c_.empty()) throw std::invalid_argument("lc: zero polynomial");
    return c_.back();
}

Int Poly::evaluate(const Int& a) const {
    Int acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= a;
        acc += c_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Int> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shifted: negative exponent");
    if (is_zero() || k == 0) return *this;
    std::vector<Int> d(c_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(d));
}

Int Poly::content() const {
    Int g(0);
    for (const Int& c : c_) {
        g = polyinv::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) throw std::invalid_argument("primitive_part: zero polynomial");
    Int denom = content();
    if (sign() < 0) denom = -denom;
    std::vector<Int> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = divexact(c_[i], denom);
    return Poly(std::move(d));
}

Poly Poly::inflate(int n) const {
    if (n < 1) throw std::invalid_argument("inflate: n must be >= 1");
    if (is_zero() || n == 1) return *this;
    std::vector<Int> d((c_.size() - 1) * static_cast<size_t>(n) + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i * static_cast<size_t>(n)] = c_[i];
    return Poly(std::move(d));
}

PolyDeflation Poly::deflate() const {
    if (is_zero()) throw std::invalid_argument("deflate: zero polynomial");
    if (is_constant()) return {0, *this};
    size_t g = 0;
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) g = std::gcd(g, i);
        if (g == 1) break;
    }
    // g >= 1 since the top coefficient is nonzero
    std::vector<Int> d(c_.size() / g + 1);
    for (size_t i = 0; i * g < c_.size(); ++i) d[i] = c_[i * g];
    return {static_cast<int>(g), Poly(std::move(d))};
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (Int& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a);
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r(a);
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> d(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
}

Poly operator*(const Int& s, const Poly& a) {
    if (s == 0) return Poly();
    Poly r(a);
    for (Int& c : r.c_) c *= s;
    return r;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t i = 0; i < a.c_.size(); ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sign_of(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign_of(c) < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

ContentDecomposition content_primitive(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero has no content decomposition");
    ContentDecomposition r;
    r.content = f.content();
    r.sign = f.sign();
    r.pp = f.primitive_part();
    return r;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    const Int& lb = b.lc();
    Poly r = pow_int(lb, static_cast<unsigned long>(da - db + 1)) * a;
    while (!r.is_zero() && r.degree() >= db) {
        Int q = divexact(r.lc(), lb);
        r -= Poly::monomial(std::move(q), r.degree() - db) * b;
    }
    return r;
}

std::optional<Poly> try_divide(const Poly& f, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("try_divide: division by zero");
    if (f.is_zero()) return Poly();
    if (f.degree() < d.degree()) return std::nullopt;
    Poly r = f;
    std::vector<Int> q(static_cast<size_t>(f.degree() - d.degree()) + 1, Int(0));
    const Int& ld = d.lc();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Int qq = r.lc() / ld;
        if (qq * ld != r.lc()) return std::nullopt;
        int k = r.degree() - d.degree();
        q[static_cast<size_t>(k)] = qq;
        r -= Poly::monomial(std::move(qq), k) * d;
    }
    if (!r.is_zero()) return std::nullopt;
    return Poly(std::move(q));
}

bool divides(const Poly& d, const Poly& f) { return try_divide(f, d).has_value(); }

Poly divide_exact(const Poly& f, const Poly& d) {
    auto q = try_divide(f, d);
    if (!q) throw std::invalid_argument("divide_exact: not an exact division");
    return *q;
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.sign() < 0 ? -g : g;
    if (g.is_zero()) return f.sign() < 0 ? -f : f;

    Int cont = polyinv::gcd(f.content(), g.content());
    Poly a = f.primitive_part();
    Poly b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);

    // Subresultant PRS on the primitive parts.
    Int h(1), gg(1);
    while (true) {
        int delta = a.degree() - b.degree();
        Poly r = pseudo_rem(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) {
            b = Poly(Int(1));
            break;
        }
        Int div = gg * pow_int(h, static_cast<unsigned long>(delta));
        a = std::move(b);
        std::vector<Int> coeffs(r.coeffs());
        for (Int& c : coeffs) c = divexact(c, div);
        b = Poly(std::move(coeffs));
        gg = a.lc();
        if (delta >= 1) {
            // h = g^delta * h^(1-delta)
            h = divexact(pow_int(gg, static_cast<unsigned long>(delta)),
                         pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
    }
    return cont * b.primitive_part();
}

Int resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (f.degree() == 0) return pow_int(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return pow_int(g.lc(), static_cast<unsigned long>(f.degree()));

    Poly a = f, b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    auto ca = content_primitive(a);
    auto cb = content_primitive(b);
    // Res(f, g) = cont(f)^deg g * cont(g)^deg f * Res(pp f, pp g); track signs too.
    Int scale = pow_int(ca.content * ca.sign, static_cast<unsigned long>(b.degree())) *
                pow_int(cb.content * cb.sign, static_cast<unsigned long>(a.degree()));
    a = ca.pp;
    b = cb.pp;

    Int h(1), gg(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Poly r = pseudo_rem(a, b);
        if (r.is_zero()) {
            if (db > 0) return Int(0);  // common factor of positive degree
            // db == 0 handled below; unreachable since prem by a constant is zero
            // only when a is zero.
        }
        a = std::move(b);
        Int div = gg * pow_int(h, static_cast<unsigned long>(delta));
        std::vector<Int> coeffs(r.coeffs());
        for (Int& c : coeffs) c = divexact(c, div);
        b = Poly(std::move(coeffs));
        if (b.is_zero()) return Int(0);
        gg = a.lc();
        if (delta >= 1) {
            h = divexact(pow_int(gg, static_cast<unsigned long>(delta)),
                         pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) {
            // final correction: h <- lc(b)^deg(a) / h^(deg(a) - 1)
            int da2 = a.degree();
            Int num = pow_int(b.lc(), static_cast<unsigned long>(da2));
            Int den = pow_int(h, static_cast<unsigned long>(da2 - 1));
            return Int(s) * scale * divexact(num, den);
        }
    }
}

Int discriminant(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    Int r = resultant(f, f.derivative());
    if (r == 0) throw std::invalid_argument("discriminant of radical only");
    int d = f.degree();
    int s = ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    return Int(s) * divexact(r, f.lc());
}

}  // namespace polyinv
