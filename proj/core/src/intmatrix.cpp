#include "polyinv/intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace polyinv {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: square matrices only");
    size_t n = a.rows();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a.at(i, j) = divexact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return Int(sign) * a.at(n - 1, n - 1);
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
    HermiteResult res{a, IntMatrix::identity(a.cols())};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    if (a.cols() == 0) return res;

    auto add_col = [&](size_t dst, size_t src, const Int& q) {
        // col_dst -= q * col_src
        for (size_t i = 0; i < h.rows(); ++i) h.at(i, dst) -= q * h.at(i, src);
        for (size_t i = 0; i < u.rows(); ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto negate_col = [&](size_t c) {
        for (size_t i = 0; i < h.rows(); ++i) h.at(i, c) = -h.at(i, c);
        for (size_t i = 0; i < u.rows(); ++i) u.at(i, c) = -u.at(i, c);
    };
    auto swap_col = [&](size_t x, size_t y) {
        h.swap_cols(x, y);
        u.swap_cols(x, y);
    };

    size_t pivot_col = a.cols();  // one past the rightmost unassigned column
    for (size_t row = a.rows(); row-- > 0 && pivot_col > 0;) {
        size_t pc = pivot_col - 1;
        // gcd out the entries of this row among columns [0, pc]
        while (true) {
            size_t best = pc + 1;
            for (size_t j = 0; j <= pc; ++j)
                if (h.at(row, j) != 0 && (best > pc || cmp(abs(h.at(row, j)), abs(h.at(row, best))) < 0))
                    best = j;
            if (best > pc) break;  // all zero, or only the pivot remains
            swap_col(best, pc);
            bool cleared = true;
            for (size_t j = 0; j < pc; ++j) {
                if (h.at(row, j) == 0) continue;
                Int q, r;
                fdiv_qr(q, r, h.at(row, j), h.at(row, pc));
                add_col(j, pc, q);
                if (h.at(row, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(row, pc) == 0) continue;  // row has no pivot, column stays free
        if (h.at(row, pc) < 0) negate_col(pc);
        // reduce the already-assigned columns at this row into [0, pivot)
        for (size_t j = pc + 1; j < a.cols(); ++j) {
            Int q, r;
            fdiv_qr(q, r, h.at(row, j), h.at(row, pc));
            if (q != 0) add_col(j, pc, q);
        }
        pivot_col = pc;
    }
    return res;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    SmithResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    IntMatrix& s = res.s;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    size_t n = std::min(a.rows(), a.cols());

    auto row_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t j = 0; j < s.cols(); ++j) s.at(dst, j) -= q * s.at(src, j);
        for (size_t j = 0; j < u.cols(); ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < s.rows(); ++i) s.at(i, dst) -= q * s.at(i, src);
        for (size_t i = 0; i < v.rows(); ++i) v.at(i, dst) -= q * v.at(i, src);
    };

    for (size_t t = 0; t < n; ++t) {
        // locate the smallest nonzero entry in the trailing block
        size_t pi = s.rows(), pj = s.cols();
        for (size_t i = t; i < s.rows(); ++i)
            for (size_t j = t; j < s.cols(); ++j)
                if (s.at(i, j) != 0 &&
                    (pi == s.rows() || cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == s.rows()) break;  // trailing block is zero
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        while (true) {
            bool dirty = false;
            for (size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q, r;
                fdiv_qr(q, r, s.at(i, t), s.at(t, t));
                row_sub(i, t, q);
                if (s.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q, r;
                fdiv_qr(q, r, s.at(t, j), s.at(t, t));
                col_sub(j, t, q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // pivot row and column are clear; enforce divisibility on the block
            bool fixed = true;
            for (size_t i = t + 1; i < s.rows() && fixed; ++i)
                for (size_t j = t + 1; j < s.cols() && fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_sub(t, i, Int(-1));  // pull the offending row in
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.at(t, t) < 0) {
            for (size_t j = 0; j < s.cols(); ++j) s.at(t, j) = -s.at(t, j);
            for (size_t j = 0; j < u.cols(); ++j) u.at(t, j) = -u.at(t, j);
        }
    }
    return res;
}

Int minimal_multiplier(const IntMatrix& a, const std::vector<Int>& v) {
    if (v.size() != a.rows()) throw std::invalid_argument("minimal_multiplier: shape mismatch");
    SmithResult sm = smith_normal_form(a);
    std::vector<Int> w = sm.u * v;
    size_t n = std::min(a.rows(), a.cols());
    Int r(1);
    for (size_t i = 0; i < a.rows(); ++i) {
        const Int& d = (i < n) ? sm.s.at(i, i) : Int(0);
        if (d == 0) {
            if (w[i] != 0) throw std::invalid_argument("infeasible: raise degree bound");
            continue;
        }
        r = lcm(r, divexact(d, gcd(d, w[i])));
    }
    return r;
}

std::optional<std::vector<Int>> solve_square_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve_square_integer: shape mismatch");
    size_t n = a.rows();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
        m[i][n] = b[i];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;  // singular
        std::swap(m[col], m[piv]);
        mpq_class inv = 1 / m[col][col];
        for (size_t j = col; j <= n; ++j) m[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            mpq_class c = m[i][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= c * m[col][j];
        }
    }
    std::vector<Int> x(n);
    for (size_t i = 0; i < n; ++i) {
        if (m[i][n].get_den() != 1) return std::nullopt;
        x[i] = m[i][n].get_num();
    }
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
    SmithResult sm = smith_normal_form(a);
    std::vector<Int> w = sm.u * b;
    size_t n = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols(), Int(0));
    for (size_t i = 0; i < a.rows(); ++i) {
        const Int& d = (i < n) ? sm.s.at(i, i) : Int(0);
        if (d == 0) {
            if (w[i] != 0) return std::nullopt;
            continue;
        }
        if (w[i] % d != 0) return std::nullopt;
        y[i] = w[i] / d;
    }
    return sm.v * y;
}

}  // namespace polyinv
