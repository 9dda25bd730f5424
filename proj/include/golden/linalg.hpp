#pragma once

#include "golden/golden.hpp"

#include <optional>
#include <vector>

namespace golden {

inline std::string render_value(const Int &x) { return to_string(x); }
inline std::string render_value(const Rat &x) { return to_string(x); }
inline std::string render_value(const GoldenInt &x) { return x.str(); }
inline std::string render_value(const FieldElem &x) { return x.str(); }

namespace ring {

inline Int zero(const Int *) { return 0; }
inline Int one(const Int *) { return 1; }
inline bool is_zero(const Int &x) { return x == 0; }
inline Int exact_div(const Int &x, const Int &y) {
    Int q = x / y;
    if (q * y != x) throw std::domain_error("exact_div: inexact integer division");
    return q;
}

inline GoldenInt zero(const GoldenInt *) { return GoldenInt::zero(); }
inline GoldenInt one(const GoldenInt *) { return GoldenInt::one(); }
inline bool is_zero(const GoldenInt &x) { return x.is_zero(); }
inline GoldenInt exact_div(const GoldenInt &x, const GoldenInt &y) {
    auto q = x.divide_exact(y);
    if (!q) throw std::domain_error("exact_div: inexact division in Z[phi]");
    return *q;
}

inline FieldElem zero(const FieldElem *) { return FieldElem::zero(); }
inline FieldElem one(const FieldElem *) { return FieldElem::one(); }
inline bool is_zero(const FieldElem &x) { return x.is_zero(); }
inline FieldElem exact_div(const FieldElem &x, const FieldElem &y) { return x / y; }

inline Rat zero(const Rat *) { return Rat(0); }
inline Rat one(const Rat *) { return Rat(1); }
inline bool is_zero(const Rat &x) { return x == 0; }
inline Rat exact_div(const Rat &x, const Rat &y) { return x / y; }

} // namespace ring

/// Dense row-major matrix over an exact ring R (Int, GoldenInt or FieldElem).
template <typename R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, ring::zero(static_cast<R *>(nullptr))) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring::one(static_cast<R *>(nullptr));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const R &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix &o) const { return !(*this == o); }

    Matrix operator*(const Matrix &o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const R &x = at(i, k);
                if (ring::is_zero(x)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) += x * o.at(k, j);
            }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    std::vector<R> apply(const std::vector<R> &v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
        std::vector<R> out(rows_, ring::zero(static_cast<R *>(nullptr)));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }

    /// this <- this with row i replaced by row_i - q * row_j
    void row_submul(std::size_t i, std::size_t j, const R &q) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
    }
    void col_submul(std::size_t i, std::size_t j, const R &q) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, i) -= q * at(r, j);
    }

    Matrix minor_matrix(std::size_t row, std::size_t col) const {
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == col) continue;
                out.at(oi, oj) = at(i, j);
                ++oj;
            }
            ++oi;
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<R> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Valid over any
/// integral domain: the divisions by the previous pivot are exact.
template <typename R>
R det(const Matrix<R> &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    Matrix<R> a = m;
    R prev = ring::one(static_cast<R *>(nullptr));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && ring::is_zero(a.at(pivot, k))) ++pivot;
        if (pivot == n) return ring::zero(static_cast<R *>(nullptr));
        if (pivot != k) {
            a.swap_rows(pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = ring::exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = ring::zero(static_cast<R *>(nullptr));
        }
        prev = a.at(k, k);
    }
    R d = a.at(n - 1, n - 1);
    return negate ? -d : d;
}

/// Adjugate by cofactor expansion; M * adj(M) = det(M) * I exactly.
template <typename R>
Matrix<R> adjugate(const Matrix<R> &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: non-square matrix");
    std::size_t n = m.rows();
    Matrix<R> out(n, n);
    if (n == 1) {
        out.at(0, 0) = ring::one(static_cast<R *>(nullptr));
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R c = det(m.minor_matrix(i, j));
            out.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return out;
}

/// Result of inverting a matrix over Z[phi]: the inverse exists in the ring
/// iff the determinant is a unit; otherwise the determinant is reported.
struct RingInverse {
    bool ok = false;
    Matrix<GoldenInt> inverse;
    GoldenInt determinant;
};

inline RingInverse invert_over_ring(const Matrix<GoldenInt> &m) {
    RingInverse r;
    r.determinant = det(m);
    if (!r.determinant.is_unit()) return r;
    GoldenInt dinv = r.determinant.inverse();
    Matrix<GoldenInt> adj = adjugate(m);
    r.inverse = Matrix<GoldenInt>(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.inverse.at(i, j) = dinv * adj.at(i, j);
    r.ok = true;
    return r;
}

/// Gaussian elimination solve over the field K. Returns nothing if A is
/// singular.
inline std::optional<std::vector<FieldElem>> solve_over_field(const Matrix<FieldElem> &a,
                                                              const std::vector<FieldElem> &b) {
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw std::invalid_argument("solve_over_field: shape mismatch");
    std::size_t n = a.rows();
    Matrix<FieldElem> m = a;
    std::vector<FieldElem> rhs = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            std::swap(rhs[pivot], rhs[k]);
        }
        FieldElem inv = m.at(k, k).inverse();
        for (std::size_t j = k; j < n; ++j) m.at(k, j) = inv * m.at(k, j);
        rhs[k] = inv * rhs[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k).is_zero()) continue;
            FieldElem f = m.at(i, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    return rhs;
}

inline std::optional<Matrix<FieldElem>> invert_over_field(const Matrix<FieldElem> &a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert_over_field: non-square");
    std::size_t n = a.rows();
    Matrix<FieldElem> m = a;
    Matrix<FieldElem> inv = Matrix<FieldElem>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            inv.swap_rows(pivot, k);
        }
        FieldElem f = m.at(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(k, j) = f * m.at(k, j);
            inv.at(k, j) = f * inv.at(k, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k).is_zero()) continue;
            FieldElem g = m.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= g * m.at(k, j);
                inv.at(i, j) -= g * inv.at(k, j);
            }
        }
    }
    return inv;
}

/// Solve A x = b over Z[phi]: solves over the fraction field and reports
/// whether the solution has ring coordinates.
struct GoldenSolve {
    bool solvable = false;      // A nonsingular over K
    bool in_ring = false;       // all coordinates in Z[phi]
    std::vector<FieldElem> field_solution;
    std::vector<GoldenInt> ring_solution;
};

inline GoldenSolve solve_over_golden(const Matrix<FieldElem> &a, const std::vector<FieldElem> &b) {
    GoldenSolve out;
    auto sol = solve_over_field(a, b);
    if (!sol) return out;
    out.solvable = true;
    out.field_solution = *sol;
    out.in_ring = true;
    for (const FieldElem &c : *sol) {
        if (!c.is_golden_integer()) {
            out.in_ring = false;
            break;
        }
    }
    if (out.in_ring)
        for (const FieldElem &c : *sol) out.ring_solution.push_back(c.to_golden_int());
    return out;
}

/// Smith normal form data: U * A * V = diag(divisors) with U, V unimodular
/// and each divisor dividing the next.
struct SmithForm {
    std::vector<Int> divisors;
    Matrix<Int> left;   // U, rows x rows
    Matrix<Int> right;  // V, cols x cols
};

inline SmithForm smith_normal_form(const Matrix<Int> &input) {
    std::size_t m = input.rows(), n = input.cols();
    Matrix<Int> a = input;
    Matrix<Int> u = Matrix<Int>::identity(m);
    Matrix<Int> v = Matrix<Int>::identity(n);
    std::size_t t = 0;
    std::size_t steps = std::min(m, n);

    auto find_pivot = [&](std::size_t from) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_abs = 0;
        for (std::size_t i = from; i < m; ++i)
            for (std::size_t j = from; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                Int ab = boost::multiprecision::abs(a.at(i, j));
                if (!best || ab < best_abs) {
                    best = {{i, j}};
                    best_abs = ab;
                }
            }
        return best;
    };

    for (; t < steps; ++t) {
        auto p = find_pivot(t);
        if (!p) break;
        a.swap_rows(t, p->first);
        u.swap_rows(t, p->first);
        a.swap_cols(t, p->second);
        v.swap_cols(t, p->second);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t below the pivot
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) {
                    a.row_submul(i, t, q);
                    u.row_submul(i, t, q);
                }
                if (a.at(i, t) != 0) {
                    // remainder became the smaller pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            // clear row t right of the pivot
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                if (q != 0) {
                    a.col_submul(j, t, q);
                    v.col_submul(j, t, q);
                }
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        // fold the offending row into row t and restart
                        for (std::size_t c = 0; c < n; ++c) a.at(t, c) += a.at(i, c);
                        for (std::size_t c = 0; c < m; ++c) u.at(t, c) += u.at(i, c);
                        clean = false;
                    }
                }
        }
        if (a.at(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) a.at(t, c) = -a.at(t, c);
            for (std::size_t c = 0; c < m; ++c) u.at(t, c) = -u.at(t, c);
        }
    }

    SmithForm out;
    out.divisors.assign(steps, 0);
    for (std::size_t i = 0; i < t; ++i) out.divisors[i] = a.at(i, i);
    out.left = u;
    out.right = v;
    return out;
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Returns the reduced nonzero rows: pivots positive, entries above each
/// pivot reduced to [0, pivot).
inline Matrix<Int> hermite_rows(const std::vector<std::vector<Int>> &rows, std::size_t n) {
    std::vector<std::vector<Int>> basis; // echelon rows, pivot columns increasing
    std::vector<std::size_t> pivots;

    auto insert = [&](std::vector<Int> r) {
        for (std::size_t bi = 0; bi <= basis.size();) {
            std::size_t lead = 0;
            while (lead < n && r[lead] == 0) ++lead;
            if (lead == n) return;
            if (bi == basis.size() || lead < pivots[bi]) {
                if (r[lead] < 0)
                    for (auto &x : r) x = -x;
                basis.insert(basis.begin() + bi, std::move(r));
                pivots.insert(pivots.begin() + bi, lead);
                return;
            }
            if (lead > pivots[bi]) {
                ++bi;
                continue;
            }
            // same pivot column: gcd-reduce
            while (r[lead] != 0 && basis[bi][lead] != 0) {
                Int q = r[lead] / basis[bi][lead];
                if (q != 0)
                    for (std::size_t c = 0; c < n; ++c) r[c] -= q * basis[bi][c];
                if (r[lead] != 0) std::swap(r, basis[bi]);
            }
        }
    };

    for (const auto &r : rows) {
        if (r.size() != n) throw std::invalid_argument("hermite_rows: shape mismatch");
        insert(r);
    }
    // normalize pivot signs, then reduce entries above pivots; ascending i
    // keeps earlier reductions from being disturbed by later ones
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i][pivots[i]] < 0)
            for (auto &x : basis[i]) x = -x;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t i = k + 1; i < basis.size(); ++i) {
            Int q = basis[k][pivots[i]] / basis[i][pivots[i]];
            Int rem = basis[k][pivots[i]] - q * basis[i][pivots[i]];
            if (rem < 0) q -= 1;
            if (q != 0)
                for (std::size_t c = 0; c < n; ++c) basis[k][c] -= q * basis[i][c];
        }
    }
    if (basis.empty()) throw std::domain_error("hermite_rows: zero lattice");
    Matrix<Int> out(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = basis[i][j];
    return out;
}

/// Membership of v in the row lattice of a full HNF basis.
inline bool hermite_contains(const Matrix<Int> &hnf, const std::vector<Int> &v) {
    std::vector<Int> r = v;
    std::size_t n = hnf.cols();
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < n && hnf.at(i, lead) == 0) ++lead;
        if (lead == n) continue;
        Int q = r[lead] / hnf.at(i, lead);
        if (q != 0)
            for (std::size_t c = 0; c < n; ++c) r[c] -= q * hnf.at(i, c);
        if (r[lead] != 0) return false;
    }
    for (const Int &x : r)
        if (x != 0) return false;
    return true;
}

/// Exact LDL^T data of a symmetric positive definite rational matrix:
/// G = R^T D R with R unit upper triangular.
struct LdlForm {
    std::vector<Rat> d;
    Matrix<Rat> r;
    bool positive_definite = false;
};

inline LdlForm ldl_decompose(const Matrix<Rat> &g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("ldl_decompose: non-square");
    std::size_t n = g.rows();
    LdlForm out;
    out.r = Matrix<Rat>::identity(n);
    out.d.assign(n, Rat(0));
    Matrix<Rat> a = g;
    for (std::size_t k = 0; k < n; ++k) {
        out.d[k] = a.at(k, k);
        if (out.d[k] <= 0) return out; // not positive definite
        for (std::size_t j = k + 1; j < n; ++j) out.r.at(k, j) = a.at(k, j) / out.d[k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) -= a.at(i, k) * a.at(k, j) / out.d[k];
    }
    out.positive_definite = true;
    return out;
}

/// All integer vectors u with u^T G u = target, for a positive definite
/// integer Gram matrix G. The box bound for each coordinate comes from the
/// dual diagonal: u_i^2 <= target * (G^{-1})_{ii}; pruning uses the exact
/// LDL tail decomposition. Throws if G is not positive definite.
struct QuadraticSolutions {
    std::vector<std::vector<Int>> vectors;
    std::vector<Int> box_bounds;
};

inline QuadraticSolutions enumerate_quadratic_solutions(const Matrix<Int> &g, const Int &target) {
    std::size_t n = g.rows();
    if (g.cols() != n) throw std::invalid_argument("enumerate_quadratic_solutions: non-square");
    Matrix<Rat> gr(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gr.at(i, j) = Rat(g.at(i, j));
    LdlForm ldl = ldl_decompose(gr);
    if (!ldl.positive_definite)
        throw std::domain_error("enumerate_quadratic_solutions: form is not positive definite");

    // dual box bounds via the adjugate
    Int d = det(g);
    Matrix<Int> adj = adjugate(g);
    QuadraticSolutions out;
    out.box_bounds.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Rat cap = Rat(target * adj.at(i, i)) / Rat(d);
        Int b = 0;
        while (Rat((b + 1) * (b + 1)) <= cap) ++b;
        out.box_bounds[i] = b;
    }

    std::vector<Int> u(n, 0);
    Rat target_r(target);

    // recurse from the last coordinate down; budget carries the remaining
    // quadratic mass, offsets the linear terms of the LDL expansion
    auto rec = [&](auto &&self, std::size_t level, const Rat &budget) -> void {
        std::size_t i = level - 1;
        Rat offset(0);
        for (std::size_t j = i + 1; j < n; ++j) offset += ldl.r.at(i, j) * Rat(u[j]);
        for (Int c = -out.box_bounds[i]; c <= out.box_bounds[i]; ++c) {
            Rat w = Rat(c) + offset;
            Rat used = ldl.d[i] * w * w;
            if (used > budget) continue;
            u[i] = c;
            if (i == 0) {
                if (used == budget) out.vectors.push_back(u);
            } else {
                self(self, i, budget - used);
            }
        }
        u[i] = 0;
    };
    if (n > 0) rec(rec, n, target_r);
    return out;
}

} // namespace golden
