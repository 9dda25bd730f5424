#pragma once

#include "golden/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace golden {

enum class AmbientKind { Real, Complex, Quaternion, Octonion };

inline std::string ambient_name(AmbientKind k) {
    switch (k) {
        case AmbientKind::Real: return "R";
        case AmbientKind::Complex: return "C";
        case AmbientKind::Quaternion: return "H";
        case AmbientKind::Octonion: return "O";
    }
    return "?";
}

/// A composition algebra over K presented by structure constants: a fixed
/// basis starting with 1, a multiplication table and a conjugation table.
/// Every concrete algebra here is either a hand-written rank-2 presentation
/// of C or a Cayley-Dickson double (ell^2 = -1, ell*a = conj(a)*ell).
class Algebra {
public:
    std::size_t dim() const { return dim_; }
    AmbientKind kind() const { return kind_; }
    const std::string &name() const { return name_; }
    const std::string &basis_name(std::size_t i) const { return basis_names_[i]; }

    struct Term {
        std::size_t k;
        FieldElem coeff;
    };

    const std::vector<Term> &product_terms(std::size_t i, std::size_t j) const {
        return mult_[i * dim_ + j];
    }
    const std::vector<FieldElem> &conj_coords(std::size_t i) const { return conj_[i]; }

    static const Algebra &real() {
        static Algebra a = make_real();
        return a;
    }
    /// C in the orthonormal basis {1, i}, i^2 = -1.
    static const Algebra &complex_i() {
        static Algebra a = make_quadratic("C_i", "i", FieldElem(Rat(-1), Rat(0)), FieldElem::zero());
        return a;
    }
    /// C in the Eisenstein basis {1, w}, w^2 = -1 - w, conj(w) = -1 - w.
    static const Algebra &complex_omega() {
        static Algebra a =
            make_quadratic("C_omega", "w", FieldElem(Rat(-1), Rat(0)), FieldElem(Rat(-1), Rat(0)));
        return a;
    }
    /// C in the decagonal basis {1, z} with z a primitive 10th root of
    /// unity: z^2 = phi*z - 1, conj(z) = phi - z.
    static const Algebra &complex_zeta10() {
        static Algebra a =
            make_quadratic("C_zeta10", "z", FieldElem(Rat(-1), Rat(0)), FieldElem::phi());
        return a;
    }
    static const Algebra &quaternion() {
        static Algebra a = cayley_dickson(complex_i(), "H", {"j", "k"});
        return a;
    }
    /// Double of the Eisenstein presentation; ambient of the hybrid order.
    static const Algebra &quaternion_omega() {
        static Algebra a = cayley_dickson(complex_omega(), "H_omega", {"j", "wj"});
        return a;
    }
    static const Algebra &octonion() {
        static Algebra a = cayley_dickson(quaternion(), "O", {"l", "il", "jl", "kl"});
        return a;
    }

private:
    Algebra() = default;

    using Dense = std::vector<FieldElem>;

    Dense dense_product(std::size_t i, std::size_t j) const {
        Dense out(dim_, FieldElem::zero());
        for (const Term &t : product_terms(i, j)) out[t.k] = t.coeff;
        return out;
    }

    void set_product(std::size_t i, std::size_t j, const Dense &coords) {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) terms.push_back({k, coords[k]});
        mult_[i * dim_ + j] = std::move(terms);
    }

    static Algebra make_real() {
        Algebra a;
        a.dim_ = 1;
        a.kind_ = AmbientKind::Real;
        a.name_ = "R";
        a.basis_names_ = {"1"};
        a.mult_.resize(1);
        a.mult_[0] = {{0, FieldElem::one()}};
        a.conj_ = {{FieldElem::one()}};
        return a;
    }

    /// Rank-2 presentation {1, g} with g^2 = s + t*g and conj(g) = c0 + c1*g,
    /// where conjugation is determined by g + conj(g) = Tr(g).
    static Algebra make_quadratic(std::string name, std::string gen, FieldElem g2_const,
                                  FieldElem g2_lin) {
        Algebra a;
        a.dim_ = 2;
        a.kind_ = AmbientKind::Complex;
        a.name_ = std::move(name);
        a.basis_names_ = {"1", std::move(gen)};
        a.mult_.resize(4);
        a.mult_[0 * 2 + 0] = {{0, FieldElem::one()}};
        a.mult_[0 * 2 + 1] = {{1, FieldElem::one()}};
        a.mult_[1 * 2 + 0] = {{1, FieldElem::one()}};
        std::vector<Term> gg;
        if (!g2_const.is_zero()) gg.push_back({0, g2_const});
        if (!g2_lin.is_zero()) gg.push_back({1, g2_lin});
        a.mult_[1 * 2 + 1] = std::move(gg);
        // conj(g) = Tr(g) - g and Tr(g) = g2_lin for a quadratic generator:
        // g^2 - Tr(g) g + N(g) = 0 forces Tr(g) = g2_lin, N(g) = -g2_const.
        a.conj_ = {{FieldElem::one(), FieldElem::zero()}, {g2_lin, -FieldElem::one()}};
        return a;
    }

    static Algebra cayley_dickson(const Algebra &base, std::string name,
                                  std::vector<std::string> high_names) {
        std::size_t n = base.dim_;
        Algebra a;
        a.dim_ = 2 * n;
        a.kind_ = base.kind_ == AmbientKind::Real      ? AmbientKind::Complex
                  : base.kind_ == AmbientKind::Complex ? AmbientKind::Quaternion
                                                       : AmbientKind::Octonion;
        a.name_ = std::move(name);
        a.basis_names_.assign(2 * n, "");
        for (std::size_t i = 0; i < n; ++i) {
            a.basis_names_[i] = base.basis_names_[i];
            a.basis_names_[n + i] = high_names.at(i);
        }
        a.mult_.resize(4 * n * n);
        a.conj_.assign(2 * n, Dense(2 * n, FieldElem::zero()));

        // (u + v*ell)(x + y*ell) = (ux - conj(y)v) + (yu + v*conj(x))ell
        for (std::size_t i = 0; i < 2 * n; ++i) {
            for (std::size_t j = 0; j < 2 * n; ++j) {
                Dense out(2 * n, FieldElem::zero());
                bool hi_i = i >= n, hi_j = j >= n;
                std::size_t bi = hi_i ? i - n : i;
                std::size_t bj = hi_j ? j - n : j;
                if (!hi_i && !hi_j) {
                    Dense p = base.dense_product(bi, bj);
                    for (std::size_t k = 0; k < n; ++k) out[k] = p[k];
                } else if (!hi_i && hi_j) {
                    // (u)(y ell) = (y u) ell
                    Dense p = base.dense_product(bj, bi);
                    for (std::size_t k = 0; k < n; ++k) out[n + k] = p[k];
                } else if (hi_i && !hi_j) {
                    // (v ell)(x) = (v conj(x)) ell
                    const Dense &cx = base.conj_[bj];
                    for (std::size_t m = 0; m < n; ++m) {
                        if (cx[m].is_zero()) continue;
                        Dense p = base.dense_product(bi, m);
                        for (std::size_t k = 0; k < n; ++k) out[n + k] += cx[m] * p[k];
                    }
                } else {
                    // (v ell)(y ell) = -(conj(y) v)
                    const Dense &cy = base.conj_[bj];
                    for (std::size_t m = 0; m < n; ++m) {
                        if (cy[m].is_zero()) continue;
                        Dense p = base.dense_product(m, bi);
                        for (std::size_t k = 0; k < n; ++k) out[k] -= cy[m] * p[k];
                    }
                }
                a.set_product(i, j, out);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) a.conj_[i][k] = base.conj_[i][k];
            a.conj_[n + i][n + i] = -FieldElem::one();
        }
        return a;
    }

    std::size_t dim_ = 0;
    AmbientKind kind_ = AmbientKind::Real;
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<std::vector<Term>> mult_;
    std::vector<Dense> conj_;
};

/// Element of a fixed algebra: a coordinate vector over K. Elements with
/// Z[phi] coordinates are the same type viewed through has_golden_coords().
class AlgebraElem {
public:
    explicit AlgebraElem(const Algebra &alg)
        : alg_(&alg), c_(alg.dim(), FieldElem::zero()) {}
    AlgebraElem(const Algebra &alg, std::vector<FieldElem> coords)
        : alg_(&alg), c_(std::move(coords)) {
        if (c_.size() != alg.dim()) throw std::invalid_argument("AlgebraElem: wrong coordinate count");
    }

    static AlgebraElem basis(const Algebra &alg, std::size_t i) {
        AlgebraElem e(alg);
        e.c_[i] = FieldElem::one();
        return e;
    }
    static AlgebraElem one(const Algebra &alg) { return basis(alg, 0); }
    static AlgebraElem scalar(const Algebra &alg, const FieldElem &s) {
        AlgebraElem e(alg);
        e.c_[0] = s;
        return e;
    }

    const Algebra &algebra() const { return *alg_; }
    const std::vector<FieldElem> &coords() const { return c_; }
    const FieldElem &coord(std::size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const auto &x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    AlgebraElem operator+(const AlgebraElem &o) const {
        check_same(o);
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
        return out;
    }
    AlgebraElem operator-(const AlgebraElem &o) const {
        check_same(o);
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
        return out;
    }
    AlgebraElem operator-() const {
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
        return out;
    }

    AlgebraElem operator*(const AlgebraElem &o) const {
        check_same(o);
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                FieldElem f = c_[i] * o.c_[j];
                for (const Algebra::Term &t : alg_->product_terms(i, j))
                    out.c_[t.k] += t.coeff * f;
            }
        }
        return out;
    }

    AlgebraElem scaled(const FieldElem &s) const {
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = s * c_[i];
        return out;
    }
    AlgebraElem half() const { return scaled(FieldElem(Rat(1, 2), Rat(0))); }

    AlgebraElem conj() const {
        AlgebraElem out(*alg_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            const auto &cc = alg_->conj_coords(i);
            for (std::size_t k = 0; k < c_.size(); ++k)
                if (!cc[k].is_zero()) out.c_[k] += c_[i] * cc[k];
        }
        return out;
    }

    /// Tr(x) = x + conj(x); the result must be a scalar.
    FieldElem trace() const { return scalar_part_of(*this + conj()); }

    /// N(x) = x * conj(x); the result must be a scalar.
    FieldElem norm() const { return scalar_part_of(*this * conj()); }

    bool has_golden_coords() const {
        for (const auto &x : c_)
            if (!x.is_golden_integer()) return false;
        return true;
    }

    bool operator==(const AlgebraElem &o) const { return alg_ == o.alg_ && c_ == o.c_; }
    bool operator!=(const AlgebraElem &o) const { return !(*this == o); }
    bool operator<(const AlgebraElem &o) const {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ", ";
            s += c_[i].str();
        }
        s += ")";
        return s;
    }

private:
    static FieldElem scalar_part_of(const AlgebraElem &x) {
        for (std::size_t i = 1; i < x.c_.size(); ++i)
            if (!x.c_[i].is_zero())
                throw std::domain_error("AlgebraElem: expected a scalar value");
        return x.c_[0];
    }

    void check_same(const AlgebraElem &o) const {
        if (alg_ != o.alg_) throw std::invalid_argument("AlgebraElem: algebra mismatch");
    }

    const Algebra *alg_;
    std::vector<FieldElem> c_;
};

/// Polar bilinear form B(x, y) = N(x+y) - N(x) - N(y).
inline FieldElem polar_form(const AlgebraElem &x, const AlgebraElem &y) {
    return (x + y).norm() - x.norm() - y.norm();
}

/// Structure tables of an algebra viewed over Z[phi]: every algebra here
/// has golden-integer structure constants, so products and conjugates of
/// golden-integer coordinate vectors stay in integer arithmetic. This is
/// the fast path for the large enumerations.
class GoldenTable {
public:
    static const GoldenTable &of(const Algebra &alg) {
        static std::map<const Algebra *, GoldenTable> cache;
        auto it = cache.find(&alg);
        if (it == cache.end()) it = cache.emplace(&alg, GoldenTable(alg)).first;
        return it->second;
    }

    std::size_t dim() const { return dim_; }

    std::vector<GoldenInt> mul(const std::vector<GoldenInt> &a,
                               const std::vector<GoldenInt> &b) const {
        std::vector<GoldenInt> out(dim_, GoldenInt::zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                GoldenInt f = a[i] * b[j];
                for (const Term &t : mult_[i * dim_ + j]) out[t.k] += t.coeff * f;
            }
        }
        return out;
    }

    std::vector<GoldenInt> conj(const std::vector<GoldenInt> &a) const {
        std::vector<GoldenInt> out(dim_, GoldenInt::zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k)
                if (!conj_[i][k].is_zero()) out[k] += a[i] * conj_[i][k];
        }
        return out;
    }

    /// Ambient polar Gram B(b_c, b_d) of the algebra basis.
    const Matrix<GoldenInt> &ambient_gram() const { return gram_; }

private:
    struct Term {
        std::size_t k;
        GoldenInt coeff;
    };

    explicit GoldenTable(const Algebra &alg) : dim_(alg.dim()), gram_(alg.dim(), alg.dim()) {
        mult_.resize(dim_ * dim_);
        conj_.assign(dim_, std::vector<GoldenInt>(dim_, GoldenInt::zero()));
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                for (const Algebra::Term &t : alg.product_terms(i, j)) {
                    if (!t.coeff.is_golden_integer())
                        throw std::domain_error("GoldenTable: non-integral structure constant");
                    mult_[i * dim_ + j].push_back({t.k, t.coeff.to_golden_int()});
                }
            }
            const auto &cc = alg.conj_coords(i);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!cc[k].is_golden_integer())
                    throw std::domain_error("GoldenTable: non-integral conjugation constant");
                conj_[i][k] = cc[k].to_golden_int();
            }
        }
        for (std::size_t c = 0; c < dim_; ++c)
            for (std::size_t d = 0; d < dim_; ++d) {
                FieldElem b = polar_form(AlgebraElem::basis(alg, c), AlgebraElem::basis(alg, d));
                if (!b.is_golden_integer())
                    throw std::domain_error("GoldenTable: non-integral ambient pairing");
                gram_.at(c, d) = b.to_golden_int();
            }
    }

    std::size_t dim_;
    std::vector<std::vector<Term>> mult_;
    std::vector<std::vector<GoldenInt>> conj_;
    Matrix<GoldenInt> gram_;
};

/// Euclidean pairing <x, y> = Re(x conj(y)) = Tr(x conj(y)) / 2 = B(x, y)/2.
inline FieldElem inner_product(const AlgebraElem &x, const AlgebraElem &y) {
    FieldElem t = (x * y.conj()).trace();
    return FieldElem(Rat(1, 2), Rat(0)) * t;
}

/// [x, y, z] = (xy)z - x(yz); identically zero on associative subalgebras.
inline AlgebraElem associator(const AlgebraElem &x, const AlgebraElem &y, const AlgebraElem &z) {
    return (x * y) * z - x * (y * z);
}

} // namespace golden
