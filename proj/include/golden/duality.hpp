#pragma once

#include "golden/orders.hpp"

#include <array>
#include <vector>

namespace golden {

/// Polar Gram data of an order basis: B(b_i, b_j) with B(x,y) = N(x+y) -
/// N(x) - N(y). Entries lie in the coefficient ring; Z-order entries are
/// carried with vanishing phi part.
struct GramData {
    const OrderSpec *order = nullptr;
    Matrix<GoldenInt> polar;
    GoldenInt determinant;
};

inline GramData polar_gram(const OrderSpec &spec) {
    std::size_t n = spec.rank();
    GramData out;
    out.order = &spec;
    out.polar = Matrix<GoldenInt>(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElem b = polar_form(spec.basis()[i], spec.basis()[j]);
            if (!b.is_golden_integer())
                throw std::domain_error("polar_gram: pairing not in the ring for " + spec.name());
            out.polar.at(i, j) = b.to_golden_int();
        }
    out.determinant = det(out.polar);
    return out;
}

/// Memoized polar Gram for statically held orders.
inline const GramData &polar_gram_cached(const OrderSpec &spec) {
    static std::map<const OrderSpec *, GramData> cache;
    auto it = cache.find(&spec);
    if (it == cache.end()) it = cache.emplace(&spec, polar_gram(spec)).first;
    return it->second;
}

/// Integer view of a Z-order polar Gram.
inline Matrix<Int> gram_as_int(const GramData &g) {
    Matrix<Int> out(g.polar.rows(), g.polar.cols());
    for (std::size_t i = 0; i < g.polar.rows(); ++i)
        for (std::size_t j = 0; j < g.polar.cols(); ++j) {
            if (g.polar.at(i, j).b() != 0)
                throw std::domain_error("gram_as_int: entry has a phi part");
            out.at(i, j) = g.polar.at(i, j).a();
        }
    return out;
}

/// Self-duality under the polar pairing: the dual module equals the order
/// iff the Gram determinant is a unit and the inverse Gram is ring-valued.
/// The inverse matrix is the witness.
struct SelfDualReport {
    bool self_dual = false;
    GoldenInt determinant;
    Int determinant_field_norm;
    bool det_is_unit = false;
    Matrix<GoldenInt> inverse_witness;
};

inline SelfDualReport golden_self_dual(const OrderSpec &spec) {
    const GramData &g = polar_gram_cached(spec);
    SelfDualReport out;
    out.determinant = g.determinant;
    out.determinant_field_norm = g.determinant.norm();
    if (spec.ring() == RingTag::Z) {
        out.det_is_unit = (g.determinant == GoldenInt::one() || g.determinant == -GoldenInt::one());
    } else {
        out.det_is_unit = g.determinant.is_unit();
    }
    if (!out.det_is_unit) return out;
    RingInverse inv = invert_over_ring(g.polar);
    if (!inv.ok) return out;
    out.inverse_witness = inv.inverse;
    out.self_dual = true;
    return out;
}

/// Z-trace Gram of an order: (x, y) = Tr_{K/Q}(B(x, y)). For a Z[phi]-order
/// of rank n the Z-basis is interleaved as (b_1, phi b_1, b_2, phi b_2, ...);
/// for a Z-order the trace Gram coincides with the polar Gram.
struct TraceGram {
    const OrderSpec *order = nullptr;
    Matrix<Int> gram;
    Int determinant;
    bool even = false;
    std::vector<std::string> basis_labels;
};

inline TraceGram trace_gram(const OrderSpec &spec) {
    const GramData &g = polar_gram_cached(spec);
    std::size_t n = spec.rank();
    TraceGram out;
    out.order = &spec;
    if (spec.ring() == RingTag::Z) {
        out.gram = Matrix<Int>(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            out.basis_labels.push_back("b" + std::to_string(i + 1));
            for (std::size_t j = 0; j < n; ++j) out.gram.at(i, j) = g.polar.at(i, j).a();
        }
    } else {
        GoldenInt phi = GoldenInt::phi();
        out.gram = Matrix<Int>(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            out.basis_labels.push_back("b" + std::to_string(i + 1));
            out.basis_labels.push_back("phi*b" + std::to_string(i + 1));
            for (std::size_t j = 0; j < n; ++j) {
                const GoldenInt &b = g.polar.at(i, j);
                out.gram.at(2 * i, 2 * j) = b.trace();
                out.gram.at(2 * i, 2 * j + 1) = (phi * b).trace();
                out.gram.at(2 * i + 1, 2 * j) = (phi * b).trace();
                out.gram.at(2 * i + 1, 2 * j + 1) = (phi * phi * b).trace();
            }
        }
    }
    out.determinant = det(out.gram);
    out.even = true;
    for (std::size_t i = 0; i < out.gram.rows(); ++i)
        if (out.gram.at(i, i) % 2 != 0) out.even = false;
    return out;
}

/// Memoized trace Gram for statically held orders.
inline const TraceGram &trace_gram_cached(const OrderSpec &spec) {
    static std::map<const OrderSpec *, TraceGram> cache;
    auto it = cache.find(&spec);
    if (it == cache.end()) it = cache.emplace(&spec, trace_gram(spec)).first;
    return it->second;
}

/// Discriminant group L#/L of a nondegenerate integer Gram matrix, via the
/// Smith normal form U G V = diag(d). Quotient classes are read through
/// x -> (U G x) mod d; the lifting vectors V e_i / d_i realize the
/// generators inside L# with rational coordinates.
class DiscriminantGroup {
public:
    explicit DiscriminantGroup(const Matrix<Int> &gram) : gram_(gram) {
        if (gram.rows() != gram.cols()) throw std::invalid_argument("DiscriminantGroup: non-square");
        if (det(gram) == 0) throw std::domain_error("DiscriminantGroup: singular Gram");
        SmithForm s = smith_normal_form(gram);
        divisors_ = s.divisors;
        u_ = s.left;
        v_ = s.right;
        for (std::size_t i = 0; i < divisors_.size(); ++i)
            if (divisors_[i] > 1) nontrivial_.push_back(i);
    }

    const std::vector<Int> &divisors() const { return divisors_; }
    const std::vector<std::size_t> &nontrivial() const { return nontrivial_; }
    std::size_t quotient_rank() const { return nontrivial_.size(); }
    std::size_t ambient_rank() const { return gram_.rows(); }

    /// Rational coordinates (in the lattice basis) of the t-th quotient
    /// generator.
    std::vector<Rat> lift(std::size_t t) const {
        std::size_t idx = nontrivial_.at(t);
        std::vector<Rat> out(gram_.rows(), Rat(0));
        for (std::size_t r = 0; r < gram_.rows(); ++r)
            out[r] = Rat(v_.at(r, idx)) / Rat(divisors_[idx]);
        return out;
    }

    bool in_dual(const std::vector<Rat> &x) const {
        for (std::size_t i = 0; i < gram_.rows(); ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < gram_.cols(); ++j) acc += Rat(gram_.at(i, j)) * x[j];
            if (!is_integer(acc)) return false;
        }
        return true;
    }

    /// Class of a dual vector in the quotient, as coefficients of the
    /// nontrivial generators (each modulo its divisor).
    std::vector<unsigned> class_of(const std::vector<Rat> &x) const {
        std::vector<Rat> gx(gram_.rows(), Rat(0));
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            for (std::size_t j = 0; j < gram_.cols(); ++j) gx[i] += Rat(gram_.at(i, j)) * x[j];
        std::vector<unsigned> out;
        for (std::size_t t : nontrivial_) {
            Rat z(0);
            for (std::size_t c = 0; c < gram_.rows(); ++c) z += Rat(u_.at(t, c)) * gx[c];
            if (!is_integer(z))
                throw std::domain_error("DiscriminantGroup::class_of: vector not in the dual");
            out.push_back(
                static_cast<unsigned>(mod_floor(numerator(z), divisors_[t]).convert_to<long>()));
        }
        return out;
    }

    const Matrix<Int> &gram() const { return gram_; }

private:
    Matrix<Int> gram_, u_, v_;
    std::vector<Int> divisors_;
    std::vector<std::size_t> nontrivial_;
};

/// The induced quadratic form on a (Z/p)^m discriminant quotient of an even
/// lattice, with values in (1/p)Z/Z stored as numerators mod p:
/// q(x) = (x, x)/2 mod Z and b(x, y) = (x, y) mod Z on lifted vectors.
struct DiscriminantForm {
    unsigned p = 5;
    std::size_t dim = 0;
    std::vector<std::vector<unsigned>> gram_p; // polarization b(t_i, t_j), numerators of p-ths
    std::vector<unsigned> qdiag;               // q(t_i), numerators of p-ths

    unsigned q_of(const std::vector<unsigned> &t) const {
        unsigned long acc = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            if (t[i] == 0) continue;
            acc += static_cast<unsigned long>(t[i]) * t[i] % p * qdiag[i];
            for (std::size_t j = i + 1; j < dim; ++j)
                acc += static_cast<unsigned long>(t[i]) * t[j] % p * gram_p[i][j];
        }
        return static_cast<unsigned>(acc % p);
    }

    unsigned b_of(const std::vector<unsigned> &s, const std::vector<unsigned> &t) const {
        unsigned long acc = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                acc += static_cast<unsigned long>(s[i]) * t[j] % p * gram_p[i][j];
        return static_cast<unsigned>(acc % p);
    }
};

inline DiscriminantForm discriminant_form(const DiscriminantGroup &dg, unsigned p = 5) {
    for (std::size_t t : dg.nontrivial())
        if (dg.divisors()[t] != p)
            throw std::domain_error("discriminant_form: quotient is not homogeneous of exponent p");
    DiscriminantForm f;
    f.p = p;
    f.dim = dg.quotient_rank();
    f.gram_p.assign(f.dim, std::vector<unsigned>(f.dim, 0));
    f.qdiag.assign(f.dim, 0);

    std::vector<std::vector<Rat>> lifts;
    for (std::size_t t = 0; t < f.dim; ++t) lifts.push_back(dg.lift(t));
    const Matrix<Int> &g = dg.gram();
    auto pair_value = [&](const std::vector<Rat> &x, const std::vector<Rat> &y) {
        Rat acc(0);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Rat row(0);
            for (std::size_t j = 0; j < g.cols(); ++j) row += Rat(g.at(i, j)) * y[j];
            acc += x[i] * row;
        }
        return acc;
    };
    for (std::size_t i = 0; i < f.dim; ++i) {
        Rat qv = pair_value(lifts[i], lifts[i]) / 2 * p; // numerator of p-ths
        if (!is_integer(qv)) throw std::domain_error("discriminant_form: q is not p-torsion");
        f.qdiag[i] = static_cast<unsigned>(mod_floor(numerator(qv), Int(p)).convert_to<long>());
        for (std::size_t j = 0; j < f.dim; ++j) {
            Rat bv = pair_value(lifts[i], lifts[j]) * p;
            if (!is_integer(bv)) throw std::domain_error("discriminant_form: b is not p-torsion");
            f.gram_p[i][j] =
                static_cast<unsigned>(mod_floor(numerator(bv), Int(p)).convert_to<long>());
        }
    }
    return f;
}

/// Enumerates projective representatives of F_p^n (first nonzero coordinate
/// equal to 1, trailing coordinates counted in base p) in a fixed scan
/// order, invoking fn on each representative exactly once.
template <typename Fn>
void for_each_projective_line(unsigned p, std::size_t n, Fn &&fn) {
    std::vector<unsigned> v(n, 0);
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(v.begin(), v.end(), 0u);
        v[lead] = 1;
        while (true) {
            fn(const_cast<const std::vector<unsigned> &>(v));
            std::size_t c = n;
            bool exhausted = true;
            while (c > lead + 1) {
                --c;
                if (v[c] + 1 < p) {
                    ++v[c];
                    exhausted = false;
                    break;
                }
                v[c] = 0;
            }
            if (exhausted) break;
        }
    }
}

struct FormClassification {
    bool nondegenerate = false;
    bool plus_type = false;
    std::size_t total_lines = 0;
    std::size_t isotropic_lines = 0;
    std::size_t hyperbolic_rank = 0;
};

namespace detail {

/// Gaussian elimination rank of the polarization matrix mod p.
inline std::size_t rank_mod_p(std::vector<std::vector<unsigned>> m, unsigned p) {
    std::size_t rank = 0, n = m.size();
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m[piv][col] % p == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        unsigned inv = 1;
        while ((m[rank][col] * inv) % p != 1) ++inv;
        for (auto &x : m[rank]) x = x * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][col] % p == 0) continue;
            unsigned f = m[r][col] % p;
            for (std::size_t c = 0; c < n; ++c) m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Classification of a nondegenerate quadratic form over F_p in even
/// dimension: the isotropic projective line count separates plus and minus
/// types; the hyperbolic rank comes from a greedy Witt decomposition.
inline FormClassification discriminant_form_classify(const DiscriminantForm &f) {
    FormClassification out;
    unsigned p = f.p;
    std::size_t n = f.dim;
    out.nondegenerate = detail::rank_mod_p(f.gram_p, p) == n;
    if (!out.nondegenerate) throw std::domain_error("discriminant_form_classify: degenerate form");

    for_each_projective_line(p, n, [&](const std::vector<unsigned> &v) {
        ++out.total_lines;
        if (f.q_of(v) == 0) ++out.isotropic_lines;
    });

    // expected counts for the two types in even dimension n = 2m:
    // plus: (p^(m-1)+1)(p^m-1)/(p-1), minus: (p^(m-1)-1)(p^m+1)/(p-1)
    std::size_t m = n / 2;
    auto powp = [&](std::size_t e) {
        std::size_t r = 1;
        while (e--) r *= p;
        return r;
    };
    std::size_t plus_count = (powp(m - 1) + 1) * (powp(m) - 1) / (p - 1);
    std::size_t minus_count = (powp(m - 1) - 1) * (powp(m) + 1) / (p - 1);
    if (out.isotropic_lines == plus_count) {
        out.plus_type = true;
    } else if (out.isotropic_lines == minus_count) {
        out.plus_type = false;
    } else {
        throw InconsistencyError("discriminant_form_classify: isotropic line count " +
                                 std::to_string(out.isotropic_lines) +
                                 " matches neither type count");
    }

    // greedy Witt decomposition on a shrinking complement
    std::vector<std::vector<unsigned>> space; // basis rows of the current complement
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<unsigned> e(n, 0);
        e[i] = 1;
        space.push_back(e);
    }
    auto combine = [&](const std::vector<std::vector<unsigned>> &basis,
                       const std::vector<unsigned> &coef) {
        std::vector<unsigned> v(n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t c = 0; c < n; ++c) v[c] = (v[c] + coef[b] * basis[b][c]) % p;
        return v;
    };
    while (!space.empty()) {
        std::vector<unsigned> iso;
        bool found = false;
        for_each_projective_line(p, space.size(), [&](const std::vector<unsigned> &coef) {
            if (found) return;
            std::vector<unsigned> v = combine(space, coef);
            if (f.q_of(v) == 0) {
                iso = v;
                found = true;
            }
        });
        if (!found) break;
        // partner with b(iso, w) != 0
        std::vector<unsigned> partner;
        for (const auto &w : space) {
            if (f.b_of(iso, w) != 0) {
                partner = w;
                break;
            }
        }
        if (partner.empty())
            throw InconsistencyError("discriminant_form_classify: isotropic vector in the radical");
        unsigned bv = f.b_of(iso, partner);
        unsigned inv = 1;
        while ((bv * inv) % p != 1) ++inv;
        for (auto &x : partner) x = x * inv % p;
        unsigned qw = f.q_of(partner);
        // w <- w - q(w) * iso is isotropic with b(iso, w) = 1
        for (std::size_t c = 0; c < n; ++c)
            partner[c] = (partner[c] + (p - qw) * iso[c]) % p;
        ++out.hyperbolic_rank;
        // complement: x in space with b(x, iso) = b(x, partner) = 0
        std::vector<std::vector<unsigned>> next;
        std::vector<std::vector<unsigned>> reduced; // gaussian basis of solutions
        // build solution space of the two linear conditions within `space`
        std::vector<std::vector<unsigned>> rows;
        for (const auto &w : space)
            rows.push_back({f.b_of(w, iso) % p, f.b_of(w, partner) % p});
        // solve sum c_b * rows[b] = 0 over F_p by elimination on coefficients
        std::size_t k = space.size();
        std::vector<std::vector<unsigned>> sys(2, std::vector<unsigned>(k, 0));
        for (std::size_t b = 0; b < k; ++b) {
            sys[0][b] = rows[b][0];
            sys[1][b] = rows[b][1];
        }
        // row reduce sys (2 x k), then read off the kernel basis
        std::vector<std::size_t> pivcols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < k && r < 2; ++c) {
            std::size_t pr = r;
            while (pr < 2 && sys[pr][c] % p == 0) ++pr;
            if (pr == 2) continue;
            std::swap(sys[pr], sys[r]);
            unsigned pv = sys[r][c] % p, pinv = 1;
            while ((pv * pinv) % p != 1) ++pinv;
            for (auto &x : sys[r]) x = x * pinv % p;
            for (std::size_t rr = 0; rr < 2; ++rr) {
                if (rr == r || sys[rr][c] % p == 0) continue;
                unsigned fmul = sys[rr][c] % p;
                for (std::size_t cc = 0; cc < k; ++cc)
                    sys[rr][cc] = (sys[rr][cc] + (p - fmul) * sys[r][cc]) % p;
            }
            pivcols.push_back(c);
            ++r;
        }
        for (std::size_t c = 0; c < k; ++c) {
            bool is_piv = false;
            for (std::size_t t = 0; t < pivcols.size(); ++t) is_piv |= (pivcols[t] == c);
            if (is_piv) continue;
            std::vector<unsigned> coef(k, 0);
            coef[c] = 1;
            for (std::size_t t = 0; t < pivcols.size(); ++t)
                coef[pivcols[t]] = (p - sys[t][c] % p) % p;
            next.push_back(combine(space, coef));
        }
        space = std::move(next);
    }
    return out;
}

/// Multiplication by phi on the interleaved Z-basis (b, phi b) pairs.
inline Matrix<Int> phi_action_matrix(std::size_t golden_rank) {
    Matrix<Int> m(2 * golden_rank, 2 * golden_rank);
    for (std::size_t i = 0; i < golden_rank; ++i) {
        m.at(2 * i, 2 * i + 1) = 1;
        m.at(2 * i + 1, 2 * i) = 1;
        m.at(2 * i + 1, 2 * i + 1) = 1;
    }
    return m;
}

/// Expands a Z[phi]-linear coordinate action A (columns act on golden
/// coordinate vectors) to the interleaved Z-basis: each entry a + b*phi
/// becomes the 2x2 block [[a, b], [b, a+b]].
inline Matrix<Int> golden_to_z_matrix(const Matrix<GoldenInt> &a) {
    std::size_t n = a.rows();
    Matrix<Int> m(2 * n, 2 * a.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GoldenInt &x = a.at(i, j);
            m.at(2 * i, 2 * j) = x.a();
            m.at(2 * i, 2 * j + 1) = x.b();
            m.at(2 * i + 1, 2 * j) = x.b();
            m.at(2 * i + 1, 2 * j + 1) = x.a() + x.b();
        }
    return m;
}

/// Induced endomorphism of the discriminant quotient from an integer matrix
/// acting on lattice coordinates. The matrix must preserve the dual; every
/// quotient generator is lifted, mapped and reduced, and the lift-map-reduce
/// compatibility is what defines the columns.
inline std::vector<std::vector<unsigned>> induced_quotient_map(const Matrix<Int> &m,
                                                               const DiscriminantGroup &dg) {
    std::size_t n = dg.quotient_rank();
    std::vector<std::vector<unsigned>> cols;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Rat> w = dg.lift(t);
        std::vector<Rat> mw(w.size(), Rat(0));
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) mw[i] += Rat(m.at(i, j)) * w[j];
        if (!dg.in_dual(mw))
            throw InconsistencyError("induced_quotient_map: action does not preserve the dual");
        cols.push_back(dg.class_of(mw));
    }
    // transpose to row-major matrix acting on coefficient columns
    std::vector<std::vector<unsigned>> out(n, std::vector<unsigned>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = cols[j][i];
    return out;
}

} // namespace golden
