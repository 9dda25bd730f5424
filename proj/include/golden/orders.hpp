#pragma once

#include "golden/algebra.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace golden {

enum class RingTag { Z, Zphi };

inline std::string ring_name(RingTag t) { return t == RingTag::Z ? "Z" : "Z[phi]"; }

/// Ring membership of a K-scalar under the coefficient-ring tag.
inline bool in_ring(const FieldElem &x, RingTag t) {
    if (t == RingTag::Z) return x.b() == 0 && is_integer(x.a());
    return x.is_golden_integer();
}

/// Structure-constant tables of a verified order: b_i b_j = sum_k mult[i][j][k] b_k
/// and conj(b_i) = sum_k conj[i][k] b_k, all coefficients in the ring
/// (Z-coefficients are carried as GoldenInt with vanishing phi part).
struct StructureTables {
    std::vector<std::vector<std::vector<GoldenInt>>> mult;
    std::vector<std::vector<GoldenInt>> conj;
};

struct OrderViolation {
    enum class Kind { Product, Conjugate, Trace, Norm, Combination } kind = Kind::Product;
    std::size_t i = 0, j = 0, k = 0;
    FieldElem coefficient;

    std::string describe() const {
        const char *what = kind == Kind::Product     ? "product"
                           : kind == Kind::Conjugate ? "conjugate"
                           : kind == Kind::Trace     ? "trace"
                           : kind == Kind::Norm      ? "norm"
                                                     : "combination";
        return std::string(what) + " (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ") -> " + coefficient.str();
    }
};

struct VerifyOutcome {
    bool ok = false;
    StructureTables tables;
    OrderViolation violation;
};

/// A candidate order: coefficient ring, ambient algebra, module basis.
/// The basis must start with 1 and be linearly independent over K.
class OrderSpec {
public:
    OrderSpec(std::string name, RingTag ring, const Algebra &alg, std::vector<AlgebraElem> basis)
        : name_(std::move(name)), ring_(ring), alg_(&alg), basis_(std::move(basis)) {
        if (basis_.empty() || basis_[0] != AlgebraElem::one(alg))
            throw std::invalid_argument("OrderSpec: basis must start with 1");
        if (basis_.size() != alg.dim())
            throw std::invalid_argument("OrderSpec: basis must have full ambient rank");
        Matrix<FieldElem> b(basis_.size(), alg.dim());
        for (std::size_t r = 0; r < basis_.size(); ++r)
            for (std::size_t c = 0; c < alg.dim(); ++c) b.at(r, c) = basis_[r].coord(c);
        auto inv = invert_over_field(b.transpose());
        if (!inv) throw std::invalid_argument("OrderSpec: basis is linearly dependent");
        coord_solver_ = *inv;
    }

    const std::string &name() const { return name_; }
    RingTag ring() const { return ring_; }
    const Algebra &algebra() const { return *alg_; }
    const std::vector<AlgebraElem> &basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    /// Exact coordinates of x in the basis, over the fraction field.
    std::vector<FieldElem> field_coordinates(const AlgebraElem &x) const {
        return coord_solver_.apply(x.coords());
    }

    /// Reassemble an element from basis coordinates.
    AlgebraElem from_coordinates(const std::vector<FieldElem> &c) const {
        AlgebraElem out(*alg_);
        for (std::size_t r = 0; r < basis_.size(); ++r) out = out + basis_[r].scaled(c[r]);
        return out;
    }
    AlgebraElem from_ring_coordinates(const std::vector<GoldenInt> &c) const {
        std::vector<FieldElem> f;
        f.reserve(c.size());
        for (const GoldenInt &x : c) f.emplace_back(x);
        return from_coordinates(f);
    }

private:
    std::string name_;
    RingTag ring_;
    const Algebra *alg_;
    std::vector<AlgebraElem> basis_;
    Matrix<FieldElem> coord_solver_;
};

struct Coordinates {
    bool in_order = false;
    std::vector<GoldenInt> ring_coords;
    std::vector<FieldElem> field_coords;
};

/// Exact coordinates of x in the order's module span; in_order reports
/// whether all coordinates lie in the coefficient ring.
inline Coordinates coordinates_of(const AlgebraElem &x, const OrderSpec &spec) {
    Coordinates out;
    out.field_coords = spec.field_coordinates(x);
    out.in_order = true;
    for (const FieldElem &c : out.field_coords) {
        if (!in_ring(c, spec.ring())) {
            out.in_order = false;
            out.ring_coords.clear();
            return out;
        }
        out.ring_coords.emplace_back(numerator(c.a()), numerator(c.b()));
    }
    return out;
}

/// The order criterion: expresses every pairwise basis product and every
/// basis conjugate in the basis, requires ring coefficients throughout, and
/// requires ring-valued trace and norm on the basis and on pseudo-random
/// ring combinations.
inline VerifyOutcome verify_order(const OrderSpec &spec) {
    VerifyOutcome out;
    std::size_t n = spec.rank();
    RingTag ring = spec.ring();
    out.tables.mult.assign(n, std::vector<std::vector<GoldenInt>>(n));
    out.tables.conj.assign(n, {});

    auto fail = [&](OrderViolation::Kind kind, std::size_t i, std::size_t j, std::size_t k,
                    const FieldElem &c) {
        out.ok = false;
        out.violation = {kind, i, j, k, c};
        return out;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            AlgebraElem p = spec.basis()[i] * spec.basis()[j];
            std::vector<FieldElem> c = spec.field_coordinates(p);
            for (std::size_t k = 0; k < n; ++k) {
                if (!in_ring(c[k], ring))
                    return fail(OrderViolation::Kind::Product, i, j, k, c[k]);
                out.tables.mult[i][j].emplace_back(numerator(c[k].a()), numerator(c[k].b()));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<FieldElem> c = spec.field_coordinates(spec.basis()[i].conj());
        for (std::size_t k = 0; k < n; ++k) {
            if (!in_ring(c[k], ring)) return fail(OrderViolation::Kind::Conjugate, i, 0, k, c[k]);
            out.tables.conj[i].emplace_back(numerator(c[k].a()), numerator(c[k].b()));
        }
        if (!in_ring(spec.basis()[i].trace(), ring))
            return fail(OrderViolation::Kind::Trace, i, 0, 0, spec.basis()[i].trace());
        if (!in_ring(spec.basis()[i].norm(), ring))
            return fail(OrderViolation::Kind::Norm, i, 0, 0, spec.basis()[i].norm());
    }

    // trace, norm and product closure on random ring combinations
    SplitMix64 rng(0x0d3f5ULL + n);
    for (int round = 0; round < 32; ++round) {
        AlgebraElem x(spec.algebra()), y(spec.algebra());
        for (std::size_t r = 0; r < n; ++r) {
            GoldenInt cx(Int(rng.range(-3, 3)), ring == RingTag::Z ? Int(0) : Int(rng.range(-3, 3)));
            GoldenInt cy(Int(rng.range(-3, 3)), ring == RingTag::Z ? Int(0) : Int(rng.range(-3, 3)));
            x = x + spec.basis()[r].scaled(FieldElem(cx));
            y = y + spec.basis()[r].scaled(FieldElem(cy));
        }
        if (!in_ring(x.trace(), ring))
            return fail(OrderViolation::Kind::Combination, 0, 0, 0, x.trace());
        if (!in_ring(x.norm(), ring))
            return fail(OrderViolation::Kind::Combination, 0, 0, 1, x.norm());
        if (!coordinates_of(x * y, spec).in_order) {
            return fail(OrderViolation::Kind::Combination, 0, 0, 2, (x * y).coord(0));
        }
    }

    out.ok = true;
    return out;
}

/// Memoized order verification; OrderSpec instances with static lifetime
/// (the catalog) key the cache by address.
inline const VerifyOutcome &verify_order_cached(const OrderSpec &spec) {
    static std::map<const OrderSpec *, VerifyOutcome> cache;
    auto it = cache.find(&spec);
    if (it == cache.end()) it = cache.emplace(&spec, verify_order(spec)).first;
    return it->second;
}

/// Key of the generic positivity functional used to pick simple roots:
/// lexicographic pair (<x, w0>, <x, 1>) with w0 = sum_{c>=1} 5^{-(c-1)} b_c.
/// Root coordinates here are halves of ring elements, so the base-5 digit
/// expansion cannot vanish and w0 separates every root pair {a, -a} except
/// {1, -1}, which the second component separates.
inline std::pair<FieldElem, FieldElem> positivity_key(const AlgebraElem &x) {
    const Algebra &alg = x.algebra();
    AlgebraElem w0(alg);
    std::vector<FieldElem> c(alg.dim(), FieldElem::zero());
    Rat p(1);
    for (std::size_t i = 1; i < alg.dim(); ++i) {
        c[i] = FieldElem(p, Rat(0));
        p /= 5;
    }
    w0 = AlgebraElem(alg, c);
    return {inner_product(x, w0), inner_product(x, AlgebraElem::one(alg))};
}

inline bool positive_root(const AlgebraElem &x) {
    auto key = positivity_key(x);
    int s1 = key.first.sign_real();
    if (s1 != 0) return s1 > 0;
    return key.second.sign_real() > 0;
}

/// Simple roots of a finite root set: the positive roots whose reflection
/// permutes the remaining positive roots. This characterization is exact
/// for crystallographic and golden root systems alike (the sum-of-two test
/// would miss decompositions with coefficients in Z[phi] \ Z).
inline std::vector<AlgebraElem> simple_root_basis(const std::vector<AlgebraElem> &roots) {
    if (roots.empty()) return {};
    std::vector<AlgebraElem> positives;
    std::set<AlgebraElem> positive_set;
    for (const AlgebraElem &r : roots)
        if (positive_root(r)) {
            positives.push_back(r);
            positive_set.insert(r);
        }

    const Algebra &alg = roots[0].algebra();
    std::size_t dim = alg.dim();
    Matrix<FieldElem> m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t d = 0; d < dim; ++d)
            m.at(c, d) = inner_product(AlgebraElem::basis(alg, c), AlgebraElem::basis(alg, d));

    std::vector<AlgebraElem> simples;
    for (const AlgebraElem &alpha : positives) {
        std::vector<FieldElem> malpha(dim, FieldElem::zero());
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t d = 0; d < dim; ++d) malpha[c] += m.at(c, d) * alpha.coord(d);
        FieldElem alpha_sq = FieldElem::zero();
        for (std::size_t c = 0; c < dim; ++c) alpha_sq += alpha.coord(c) * malpha[c];
        FieldElem inv_sq = alpha_sq.inverse();

        bool simple = true;
        for (const AlgebraElem &beta : positives) {
            if (beta == alpha) continue;
            FieldElem pairing = FieldElem::zero();
            for (std::size_t c = 0; c < dim; ++c) pairing += beta.coord(c) * malpha[c];
            AlgebraElem reflected = beta - alpha.scaled((pairing + pairing) * inv_sq);
            if (!positive_set.count(reflected)) {
                simple = false;
                break;
            }
        }
        if (simple) simples.push_back(alpha);
    }
    return simples;
}

namespace detail {

/// Integer lattice workspace for building the Coxeter-Dickson module:
/// octonion coordinates scaled by 2 so the Graves basis sits at 2Z^8.
class ScaledLattice {
public:
    explicit ScaledLattice(std::vector<std::vector<Int>> rows) : basis_(hermite_rows(rows, 8)) {}

    bool contains(const std::vector<Int> &v) const { return hermite_contains(basis_, v); }
    const Matrix<Int> &basis() const { return basis_; }

    bool add(const std::vector<Int> &v) {
        if (contains(v)) return false;
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::vector<Int> r(8);
            for (std::size_t j = 0; j < 8; ++j) r[j] = basis_.at(i, j);
            rows.push_back(std::move(r));
        }
        rows.push_back(v);
        basis_ = hermite_rows(rows, 8);
        return true;
    }

private:
    Matrix<Int> basis_;
};

inline std::vector<Int> scaled_coords(const AlgebraElem &x) {
    std::vector<Int> out(8);
    for (std::size_t c = 0; c < 8; ++c) {
        FieldElem v = x.coord(c);
        Rat doubled = 2 * v.a();
        if (v.b() != 0 || !is_integer(doubled))
            throw std::domain_error("coxeter_dickson: element escapes the half-coordinate module");
        out[c] = numerator(doubled);
    }
    return out;
}

inline AlgebraElem from_scaled(const std::vector<Int> &s) {
    const Algebra &O = Algebra::octonion();
    std::vector<FieldElem> c(8);
    for (std::size_t i = 0; i < 8; ++i) c[i] = FieldElem(Rat(s[i], 2), Rat(0));
    return AlgebraElem(O, c);
}

/// Multiplicative closure of the Graves basis plus the half-sum generator
/// h = (i + j + k + l)/2, inside half-integer coordinates, followed by
/// extraction of a simple-root basis (with 1 simple by construction).
inline std::vector<AlgebraElem> coxeter_dickson_basis() {
    const Algebra &O = Algebra::octonion();
    std::vector<AlgebraElem> gens;
    for (std::size_t i = 0; i < 8; ++i) gens.push_back(AlgebraElem::basis(O, i));
    AlgebraElem h = (AlgebraElem::basis(O, 1) + AlgebraElem::basis(O, 2) +
                     AlgebraElem::basis(O, 3) + AlgebraElem::basis(O, 4))
                        .half();
    gens.push_back(h);

    std::vector<std::vector<Int>> rows;
    for (const AlgebraElem &g : gens) rows.push_back(scaled_coords(g));
    ScaledLattice lattice(rows);

    // close under multiplication; the basis only shrinks in covolume, so
    // this terminates quickly
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<AlgebraElem> current;
        for (std::size_t i = 0; i < lattice.basis().rows(); ++i) {
            std::vector<Int> r(8);
            for (std::size_t j = 0; j < 8; ++j) r[j] = lattice.basis().at(i, j);
            current.push_back(from_scaled(r));
        }
        for (const AlgebraElem &x : current)
            for (const AlgebraElem &y : current)
                if (lattice.add(scaled_coords(x * y))) grew = true;
    }

    // unit shell of the closed module: scaled vectors of squared length 4
    Matrix<Int> hb = lattice.basis();
    Matrix<Int> gram = hb * hb.transpose();
    QuadraticSolutions sols = enumerate_quadratic_solutions(gram, 4);
    std::vector<AlgebraElem> roots;
    for (const auto &c : sols.vectors) {
        std::vector<Int> s(8, 0);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) s[j] += c[i] * hb.at(i, j);
        roots.push_back(from_scaled(s));
    }

    std::vector<AlgebraElem> simples = simple_root_basis(roots);
    if (simples.size() != 8)
        throw InconsistencyError("coxeter_dickson: expected 8 simple roots, found " +
                                 std::to_string(simples.size()));

    // the simple roots must span the module with index one
    std::vector<std::vector<Int>> simple_rows;
    for (const AlgebraElem &s : simples) simple_rows.push_back(scaled_coords(s));
    if (hermite_rows(simple_rows, 8) != lattice.basis())
        throw InconsistencyError("coxeter_dickson: simple roots do not span the module");

    // put 1 first, keep the rest in canonical order
    AlgebraElem unit = AlgebraElem::one(O);
    std::vector<AlgebraElem> basis;
    basis.push_back(unit);
    std::vector<AlgebraElem> rest;
    for (const AlgebraElem &s : simples)
        if (s != unit) rest.push_back(s);
    if (rest.size() != 7)
        throw InconsistencyError("coxeter_dickson: 1 is not among the simple roots");
    std::sort(rest.begin(), rest.end());
    basis.insert(basis.end(), rest.begin(), rest.end());
    return basis;
}

} // namespace detail

inline const std::vector<std::string> &catalog_names() {
    static const std::vector<std::string> names = {
        "gaussian",      "eisenstein", "hamilton", "hybrid",  "hurwitz",
        "graves_cayley", "coxeter_dickson", "icosian", "icosian_double"};
    return names;
}

/// The named orders. Every entry passes verify_order; construction happens
/// once and the specs are immutable afterwards.
inline const OrderSpec &catalog(const std::string &name) {
    static const std::map<std::string, OrderSpec> entries = [] {
        std::map<std::string, OrderSpec> m;
        const Algebra &Ci = Algebra::complex_i();
        const Algebra &Cw = Algebra::complex_omega();
        const Algebra &H = Algebra::quaternion();
        const Algebra &Hw = Algebra::quaternion_omega();
        const Algebra &O = Algebra::octonion();

        auto all_basis = [](const Algebra &alg) {
            std::vector<AlgebraElem> b;
            for (std::size_t i = 0; i < alg.dim(); ++i) b.push_back(AlgebraElem::basis(alg, i));
            return b;
        };
        auto quat = [&H](Rat w, Rat x, Rat y, Rat z) {
            return AlgebraElem(H, {FieldElem(w, Rat(0)), FieldElem(x, Rat(0)),
                                   FieldElem(y, Rat(0)), FieldElem(z, Rat(0))});
        };

        m.emplace("gaussian", OrderSpec("gaussian", RingTag::Z, Ci, all_basis(Ci)));
        m.emplace("eisenstein", OrderSpec("eisenstein", RingTag::Z, Cw, all_basis(Cw)));
        m.emplace("hamilton", OrderSpec("hamilton", RingTag::Z, H, all_basis(H)));
        m.emplace("hybrid", OrderSpec("hybrid", RingTag::Z, Hw, all_basis(Hw)));

        std::vector<AlgebraElem> hurwitz = {
            AlgebraElem::one(H),
            quat(Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)),
            quat(Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)),
            quat(Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(-1, 2)),
        };
        m.emplace("hurwitz", OrderSpec("hurwitz", RingTag::Z, H, std::move(hurwitz)));

        m.emplace("graves_cayley", OrderSpec("graves_cayley", RingTag::Z, O, all_basis(O)));
        m.emplace("coxeter_dickson",
                  OrderSpec("coxeter_dickson", RingTag::Z, O, detail::coxeter_dickson_basis()));

        std::vector<AlgebraElem> icosian = {
            AlgebraElem::one(H),
            AlgebraElem::basis(H, 1),
            quat(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)),
            AlgebraElem(H, {FieldElem(Rat(-1, 2), Rat(0)), FieldElem(Rat(-1, 2), Rat(1, 2)),
                            FieldElem(Rat(0), Rat(-1, 2)), FieldElem::zero()}),
        };
        m.emplace("icosian", OrderSpec("icosian", RingTag::Zphi, H, icosian));

        AlgebraElem ell = AlgebraElem::basis(O, 4);
        std::vector<AlgebraElem> doubled;
        for (const AlgebraElem &e : icosian) {
            std::vector<FieldElem> c = e.coords();
            c.resize(8, FieldElem::zero());
            doubled.emplace_back(O, c);
        }
        for (std::size_t r = 0; r < 4; ++r) doubled.push_back(doubled[r] * ell);
        m.emplace("icosian_double",
                  OrderSpec("icosian_double", RingTag::Zphi, O, std::move(doubled)));
        return m;
    }();

    auto it = entries.find(name);
    if (it == entries.end()) throw std::invalid_argument("catalog: unknown order name: " + name);
    return it->second;
}

} // namespace golden
