#pragma once

#include "golden/duality.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace golden {

/// A finite norm shell of an order: every element has norm exactly
/// norm_value; elements are kept sorted in the canonical coordinate order.
struct Shell {
    const OrderSpec *order = nullptr;
    FieldElem norm_value;
    std::vector<AlgebraElem> elements;

    bool contains(const AlgebraElem &x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    std::size_t size() const { return elements.size(); }
};

/// Deterministic text listing, one element per line.
inline std::string shell_listing(const Shell &s) {
    std::string out;
    for (const AlgebraElem &x : s.elements) {
        out += x.str();
        out += "\n";
    }
    return out;
}

/// Result of the two-route unit-shell enumeration, with the per-coordinate
/// box bounds that certify finiteness of the search.
struct ShellEnumeration {
    Shell shell;
    std::size_t closure_count = 0; // strategy (a): multiplicative closure
    std::size_t box_count = 0;     // strategy (b): bounded coefficient box
    std::vector<Int> box_bounds;
};

namespace detail {

/// Doubled golden coordinates of an element whose coordinates are halves of
/// ring elements; all shell arithmetic happens on these integer vectors.
inline std::vector<GoldenInt> doubled_coords(const AlgebraElem &x) {
    std::vector<GoldenInt> v(x.algebra().dim());
    for (std::size_t c = 0; c < v.size(); ++c) {
        FieldElem d = x.coord(c) + x.coord(c);
        if (!d.is_golden_integer())
            throw std::domain_error("doubled_coords: coordinate is not half-integral");
        v[c] = d.to_golden_int();
    }
    return v;
}

inline AlgebraElem from_doubled(const Algebra &alg, const std::vector<GoldenInt> &v) {
    std::vector<FieldElem> c(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) c[t] = FieldElem(Rat(v[t].a(), 2), Rat(v[t].b(), 2));
    return AlgebraElem(alg, c);
}

inline std::vector<AlgebraElem> closure_strategy(const OrderSpec &spec, std::size_t cap = 5000) {
    const Algebra &alg = spec.algebra();
    const GoldenTable &table = GoldenTable::of(alg);
    const GoldenInt two(2, 0);

    // products of doubled vectors are quadrupled products; halving keeps
    // the doubled representation
    auto product = [&](const std::vector<GoldenInt> &a, const std::vector<GoldenInt> &b) {
        std::vector<GoldenInt> p = table.mul(a, b);
        for (auto &x : p) {
            auto q = x.divide_exact(two);
            if (!q) throw std::domain_error("closure_strategy: product escapes the half lattice");
            x = *q;
        }
        return p;
    };

    std::vector<std::vector<GoldenInt>> gens;
    for (const AlgebraElem &b : spec.basis()) {
        if (b.norm() != FieldElem::one()) continue;
        for (const AlgebraElem &g : {b, -b, b.conj(), -b.conj()}) gens.push_back(doubled_coords(g));
    }
    std::set<std::vector<GoldenInt>> seen(gens.begin(), gens.end());
    std::deque<std::vector<GoldenInt>> queue(gens.begin(), gens.end());
    while (!queue.empty()) {
        std::vector<GoldenInt> x = queue.front();
        queue.pop_front();
        for (const auto &g : gens) {
            for (auto &&p : {product(x, g), product(g, x)}) {
                if (seen.insert(p).second) queue.push_back(p);
            }
        }
        if (seen.size() > cap)
            throw InconsistencyError("closure_strategy: multiplicative closure exceeds cap in " +
                                     spec.name());
    }
    std::vector<AlgebraElem> out;
    out.reserve(seen.size());
    for (const auto &v : seen) out.push_back(from_doubled(alg, v));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::pair<std::vector<AlgebraElem>, std::vector<Int>> box_strategy(const OrderSpec &spec) {
    std::vector<AlgebraElem> found;
    std::vector<Int> bounds;
    if (spec.ring() == RingTag::Z) {
        Matrix<Int> gram = gram_as_int(polar_gram_cached(spec));
        QuadraticSolutions sols = enumerate_quadratic_solutions(gram, 2); // B(x,x) = 2N(x) = 2
        bounds = sols.box_bounds;
        for (const auto &u : sols.vectors) {
            std::vector<GoldenInt> c;
            for (const Int &x : u) c.emplace_back(x, Int(0));
            AlgebraElem elem = spec.from_ring_coordinates(c);
            if (elem.norm() == FieldElem::one()) found.push_back(elem);
        }
    } else {
        // both Galois embeddings of N(x) = 1 bound the integer coordinates
        // through the trace form: Tr N(x) = 2, i.e. the doubled target 4
        const TraceGram &tg = trace_gram_cached(spec);
        QuadraticSolutions sols = enumerate_quadratic_solutions(tg.gram, 4);
        bounds = sols.box_bounds;
        for (const auto &u : sols.vectors) {
            std::vector<GoldenInt> c;
            for (std::size_t r = 0; r < spec.rank(); ++r) c.emplace_back(u[2 * r], u[2 * r + 1]);
            AlgebraElem elem = spec.from_ring_coordinates(c);
            if (elem.norm() == FieldElem::one()) found.push_back(elem);
        }
    }
    std::sort(found.begin(), found.end());
    return {std::move(found), std::move(bounds)};
}

} // namespace detail

/// Enumerates the norm-one shell by two independent strategies and compares
/// them: (a) multiplicative closure of the norm-one basis elements with
/// their negatives and conjugates, (b) exact search over the coefficient box
/// certified by the positive definite trace form. Disagreement is a fatal
/// inconsistency.
inline ShellEnumeration enumerate_unit_shell_detailed(const OrderSpec &spec) {
    const VerifyOutcome &v = verify_order_cached(spec);
    if (!v.ok)
        throw std::domain_error("enumerate_unit_shell: order does not verify: " +
                                v.violation.describe());

    std::vector<AlgebraElem> closure = detail::closure_strategy(spec);
    auto [boxed, bounds] = detail::box_strategy(spec);

    if (closure != boxed)
        throw InconsistencyError("enumerate_unit_shell: strategies disagree on " + spec.name() +
                                 " (" + std::to_string(closure.size()) + " vs " +
                                 std::to_string(boxed.size()) + ")");

    ShellEnumeration out;
    out.closure_count = closure.size();
    out.box_count = boxed.size();
    out.box_bounds = std::move(bounds);
    out.shell.order = &spec;
    out.shell.norm_value = FieldElem::one();
    out.shell.elements = std::move(boxed);
    return out;
}

inline Shell enumerate_unit_shell(const OrderSpec &spec) {
    return enumerate_unit_shell_detailed(spec).shell;
}

/// Cached unit shells for the catalog orders.
inline const ShellEnumeration &unit_shell(const std::string &catalog_name) {
    static std::map<std::string, ShellEnumeration> cache;
    auto it = cache.find(catalog_name);
    if (it == cache.end())
        it = cache.emplace(catalog_name, enumerate_unit_shell_detailed(catalog(catalog_name))).first;
    return it->second;
}

struct RootReport {
    std::size_t cardinality = 0;
    bool centrally_symmetric = false;
    bool reflection_closed = false;
    bool reflections_involutive = false;
    std::vector<FieldElem> cartan_values; // sorted, unique
    bool cartan_in_ring = false;          // all values in Z[phi]
    bool crystallographic = false;        // all values in Z
};

namespace detail {

inline void classify_cartan_values(RootReport &rep, const std::set<FieldElem> &values) {
    rep.cartan_values.assign(values.begin(), values.end());
    rep.cartan_in_ring = true;
    rep.crystallographic = true;
    for (const FieldElem &v : rep.cartan_values) {
        if (!v.is_golden_integer()) rep.cartan_in_ring = false;
        if (!(v.b() == 0 && is_integer(v.a()))) rep.crystallographic = false;
    }
}

/// Generic field-arithmetic route, used when shell coordinates are not
/// halves of golden integers.
inline RootReport verify_root_shell_field(const Shell &s) {
    const Algebra &alg = s.elements[0].algebra();
    std::size_t dim = alg.dim();
    Matrix<FieldElem> m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t d = 0; d < dim; ++d)
            m.at(c, d) = inner_product(AlgebraElem::basis(alg, c), AlgebraElem::basis(alg, d));

    RootReport rep;
    rep.cardinality = s.elements.size();
    rep.centrally_symmetric = true;
    rep.reflection_closed = true;
    rep.reflections_involutive = true;

    std::set<FieldElem> values;
    for (const AlgebraElem &x : s.elements)
        if (!s.contains(-x)) rep.centrally_symmetric = false;

    for (const AlgebraElem &alpha : s.elements) {
        std::vector<FieldElem> malpha(dim, FieldElem::zero());
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t d = 0; d < dim; ++d) malpha[c] += m.at(c, d) * alpha.coord(d);
        FieldElem alpha_sq = FieldElem::zero();
        for (std::size_t c = 0; c < dim; ++c) alpha_sq += alpha.coord(c) * malpha[c];
        FieldElem inv_sq = alpha_sq.inverse();

        for (const AlgebraElem &beta : s.elements) {
            FieldElem pairing = FieldElem::zero();
            for (std::size_t c = 0; c < dim; ++c) pairing += beta.coord(c) * malpha[c];
            FieldElem cartan = (pairing + pairing) * inv_sq;
            values.insert(cartan);
            AlgebraElem reflected = beta - alpha.scaled(cartan);
            if (!s.contains(reflected)) {
                rep.reflection_closed = false;
                continue;
            }
            FieldElem pairing2 = FieldElem::zero();
            for (std::size_t c = 0; c < dim; ++c) pairing2 += reflected.coord(c) * malpha[c];
            if ((pairing2 + pairing2) * inv_sq != -cartan) rep.reflections_involutive = false;
        }
    }
    classify_cartan_values(rep, values);
    return rep;
}

/// Fast route on doubled golden coordinates: with u = 2 beta, w = 2 alpha
/// and the ambient polar Gram GA, u^T GA w = 4 B(beta, alpha), so the
/// Cartan value is 2 (u^T GA w) / (w^T GA w), and the reflection stays in
/// integer coordinates whenever the Cartan value is a golden integer.
inline RootReport verify_root_shell_golden(const Shell &s,
                                           const std::vector<std::vector<GoldenInt>> &doubled) {
    const Algebra &alg = s.elements[0].algebra();
    const GoldenTable &table = GoldenTable::of(alg);
    const Matrix<GoldenInt> &ga = table.ambient_gram();
    std::size_t dim = alg.dim();
    const GoldenInt two(2, 0);

    RootReport rep;
    rep.cardinality = s.elements.size();
    rep.centrally_symmetric = true;
    rep.reflection_closed = true;
    rep.reflections_involutive = true;

    std::set<std::vector<GoldenInt>> member(doubled.begin(), doubled.end());
    for (const auto &u : doubled) {
        std::vector<GoldenInt> neg(dim);
        for (std::size_t c = 0; c < dim; ++c) neg[c] = -u[c];
        if (!member.count(neg)) rep.centrally_symmetric = false;
    }

    std::set<FieldElem> values;
    std::vector<GoldenInt> malpha(dim), reflected(dim);
    for (const auto &w : doubled) {
        for (std::size_t c = 0; c < dim; ++c) {
            GoldenInt acc = GoldenInt::zero();
            for (std::size_t d = 0; d < dim; ++d) acc += ga.at(c, d) * w[d];
            malpha[c] = acc;
        }
        GoldenInt alpha4 = GoldenInt::zero();
        for (std::size_t c = 0; c < dim; ++c) alpha4 += w[c] * malpha[c];
        FieldElem inv4 = FieldElem(alpha4).inverse();

        for (const auto &u : doubled) {
            GoldenInt p4 = GoldenInt::zero();
            for (std::size_t c = 0; c < dim; ++c) p4 += u[c] * malpha[c];
            FieldElem cartan = FieldElem(two * p4) * inv4;
            values.insert(cartan);

            bool in_shell = false;
            if (cartan.is_golden_integer()) {
                GoldenInt cg = cartan.to_golden_int();
                for (std::size_t c = 0; c < dim; ++c) reflected[c] = u[c] - cg * w[c];
                in_shell = member.count(reflected) > 0;
            } else {
                // exact slow branch: the image can still have half-integral
                // coordinates when the coordinates of alpha divide out
                bool representable = true;
                for (std::size_t c = 0; c < dim && representable; ++c) {
                    FieldElem v = FieldElem(u[c]) - cartan * FieldElem(w[c]);
                    if (!v.is_golden_integer()) {
                        representable = false;
                        break;
                    }
                    reflected[c] = v.to_golden_int();
                }
                in_shell = representable && member.count(reflected) > 0;
            }
            if (!in_shell) {
                rep.reflection_closed = false;
                continue;
            }
            GoldenInt p4r = GoldenInt::zero();
            for (std::size_t c = 0; c < dim; ++c) p4r += reflected[c] * malpha[c];
            if (p4r != -p4) rep.reflections_involutive = false;
        }
    }
    classify_cartan_values(rep, values);
    return rep;
}

} // namespace detail

/// Checks central symmetry, reflection closure, and collects every Cartan
/// value 2<b,a>/<a,a> = B(b,a)/N(a), all in exact arithmetic.
inline RootReport verify_root_shell(const Shell &s) {
    if (s.elements.empty()) throw std::invalid_argument("verify_root_shell: empty shell");
    for (const AlgebraElem &x : s.elements)
        if (x.is_zero()) throw std::invalid_argument("verify_root_shell: shell contains zero");

    std::vector<std::vector<GoldenInt>> doubled;
    doubled.reserve(s.elements.size());
    bool golden_path = true;
    try {
        for (const AlgebraElem &x : s.elements) doubled.push_back(detail::doubled_coords(x));
    } catch (const std::domain_error &) {
        golden_path = false;
    }
    if (golden_path) return detail::verify_root_shell_golden(s, doubled);
    return detail::verify_root_shell_field(s);
}

/// Cached root reports for the named catalog shells and the h2/h3/h4
/// models; the reports are deterministic, so caching only saves recompute.
inline const RootReport &cached_root_report(const std::string &name);

/// The cyclotomic order Z[zeta10] as a rank-2 Z[phi]-order in the decagonal
/// presentation of C; its unit shell is the H2 decagon.
inline const OrderSpec &cyclotomic_h2_order() {
    static const OrderSpec spec("zeta10", RingTag::Zphi, Algebra::complex_zeta10(),
                                {AlgebraElem::one(Algebra::complex_zeta10()),
                                 AlgebraElem::basis(Algebra::complex_zeta10(), 1)});
    return spec;
}

/// H2: the ten powers of zeta10, i.e. the unit shell of Z[zeta10].
inline const Shell &h2_model() {
    static const Shell shell = [] {
        Shell s = enumerate_unit_shell(cyclotomic_h2_order());
        if (s.size() != 10) throw InconsistencyError("h2_model: expected 10 roots");
        return s;
    }();
    return shell;
}

namespace detail {

inline FieldElem half_of(int kind) {
    // kind 0 -> 1/2, 1 -> phi/2, 2 -> (phi-1)/2
    switch (kind) {
        case 0: return FieldElem(Rat(1, 2), Rat(0));
        case 1: return FieldElem(Rat(0), Rat(1, 2));
        default: return FieldElem(Rat(-1, 2), Rat(1, 2));
    }
}

inline bool permutation_even(const std::vector<int> &perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0;
}

} // namespace detail

/// H3: the thirty icosidodecahedral roots as pure imaginary icosians:
/// signed permutation-axis vectors plus the cyclic halves of (1, phi,
/// phi - 1).
inline const Shell &h3_model() {
    static const Shell shell = [] {
        const Algebra &h = Algebra::quaternion();
        std::set<AlgebraElem> out;
        for (int axis = 1; axis <= 3; ++axis)
            for (int sign : {1, -1}) {
                AlgebraElem e = AlgebraElem::basis(h, axis);
                out.insert(sign > 0 ? e : -e);
            }
        for (int rot = 0; rot < 3; ++rot) {
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<FieldElem> c(4, FieldElem::zero());
                for (int t = 0; t < 3; ++t) {
                    FieldElem v = detail::half_of((t + rot) % 3);
                    if (mask & (1 << t)) v = -v;
                    c[1 + t] = v;
                }
                out.insert(AlgebraElem(h, c));
            }
        }
        Shell s;
        s.order = &catalog("icosian");
        s.norm_value = FieldElem::one();
        s.elements.assign(out.begin(), out.end());
        if (s.size() != 30) throw InconsistencyError("h3_model: expected 30 roots");
        return s;
    }();
    return shell;
}

/// H4: the 120 vertices of the 600-cell in the coordinate model: signed
/// basis vectors, the sixteen half-sums, and the even permutations of
/// (0, 1, phi, phi - 1)/2 with free signs.
inline const Shell &h4_model() {
    static const Shell shell = [] {
        const Algebra &h = Algebra::quaternion();
        std::set<AlgebraElem> out;
        for (int pos = 0; pos < 4; ++pos)
            for (int sign : {1, -1}) {
                AlgebraElem e = AlgebraElem::basis(h, pos);
                out.insert(sign > 0 ? e : -e);
            }
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<FieldElem> c(4);
            for (int t = 0; t < 4; ++t)
                c[t] = (mask & (1 << t)) ? FieldElem(Rat(-1, 2), Rat(0)) : FieldElem(Rat(1, 2), Rat(0));
            out.insert(AlgebraElem(h, c));
        }
        std::vector<int> perm = {0, 1, 2, 3};
        do {
            if (!detail::permutation_even(perm)) continue;
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<FieldElem> c(4, FieldElem::zero());
                int nonzero = 0;
                for (int pos = 0; pos < 4; ++pos) {
                    int kind = perm[pos]; // 0 -> coordinate 0, else half_of(kind-1)
                    if (kind == 0) continue;
                    FieldElem v = detail::half_of(kind - 1);
                    if (mask & (1 << nonzero)) v = -v;
                    ++nonzero;
                    c[pos] = v;
                }
                out.insert(AlgebraElem(h, c));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        Shell s;
        s.order = &catalog("icosian");
        s.norm_value = FieldElem::one();
        s.elements.assign(out.begin(), out.end());
        if (s.size() != 120) throw InconsistencyError("h4_model: expected 120 roots");
        return s;
    }();
    return shell;
}

struct MixedProjectionReport {
    std::size_t mixed_count = 0;
    bool decomposable = false;
};

/// Splits each shell element across an orthogonal pair of K-subspaces and
/// counts the elements with both projections nonzero; the shell is
/// decomposable across the split iff no element is mixed.
inline MixedProjectionReport mixed_projection_report(const Shell &s,
                                                     const std::vector<AlgebraElem> &v1,
                                                     const std::vector<AlgebraElem> &v2) {
    if (s.elements.empty()) throw std::invalid_argument("mixed_projection_report: empty shell");
    const Algebra &alg = s.elements[0].algebra();
    if (v1.empty() || v2.empty() || v1.size() + v2.size() != alg.dim())
        throw std::invalid_argument("mixed_projection_report: split must span the ambient space");
    for (const AlgebraElem &x : v1)
        for (const AlgebraElem &y : v2)
            if (!inner_product(x, y).is_zero())
                throw std::invalid_argument("mixed_projection_report: split is not orthogonal");

    Matrix<FieldElem> basis(alg.dim(), alg.dim());
    for (std::size_t r = 0; r < v1.size(); ++r)
        for (std::size_t c = 0; c < alg.dim(); ++c) basis.at(r, c) = v1[r].coord(c);
    for (std::size_t r = 0; r < v2.size(); ++r)
        for (std::size_t c = 0; c < alg.dim(); ++c) basis.at(v1.size() + r, c) = v2[r].coord(c);
    auto solver = invert_over_field(basis.transpose());
    if (!solver) throw std::invalid_argument("mixed_projection_report: split is degenerate");

    MixedProjectionReport rep;
    for (const AlgebraElem &x : s.elements) {
        std::vector<FieldElem> c = solver->apply(x.coords());
        bool in1 = false, in2 = false;
        for (std::size_t t = 0; t < v1.size(); ++t) in1 |= !c[t].is_zero();
        for (std::size_t t = v1.size(); t < alg.dim(); ++t) in2 |= !c[t].is_zero();
        if (in1 && in2) ++rep.mixed_count;
    }
    rep.decomposable = rep.mixed_count == 0;
    return rep;
}

/// The quaternionic-half split of the octonions: span(1,i,j,k) against
/// span(l, il, jl, kl).
inline std::pair<std::vector<AlgebraElem>, std::vector<AlgebraElem>> octonion_half_split() {
    const Algebra &o = Algebra::octonion();
    std::vector<AlgebraElem> lo, hi;
    for (std::size_t t = 0; t < 4; ++t) {
        lo.push_back(AlgebraElem::basis(o, t));
        hi.push_back(AlgebraElem::basis(o, 4 + t));
    }
    return {lo, hi};
}

/// The six defining clauses of a non-crystallographic integral root-shell
/// system, each reported separately.
struct NcAxiomReport {
    bool order_valid = false;
    bool finite = false;
    bool centrally_symmetric = false;
    bool single_norm_shell = false;
    bool reflection_closed = false;
    bool golden_cartan = false;

    bool all() const {
        return order_valid && finite && centrally_symmetric && single_norm_shell &&
               reflection_closed && golden_cartan;
    }
};

inline const RootReport &cached_root_report(const std::string &name) {
    static std::map<std::string, RootReport> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        const Shell *s = nullptr;
        if (name == "h2") {
            s = &h2_model();
        } else if (name == "h3") {
            s = &h3_model();
        } else if (name == "h4") {
            s = &h4_model();
        } else {
            s = &unit_shell(name).shell;
        }
        it = cache.emplace(name, verify_root_shell(*s)).first;
    }
    return it->second;
}

inline NcAxiomReport verify_nc_axioms(const OrderSpec &spec, const Shell &s) {
    NcAxiomReport rep;
    rep.order_valid = verify_order(spec).ok;
    rep.finite = !s.elements.empty();
    rep.single_norm_shell = true;
    for (const AlgebraElem &x : s.elements) {
        if (x.norm() != s.norm_value || !coordinates_of(x, spec).in_order) {
            rep.single_norm_shell = false;
            break;
        }
    }
    RootReport root = verify_root_shell(s);
    rep.centrally_symmetric = root.centrally_symmetric;
    rep.reflection_closed = root.reflection_closed;
    rep.golden_cartan = root.cartan_in_ring;
    return rep;
}

} // namespace golden
