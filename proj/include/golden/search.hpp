#pragma once

#include "golden/shells.hpp"

#include <array>
#include <map>
#include <optional>
#include <thread>

namespace golden {

enum class FilterClass : unsigned {
    NotMixed = 0,
    ConjFail = 1,
    PairingFail = 2,
    NormFail = 3,
    MultFail = 4,
    SquareFail = 5,
    Survivor = 6,
};

inline const char *filter_class_name(FilterClass c) {
    static const char *names[] = {"not_mixed", "conj_fail",   "pairing_fail", "norm_fail",
                                  "mult_fail", "square_fail", "survivor"};
    return names[static_cast<unsigned>(c)];
}

/// Outcome of a search: per-class counts, one canonically smallest witness
/// per class, survivor listing, and auxiliary named counts.
struct SearchReport {
    std::string name;
    std::size_t total = 0;
    std::array<std::size_t, 7> class_counts{};
    std::array<std::optional<std::string>, 7> witnesses;
    std::vector<std::string> survivor_list;
    std::map<std::string, std::size_t> extras;

    std::size_t count(FilterClass c) const { return class_counts[static_cast<unsigned>(c)]; }
    std::size_t survivors() const { return count(FilterClass::Survivor); }
};

namespace detail {

/// Chunked deterministic parallel map-reduce: fn(begin, end, slot) fills
/// per-chunk state; chunks are merged in index order so the result is
/// independent of the worker count.
template <typename State, typename Fn>
std::vector<State> run_chunked(std::size_t total, unsigned workers, Fn &&fn) {
    if (workers == 0) workers = 1;
    std::size_t chunks = std::min<std::size_t>(workers, std::max<std::size_t>(total, 1));
    std::vector<State> states(chunks);
    std::vector<std::thread> threads;
    std::size_t per = total / chunks, extra = total % chunks;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = per + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        threads.emplace_back([&, begin, end, c] { fn(begin, end, states[c]); });
        begin = end;
    }
    for (auto &t : threads) t.join();
    return states;
}

/// F4 = Z[phi]/2 with elements indexed 0, 1, phi, 1+phi.
struct F4Tables {
    unsigned char mul[4][4];

    F4Tables() {
        for (unsigned x = 0; x < 4; ++x)
            for (unsigned y = 0; y < 4; ++y) {
                ResidueF4 p = ResidueF4::by_index(x) * ResidueF4::by_index(y);
                mul[x][y] = static_cast<unsigned char>(p.index());
            }
    }
};

inline unsigned char f4_index(const GoldenInt &g) {
    return static_cast<unsigned char>(reduce_mod2(g).index());
}

inline GoldenInt f4_lift(unsigned char idx) {
    static const long tab[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    return GoldenInt(tab[idx][0], tab[idx][1]);
}

inline std::string f4_vector_str(const std::vector<unsigned char> &v) {
    static const char *names[4] = {"0", "1", "phi", "1+phi"};
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += names[v[i]];
    }
    out += "]";
    return out;
}

inline std::string f5_vector_str(const std::vector<unsigned> &v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::string(1, char('0' + v[i]));
    }
    out += "]";
    return out;
}

/// Row-reduced span over F5 with cheap insertion, used for the stable
/// closure search on the discriminant quotient.
struct F5Span {
    unsigned char rows[8][8] = {};
    int pivot_col[8] = {-1, -1, -1, -1, -1, -1, -1, -1};
    std::size_t dim = 0;

    static unsigned char inv5(unsigned char x) {
        static const unsigned char tab[5] = {0, 1, 3, 2, 4};
        return tab[x];
    }

    bool insert(std::array<unsigned char, 8> v) {
        for (std::size_t r = 0; r < dim; ++r) {
            unsigned char c = v[pivot_col[r]];
            if (c == 0) continue;
            for (int t = 0; t < 8; ++t) v[t] = (v[t] + (5 - c) * rows[r][t]) % 5;
        }
        int lead = -1;
        for (int t = 0; t < 8; ++t)
            if (v[t] != 0) {
                lead = t;
                break;
            }
        if (lead < 0) return false;
        unsigned char inv = inv5(v[lead]);
        for (int t = 0; t < 8; ++t) v[t] = v[t] * inv % 5;
        for (std::size_t t = 0; t < 8; ++t) rows[dim][t] = v[t];
        pivot_col[dim] = lead;
        ++dim;
        return true;
    }
};

} // namespace detail

/// Shared exact data for the searches over the icosian double: structure
/// tables, conjugation and multiplication matrices, the polar Gram with its
/// mod-2 and mod-sqrt5 reductions, and the H4 shell in basis coordinates.
class SearchContext {
public:
    static const SearchContext &instance() {
        static SearchContext ctx;
        return ctx;
    }

    const OrderSpec &order;
    StructureTables tables;
    Matrix<GoldenInt> gram;                 // polar Gram, 8x8
    std::vector<std::vector<GoldenInt>> conj_coeff; // conj_coeff[i][k]: conj(g_i) = sum_k . g_k
    unsigned char gram2[8][8];              // F4 indices
    unsigned char conj2[8][8];              // conj2[i][k]
    unsigned char gram5[8][8];
    unsigned char left2[8][8][8];           // left2[j][i][k]: g_j g_i mod 2
    unsigned char right2[8][8][8];          // right2[j][i][k]: g_i g_j mod 2
    std::vector<std::vector<GoldenInt>> h4_coords; // 120 icosian shell elements in e-basis
    detail::F4Tables f4;

    /// Golden coordinate matrix of left multiplication by the element with
    /// basis coordinates coeff.
    Matrix<GoldenInt> left_mult_matrix(const std::vector<GoldenInt> &coeff) const {
        Matrix<GoldenInt> m(8, 8);
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t k = 0; k < 8; ++k)
                    m.at(k, i) += coeff[j] * tables.mult[j][i][k];
        return m;
    }
    Matrix<GoldenInt> right_mult_matrix(const std::vector<GoldenInt> &coeff) const {
        Matrix<GoldenInt> m(8, 8);
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t k = 0; k < 8; ++k)
                    m.at(k, i) += coeff[j] * tables.mult[i][j][k];
        return m;
    }
    Matrix<GoldenInt> conj_matrix() const {
        Matrix<GoldenInt> m(8, 8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t k = 0; k < 8; ++k) m.at(k, i) = conj_coeff[i][k];
        return m;
    }
    std::vector<GoldenInt> basis_unit_coords(std::size_t j) const {
        std::vector<GoldenInt> c(8, GoldenInt::zero());
        c[j] = GoldenInt::one();
        return c;
    }

private:
    SearchContext() : order(catalog("icosian_double")) {
        const VerifyOutcome &v = verify_order_cached(order);
        if (!v.ok)
            throw InconsistencyError("SearchContext: icosian double fails the order criterion");
        tables = v.tables;
        conj_coeff = tables.conj;
        gram = polar_gram_cached(order).polar;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                gram2[i][j] = detail::f4_index(gram.at(i, j));
                gram5[i][j] = static_cast<unsigned char>(reduce_mod_sqrt5(gram.at(i, j)).value());
                conj2[i][j] = detail::f4_index(conj_coeff[i][j]);
            }
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t k = 0; k < 8; ++k) {
                    left2[j][i][k] = detail::f4_index(tables.mult[j][i][k]);
                    right2[j][i][k] = detail::f4_index(tables.mult[i][j][k]);
                }
        const Shell &h4 = unit_shell("icosian").shell;
        const OrderSpec &icosian = catalog("icosian");
        for (const AlgebraElem &x : h4.elements) {
            Coordinates c = coordinates_of(x, icosian);
            if (!c.in_order)
                throw InconsistencyError("SearchContext: H4 shell element outside the icosian ring");
            h4_coords.push_back(c.ring_coords);
        }
    }
};

/// Strict denominator-two search (P4): classifies all 21845 projective
/// lines of (Z[phi]/2)^8 by the first failing filter among
///   F1 mixed coset, F2 conjugation stability, F3 integral polar pairing,
///   F4 integral norm, F5 product closure, F6 square closure,
/// in a configurable order (the survivor set does not depend on the order).
inline SearchReport den2_search(unsigned workers = 1,
                                std::vector<FilterClass> filter_order = {
                                    FilterClass::NotMixed, FilterClass::ConjFail,
                                    FilterClass::PairingFail, FilterClass::NormFail,
                                    FilterClass::MultFail, FilterClass::SquareFail}) {
    const SearchContext &ctx = SearchContext::instance();
    const auto &mul = ctx.f4.mul;

    // materialize the projective representatives for a stable index order
    std::vector<std::vector<unsigned char>> lines;
    lines.reserve(21845);
    for_each_projective_line(4, 8, [&](const std::vector<unsigned> &v) {
        std::vector<unsigned char> r(8);
        for (int t = 0; t < 8; ++t) r[t] = static_cast<unsigned char>(v[t]);
        lines.push_back(std::move(r));
    });

    auto is_mixed = [](const std::vector<unsigned char> &v) {
        bool lo = false, hi = false;
        for (int t = 0; t < 4; ++t) lo |= v[t] != 0;
        for (int t = 4; t < 8; ++t) hi |= v[t] != 0;
        return lo && hi;
    };
    auto scalar_multiple = [&](const std::vector<unsigned char> &w,
                               const std::vector<unsigned char> &v) {
        for (unsigned char lam = 0; lam < 4; ++lam) {
            bool ok = true;
            for (int t = 0; t < 8 && ok; ++t) ok = (w[t] == mul[lam][v[t]]);
            if (ok) return true;
        }
        return false;
    };
    auto conj_stable = [&](const std::vector<unsigned char> &v) {
        std::vector<unsigned char> w(8, 0);
        for (int i = 0; i < 8; ++i) {
            if (v[i] == 0) continue;
            for (int k = 0; k < 8; ++k) w[k] ^= mul[v[i]][ctx.conj2[i][k]];
        }
        // nonzero scalar; lambda = 0 would force v = 0
        for (unsigned char lam = 1; lam < 4; ++lam) {
            bool ok = true;
            for (int t = 0; t < 8 && ok; ++t) ok = (w[t] == mul[lam][v[t]]);
            if (ok) return true;
        }
        return false;
    };
    auto paired = [&](const std::vector<unsigned char> &v) {
        for (int i = 0; i < 8; ++i) {
            unsigned char acc = 0;
            for (int j = 0; j < 8; ++j) acc ^= mul[ctx.gram2[i][j]][v[j]];
            if (acc != 0) return false;
        }
        return true;
    };
    auto lift_coords = [&](const std::vector<unsigned char> &v) {
        std::vector<GoldenInt> c;
        c.reserve(8);
        for (int t = 0; t < 8; ++t) c.push_back(detail::f4_lift(v[t]));
        return c;
    };
    auto norm_integral = [&](const std::vector<unsigned char> &v) {
        // N(v/2) = (c^T G c) / 8 must land in Z[phi]
        std::vector<GoldenInt> c = lift_coords(v);
        GoldenInt q = GoldenInt::zero();
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) q += c[i] * ctx.gram.at(i, j) * c[j];
        return q.divisible_by_int(8);
    };
    auto mult_closed = [&](const std::vector<unsigned char> &v) {
        // (v/2) g_j and g_j (v/2) must stay in G_0 + Z[phi] v/2
        std::vector<unsigned char> w(8);
        for (int j = 0; j < 8; ++j) {
            for (int k = 0; k < 8; ++k) {
                unsigned char acc = 0;
                for (int i = 0; i < 8; ++i) acc ^= mul[v[i]][ctx.right2[j][i][k]];
                w[k] = acc;
            }
            if (!scalar_multiple(w, v)) return false;
            for (int k = 0; k < 8; ++k) {
                unsigned char acc = 0;
                for (int i = 0; i < 8; ++i) acc ^= mul[v[i]][ctx.left2[j][i][k]];
                w[k] = acc;
            }
            if (!scalar_multiple(w, v)) return false;
        }
        return true;
    };
    auto square_closed = [&](const std::vector<unsigned char> &v) {
        // (v/2)^2 in G_0 + Z[phi] v/2: coords(v^2) = 2 alpha v mod 4
        std::vector<GoldenInt> c = lift_coords(v);
        std::vector<GoldenInt> s(8, GoldenInt::zero());
        for (int i = 0; i < 8; ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; j < 8; ++j) {
                if (c[j].is_zero()) continue;
                GoldenInt f = c[i] * c[j];
                for (int k = 0; k < 8; ++k) s[k] += f * ctx.tables.mult[i][j][k];
            }
        }
        for (unsigned char alpha = 0; alpha < 4; ++alpha) {
            GoldenInt two_alpha = GoldenInt(2, 0) * detail::f4_lift(alpha);
            bool ok = true;
            for (int k = 0; k < 8 && ok; ++k)
                ok = (s[k] - two_alpha * c[k]).divisible_by_int(4);
            if (ok) return true;
        }
        return false;
    };

    auto passes = [&](FilterClass f, const std::vector<unsigned char> &v) {
        switch (f) {
            case FilterClass::NotMixed: return is_mixed(v);
            case FilterClass::ConjFail: return conj_stable(v);
            case FilterClass::PairingFail: return paired(v);
            case FilterClass::NormFail: return norm_integral(v);
            case FilterClass::MultFail: return mult_closed(v);
            case FilterClass::SquareFail: return square_closed(v);
            default: return true;
        }
    };

    // one representative per class carries the explicit obstruction
    auto describe = [&](FilterClass cls, const std::vector<unsigned char> &v) {
        std::string out = detail::f4_vector_str(v);
        if (cls == FilterClass::ConjFail) {
            std::vector<unsigned char> w(8, 0);
            for (int i = 0; i < 8; ++i) {
                if (v[i] == 0) continue;
                for (int k = 0; k < 8; ++k) w[k] ^= mul[v[i]][ctx.conj2[i][k]];
            }
            out += " conj(v)=" + detail::f4_vector_str(w) + " not proportional to v";
        } else if (cls == FilterClass::PairingFail) {
            for (int i = 0; i < 8; ++i) {
                unsigned char acc = 0;
                for (int j = 0; j < 8; ++j) acc ^= mul[ctx.gram2[i][j]][v[j]];
                if (acc != 0) {
                    out += " B(v,g" + std::to_string(i + 1) + ") = " +
                           detail::f4_vector_str({acc}) + " mod 2";
                    break;
                }
            }
        } else if (cls == FilterClass::NotMixed) {
            bool lo = false;
            for (int t = 0; t < 4; ++t) lo |= v[t] != 0;
            out += lo ? " (quaternionic half)" : " (ell half)";
        }
        return out;
    };

    struct ChunkState {
        std::array<std::size_t, 7> counts{};
        std::array<std::optional<std::pair<std::size_t, std::string>>, 7> wit;
        std::vector<std::string> survivors;
        std::size_t not_mixed_low = 0, not_mixed_high = 0;
    };
    auto states = detail::run_chunked<ChunkState>(
        lines.size(), workers, [&](std::size_t b, std::size_t e, ChunkState &st) {
            for (std::size_t idx = b; idx < e; ++idx) {
                const auto &v = lines[idx];
                FilterClass cls = FilterClass::Survivor;
                for (FilterClass f : filter_order) {
                    if (!passes(f, v)) {
                        cls = f;
                        break;
                    }
                }
                unsigned ci = static_cast<unsigned>(cls);
                ++st.counts[ci];
                if (!st.wit[ci]) st.wit[ci] = {idx, describe(cls, v)};
                if (cls == FilterClass::Survivor) st.survivors.push_back(detail::f4_vector_str(v));
                if (cls == FilterClass::NotMixed) {
                    bool lo = false;
                    for (int t = 0; t < 4; ++t) lo |= v[t] != 0;
                    (lo ? st.not_mixed_low : st.not_mixed_high) += 1;
                }
            }
        });

    SearchReport rep;
    rep.name = "den2";
    rep.total = lines.size();
    std::size_t lo = 0, hi = 0;
    for (const auto &st : states) {
        for (unsigned c = 0; c < 7; ++c) {
            rep.class_counts[c] += st.counts[c];
            if (st.wit[c]) {
                if (!rep.witnesses[c]) rep.witnesses[c] = st.wit[c]->second;
            }
        }
        for (const auto &s : st.survivors) rep.survivor_list.push_back(s);
        lo += st.not_mixed_low;
        hi += st.not_mixed_high;
    }
    rep.extras["not_mixed_low_half"] = lo;
    rep.extras["not_mixed_high_half"] = hi;
    return rep;
}

/// Ramified sqrt5 search (P5): all 97656 projective lines of F5^8, mixed
/// count, and the polar-pairing filter mod sqrt5; the Gram rank certifies
/// that the radical is trivial.
inline SearchReport sqrt5_search(unsigned workers = 1) {
    const SearchContext &ctx = SearchContext::instance();

    std::vector<std::vector<unsigned char>> lines;
    lines.reserve(97656);
    for_each_projective_line(5, 8, [&](const std::vector<unsigned> &v) {
        std::vector<unsigned char> r(8);
        for (int t = 0; t < 8; ++t) r[t] = static_cast<unsigned char>(v[t]);
        lines.push_back(std::move(r));
    });

    struct ChunkState {
        std::array<std::size_t, 7> counts{};
        std::array<std::optional<std::pair<std::size_t, std::string>>, 7> wit;
        std::vector<std::string> survivors;
        std::size_t mixed = 0;
    };
    auto states = detail::run_chunked<ChunkState>(
        lines.size(), workers, [&](std::size_t b, std::size_t e, ChunkState &st) {
            for (std::size_t idx = b; idx < e; ++idx) {
                const auto &v = lines[idx];
                bool lo = false, hi = false;
                for (int t = 0; t < 4; ++t) lo |= v[t] != 0;
                for (int t = 4; t < 8; ++t) hi |= v[t] != 0;
                bool mixed = lo && hi;
                if (mixed) ++st.mixed;
                FilterClass cls;
                int bad_pairing = -1;
                if (!mixed) {
                    cls = FilterClass::NotMixed;
                } else {
                    bool pass = true;
                    for (int i = 0; i < 8 && pass; ++i) {
                        unsigned acc = 0;
                        for (int j = 0; j < 8; ++j) acc += ctx.gram5[i][j] * v[j];
                        if (acc % 5 != 0) {
                            pass = false;
                            bad_pairing = i;
                        }
                    }
                    cls = pass ? FilterClass::Survivor : FilterClass::PairingFail;
                }
                unsigned ci = static_cast<unsigned>(cls);
                ++st.counts[ci];
                std::vector<unsigned> vv(v.begin(), v.end());
                if (!st.wit[ci]) {
                    std::string w = detail::f5_vector_str(vv);
                    if (bad_pairing >= 0)
                        w += " B(v,g" + std::to_string(bad_pairing + 1) + ") != 0 mod sqrt5";
                    st.wit[ci] = {idx, w};
                }
                if (cls == FilterClass::Survivor)
                    st.survivors.push_back(detail::f5_vector_str(vv));
            }
        });

    SearchReport rep;
    rep.name = "sqrt5";
    rep.total = lines.size();
    std::size_t mixed = 0;
    for (const auto &st : states) {
        for (unsigned c = 0; c < 7; ++c) {
            rep.class_counts[c] += st.counts[c];
            if (st.wit[c] && !rep.witnesses[c]) rep.witnesses[c] = st.wit[c]->second;
        }
        for (const auto &s : st.survivors) rep.survivor_list.push_back(s);
        mixed += st.mixed;
    }
    rep.extras["mixed_lines"] = mixed;

    std::vector<std::vector<unsigned>> g5(8, std::vector<unsigned>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g5[i][j] = ctx.gram5[i][j];
    rep.extras["gram_rank_mod_sqrt5"] = detail::rank_mod_p(g5, 5);
    return rep;
}

enum class HalfRootMode { Strict, Trace };

/// Mixed half-root scan over all ordered pairs (a, b) of H4 shell elements,
/// v = a + b*ell. In strict mode every pair has norm exactly 1/2 and fails
/// Z[phi]-integrality; in trace mode the rational traces pass first tests
/// but phi-closure of the module kills every coset.
inline SearchReport half_root_scan(HalfRootMode mode, unsigned workers = 1) {
    const SearchContext &ctx = SearchContext::instance();
    const std::size_t n = ctx.h4_coords.size();
    const FieldElem half(Rat(1, 2), Rat(0));

    struct ChunkState {
        std::size_t norm_half = 0;         // pairs with N(v/2) = 1/2 exactly
        std::size_t strict_integral = 0;   // pairs with N(v/2) in Z[phi]
        std::size_t trace_one = 0;         // pairs with Tr N(v/2) = 1
        std::size_t polar_raw_pass = 0;    // pairs passing the trace polar filter
        std::map<std::vector<unsigned char>, std::size_t> coset_sizes;
        std::map<std::vector<unsigned char>, std::size_t> coset_first; // first pair index
        std::set<std::vector<unsigned char>> polar_cosets;
        std::size_t module_survivors = 0;
    };

    auto states = detail::run_chunked<ChunkState>(
        n * n, workers, [&](std::size_t b, std::size_t e, ChunkState &st) {
            std::vector<GoldenInt> c(8);
            for (std::size_t idx = b; idx < e; ++idx) {
                std::size_t ai = idx / n, bi = idx % n;
                for (int t = 0; t < 4; ++t) {
                    c[t] = ctx.h4_coords[ai][t];
                    c[4 + t] = ctx.h4_coords[bi][t];
                }
                // B(v, g_i) = (G c)_i and N(v) = c^T G c / 2
                std::vector<GoldenInt> gc(8, GoldenInt::zero());
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) gc[i] += ctx.gram.at(i, j) * c[j];
                GoldenInt ctgc = GoldenInt::zero();
                for (int i = 0; i < 8; ++i) ctgc += c[i] * gc[i];
                // N(v/2) = c^T G c / 8 as an exact field value
                FieldElem norm_vhalf(Rat(ctgc.a(), 8), Rat(ctgc.b(), 8));
                if (norm_vhalf == half) ++st.norm_half;
                if (norm_vhalf.is_golden_integer()) ++st.strict_integral;
                if (norm_vhalf.trace() == 1) ++st.trace_one;

                // coset of v modulo 2 G_0
                std::vector<unsigned char> key(8);
                for (int t = 0; t < 8; ++t) key[t] = detail::f4_index(c[t]);
                ++st.coset_sizes[key];
                if (!st.coset_first.count(key)) st.coset_first[key] = idx;

                if (mode == HalfRootMode::Trace) {
                    // Tr B(v/2, g_i) = Tr((G c)_i) / 2 must be integral
                    bool pass = true;
                    for (int i = 0; i < 8 && pass; ++i) pass = (gc[i].trace() % 2 == 0);
                    if (pass) {
                        ++st.polar_raw_pass;
                        st.polar_cosets.insert(key);
                    }
                    // module closure: Z[phi] v/2 needs lambda_member(N(v/2))
                    if (pass && lambda_member(norm_vhalf)) ++st.module_survivors;
                }
            }
        });

    SearchReport rep;
    rep.name = mode == HalfRootMode::Strict ? "half-root-strict" : "half-root-trace";
    rep.total = n * n;

    std::map<std::vector<unsigned char>, std::size_t> coset_sizes;
    std::map<std::vector<unsigned char>, std::size_t> coset_first;
    std::set<std::vector<unsigned char>> polar_cosets;
    std::size_t norm_half = 0, strict_integral = 0, trace_one = 0, polar_raw = 0, module_surv = 0;
    for (const auto &st : states) {
        norm_half += st.norm_half;
        strict_integral += st.strict_integral;
        trace_one += st.trace_one;
        polar_raw += st.polar_raw_pass;
        module_surv += st.module_survivors;
        for (const auto &[k, v] : st.coset_sizes) coset_sizes[k] += v;
        for (const auto &[k, v] : st.coset_first) {
            auto it = coset_first.find(k);
            if (it == coset_first.end() || v < it->second) coset_first[k] = v;
        }
        for (const auto &k : st.polar_cosets) polar_cosets.insert(k);
    }
    for (const auto &[k, v] : coset_sizes) {
        if (v != 4)
            throw InconsistencyError("half_root_scan: coset of size " + std::to_string(v));
    }

    rep.extras["pairs"] = n * n;
    rep.extras["norm_exactly_half"] = norm_half;
    rep.extras["cosets"] = coset_sizes.size();
    if (mode == HalfRootMode::Strict) {
        rep.class_counts[static_cast<unsigned>(FilterClass::NormFail)] =
            rep.total - strict_integral;
        rep.class_counts[static_cast<unsigned>(FilterClass::Survivor)] = strict_integral;
        rep.extras["strict_survivors"] = strict_integral;
        if (n > 0) {
            // witness: the first pair, rendered through its double coordinates
            std::vector<GoldenInt> c(8);
            for (int t = 0; t < 4; ++t) {
                c[t] = ctx.h4_coords[0][t];
                c[4 + t] = ctx.h4_coords[0][t];
            }
            std::string w = "v=(";
            for (int t = 0; t < 8; ++t) {
                if (t) w += ", ";
                w += c[t].str();
            }
            w += ")";
            rep.witnesses[static_cast<unsigned>(FilterClass::NormFail)] = w;
        }
    } else {
        rep.extras["trace_norm_one"] = trace_one;
        rep.extras["polar_pass_raw"] = polar_raw;
        rep.extras["polar_pass_cosets"] = polar_cosets.size();
        rep.extras["module_survivors"] = module_surv;
        rep.class_counts[static_cast<unsigned>(FilterClass::Survivor)] = module_surv;
        rep.class_counts[static_cast<unsigned>(FilterClass::NormFail)] = rep.total - module_surv;

        // phi-closure on one representative per coset: recompute
        // N(phi v / 2) from the coordinates and test its rational trace
        std::size_t rep_failures = 0;
        for (const auto &[key, first_idx] : coset_first) {
            (void)key;
            std::size_t ai = first_idx / n, bi = first_idx % n;
            std::vector<GoldenInt> c(8);
            for (int t = 0; t < 4; ++t) {
                c[t] = GoldenInt::phi() * ctx.h4_coords[ai][t];
                c[4 + t] = GoldenInt::phi() * ctx.h4_coords[bi][t];
            }
            GoldenInt q = GoldenInt::zero();
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) q += c[i] * ctx.gram.at(i, j) * c[j];
            FieldElem norm_phi_vhalf(Rat(q.a(), 8), Rat(q.b(), 8));
            if (!is_integer(norm_phi_vhalf.trace())) ++rep_failures;
        }
        rep.extras["phi_closure_rep_failures"] = rep_failures;
    }
    return rep;
}

/// Discriminant-tower search (P6): builds the induced quotient actions of
/// conjugation, left and right multiplication by the eight basis units, and
/// the phi scalar; for every isotropic line of the discriminant form the
/// smallest stable subspace is closed; a candidate would be a nonzero,
/// totally isotropic, stable subspace.
inline SearchReport tower_search(unsigned workers = 1) {
    const SearchContext &ctx = SearchContext::instance();
    const TraceGram &tg = trace_gram_cached(ctx.order);
    DiscriminantGroup dg(tg.gram);
    if (dg.quotient_rank() != 8)
        throw InconsistencyError("tower_search: discriminant quotient rank is not 8");
    DiscriminantForm form = discriminant_form(dg);
    FormClassification cls = discriminant_form_classify(form);

    // induced action matrices on the quotient
    std::vector<std::vector<std::vector<unsigned>>> maps;
    maps.push_back(induced_quotient_map(golden_to_z_matrix(ctx.conj_matrix()), dg));
    for (std::size_t j = 0; j < 8; ++j) {
        maps.push_back(induced_quotient_map(
            golden_to_z_matrix(ctx.left_mult_matrix(ctx.basis_unit_coords(j))), dg));
        maps.push_back(induced_quotient_map(
            golden_to_z_matrix(ctx.right_mult_matrix(ctx.basis_unit_coords(j))), dg));
    }

    // phi acts as the scalar 3; sqrt5 annihilates
    auto phi_ind = induced_quotient_map(phi_action_matrix(8), dg);
    bool phi_is_three = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) phi_is_three &= phi_ind[i][j] == (i == j ? 3u : 0u);
    if (!phi_is_three) throw InconsistencyError("tower_search: phi does not act as scalar 3");
    Matrix<Int> sqrt5m = phi_action_matrix(8);
    for (std::size_t i = 0; i < 16; ++i) {
        for (std::size_t j = 0; j < 16; ++j) sqrt5m.at(i, j) = 2 * sqrt5m.at(i, j);
        sqrt5m.at(i, i) -= 1;
    }
    auto sqrt5_ind = induced_quotient_map(sqrt5m, dg);
    bool sqrt5_zero = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) sqrt5_zero &= sqrt5_ind[i][j] == 0u;
    if (!sqrt5_zero) throw InconsistencyError("tower_search: sqrt5 does not annihilate");

    // bilinear compatibility b(L_g s, t) = b(s, L_conj(g) t) mod 5 on basis vectors
    for (std::size_t j = 0; j < 8; ++j) {
        auto lg = induced_quotient_map(
            golden_to_z_matrix(ctx.left_mult_matrix(ctx.basis_unit_coords(j))), dg);
        auto lgbar =
            induced_quotient_map(golden_to_z_matrix(ctx.left_mult_matrix(ctx.conj_coeff[j])), dg);
        for (int s = 0; s < 8; ++s)
            for (int t = 0; t < 8; ++t) {
                std::vector<unsigned> es(8, 0), et(8, 0);
                es[s] = 1;
                et[t] = 1;
                std::vector<unsigned> ls(8, 0), lt(8, 0);
                for (int r = 0; r < 8; ++r)
                    for (int c = 0; c < 8; ++c) {
                        ls[r] = (ls[r] + lg[r][c] * es[c]) % 5;
                        lt[r] = (lt[r] + lgbar[r][c] * et[c]) % 5;
                    }
                if (form.b_of(ls, et) != form.b_of(es, lt))
                    throw InconsistencyError("tower_search: induced pairing compatibility fails");
            }
    }

    // collect the isotropic lines
    std::vector<std::array<unsigned char, 8>> isotropic;
    for_each_projective_line(5, 8, [&](const std::vector<unsigned> &v) {
        if (form.q_of(v) == 0) {
            std::array<unsigned char, 8> a{};
            for (int t = 0; t < 8; ++t) a[t] = static_cast<unsigned char>(v[t]);
            isotropic.push_back(a);
        }
    });
    if (isotropic.size() != cls.isotropic_lines)
        throw InconsistencyError("tower_search: isotropic enumeration mismatch");

    struct ChunkState {
        std::map<std::size_t, std::size_t> dim_histogram;
        std::size_t candidates = 0;
        std::vector<std::string> candidate_witnesses;
    };
    auto states = detail::run_chunked<ChunkState>(
        isotropic.size(), workers, [&](std::size_t b, std::size_t e, ChunkState &st) {
            for (std::size_t idx = b; idx < e; ++idx) {
                detail::F5Span span;
                std::vector<std::array<unsigned char, 8>> queue;
                span.insert(isotropic[idx]);
                queue.push_back(isotropic[idx]);
                while (!queue.empty() && span.dim < 8) {
                    std::array<unsigned char, 8> v = queue.back();
                    queue.pop_back();
                    for (const auto &m : maps) {
                        std::array<unsigned char, 8> w{};
                        for (int r = 0; r < 8; ++r) {
                            unsigned acc = 0;
                            for (int c = 0; c < 8; ++c) acc += m[r][c] * v[c];
                            w[r] = static_cast<unsigned char>(acc % 5);
                        }
                        if (span.insert(w)) queue.push_back(w);
                        if (span.dim == 8) break;
                    }
                }
                ++st.dim_histogram[span.dim];
                if (span.dim < 8) {
                    // candidate requires total isotropy of the stable span
                    bool totally_isotropic = true;
                    for (std::size_t r = 0; r < span.dim && totally_isotropic; ++r) {
                        std::vector<unsigned> vr(span.rows[r], span.rows[r] + 8);
                        if (form.q_of(vr) != 0) totally_isotropic = false;
                        for (std::size_t s = r + 1; s < span.dim && totally_isotropic; ++s) {
                            std::vector<unsigned> vs(span.rows[s], span.rows[s] + 8);
                            if (form.b_of(vr, vs) != 0) totally_isotropic = false;
                        }
                    }
                    if (totally_isotropic) {
                        ++st.candidates;
                        std::vector<unsigned> vv(isotropic[idx].begin(), isotropic[idx].end());
                        st.candidate_witnesses.push_back(detail::f5_vector_str(vv));
                    }
                }
            }
        });

    SearchReport rep;
    rep.name = "tower";
    rep.total = cls.total_lines;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t candidates = 0;
    for (const auto &st : states) {
        for (const auto &[d, c] : st.dim_histogram) histogram[d] += c;
        candidates += st.candidates;
        for (const auto &w : st.candidate_witnesses) rep.survivor_list.push_back(w);
    }
    rep.class_counts[static_cast<unsigned>(FilterClass::Survivor)] = candidates;
    rep.extras["isotropic_lines"] = isotropic.size();
    rep.extras["plus_type"] = cls.plus_type ? 1 : 0;
    rep.extras["hyperbolic_rank"] = cls.hyperbolic_rank;
    rep.extras["phi_scalar"] = 3;
    rep.extras["sqrt5_annihilates"] = 1;
    rep.extras["candidates"] = candidates;
    for (const auto &[d, c] : histogram)
        rep.extras["closure_dim_" + std::to_string(d)] = c;

    // the full quotient is not totally isotropic: exhibit a witness
    for (int i = 0; i < 8; ++i) {
        std::vector<unsigned> e(8, 0);
        e[i] = 1;
        if (form.q_of(e) != 0) {
            std::vector<unsigned> vv(e.begin(), e.end());
            rep.witnesses[static_cast<unsigned>(FilterClass::NormFail)] =
                detail::f5_vector_str(vv);
            break;
        }
    }
    rep.extras["quotient_not_totally_isotropic"] =
        rep.witnesses[static_cast<unsigned>(FilterClass::NormFail)] ? 1 : 0;
    return rep;
}

} // namespace golden
