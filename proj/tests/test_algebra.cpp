#include <doctest.h>

#include "golden/algebra.hpp"

using namespace golden;

namespace {

const Algebra &H = Algebra::quaternion();
const Algebra &O = Algebra::octonion();

AlgebraElem quat(Rat w, Rat x, Rat y, Rat z) {
    return AlgebraElem(H, {FieldElem(w, Rat(0)), FieldElem(x, Rat(0)), FieldElem(y, Rat(0)),
                           FieldElem(z, Rat(0))});
}

AlgebraElem rand_oct(SplitMix64 &rng, long span = 2) {
    std::vector<FieldElem> c;
    for (int i = 0; i < 8; ++i)
        c.emplace_back(Rat(rng.range(-span, span)), Rat(rng.range(-span, span)));
    return AlgebraElem(O, std::move(c));
}

} // namespace

TEST_CASE("quaternion relations") {
    AlgebraElem i = AlgebraElem::basis(H, 1), j = AlgebraElem::basis(H, 2),
                k = AlgebraElem::basis(H, 3);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == -AlgebraElem::one(H));
    CHECK((i * j) * k == -AlgebraElem::one(H));
}

TEST_CASE("hurwitz style products keep half-integer coordinates and unit norm") {
    AlgebraElem u = quat(Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2));
    AlgebraElem v = quat(Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2));
    AlgebraElem p = u * v;
    CHECK(u.norm() == FieldElem::one());
    CHECK(v.norm() == FieldElem::one());
    CHECK(p.norm() == FieldElem::one());
    for (const FieldElem &c : p.coords()) {
        CHECK(c.b() == 0);
        CHECK(denominator(c.a()) <= 2);
    }
}

TEST_CASE("q times conj(q) is the scalar norm") {
    SplitMix64 rng(21);
    for (int r = 0; r < 300; ++r) {
        AlgebraElem q = quat(Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4)),
                             Rat(rng.range(-4, 4)));
        CHECK(q * q.conj() == AlgebraElem::scalar(H, q.norm()));
        CHECK(q.conj().norm() == q.norm());
        CHECK(q.conj().trace() == q.trace());
    }
}

TEST_CASE("octonion doubling relations") {
    AlgebraElem i = AlgebraElem::basis(O, 1), j = AlgebraElem::basis(O, 2),
                l = AlgebraElem::basis(O, 4), jl = AlgebraElem::basis(O, 6),
                kl = AlgebraElem::basis(O, 7);
    CHECK(l * l == -AlgebraElem::one(O));
    CHECK(i * jl == -kl);
    CHECK((i * j) * l == kl);

    // quaternionic subalgebra embeds
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            AlgebraElem p = AlgebraElem::basis(O, a) * AlgebraElem::basis(O, b);
            AlgebraElem q = AlgebraElem::basis(H, a) * AlgebraElem::basis(H, b);
            for (std::size_t c = 0; c < 4; ++c) {
                CHECK(p.coord(c) == q.coord(c));
                CHECK(p.coord(4 + c).is_zero());
            }
        }
}

TEST_CASE("norm splits across the doubling") {
    SplitMix64 rng(22);
    for (int r = 0; r < 200; ++r) {
        AlgebraElem x = rand_oct(rng);
        std::vector<FieldElem> lo(x.coords().begin(), x.coords().begin() + 4);
        std::vector<FieldElem> hi(x.coords().begin() + 4, x.coords().end());
        AlgebraElem a(H, lo), b(H, hi);
        CHECK(x.norm() == a.norm() + b.norm());
    }
    AlgebraElem i = AlgebraElem::basis(O, 1);
    CHECK(i.trace().is_zero());
    AlgebraElem h(O, {FieldElem(Rat(1, 2), Rat(0)), FieldElem(Rat(1, 2), Rat(0)),
                      FieldElem(Rat(1, 2), Rat(0)), FieldElem(Rat(1, 2), Rat(0)),
                      FieldElem::zero(), FieldElem::zero(), FieldElem::zero(), FieldElem::zero()});
    CHECK(h.norm() == FieldElem::one());
}

TEST_CASE("polar form and inner product") {
    // icosian basis elements inside H(K)
    AlgebraElem e1 = AlgebraElem::one(H);
    AlgebraElem e2 = AlgebraElem::basis(H, 1);
    AlgebraElem e4(H, {FieldElem(Rat(-1, 2), Rat(0)), FieldElem(Rat(-1, 2), Rat(1, 2)),
                       FieldElem(Rat(0), Rat(-1, 2)), FieldElem::zero()});
    CHECK(polar_form(e1, e1) == FieldElem(Rat(2), Rat(0)));
    CHECK(polar_form(e2, e4) == FieldElem(Rat(-1), Rat(1)));

    SplitMix64 rng(23);
    for (int r = 0; r < 60; ++r) {
        AlgebraElem x = rand_oct(rng), y = rand_oct(rng);
        FieldElem b = polar_form(x, y);
        CHECK(b == polar_form(y, x));
        CHECK(inner_product(x, y) + inner_product(x, y) == b);
        CHECK(polar_form(x, x) == x.norm() + x.norm());
    }
}

namespace {

std::vector<GoldenInt> rand_goct(SplitMix64 &rng, long span = 2) {
    std::vector<GoldenInt> c;
    for (int i = 0; i < 8; ++i) c.emplace_back(Int(rng.range(-span, span)), Int(rng.range(-span, span)));
    return c;
}

GoldenInt golden_pair(const GoldenTable &t, const std::vector<GoldenInt> &a,
                      const std::vector<GoldenInt> &b) {
    GoldenInt acc = GoldenInt::zero();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) acc += a[r] * t.ambient_gram().at(r, c) * b[c];
    return acc;
}

} // namespace

TEST_CASE("associator witness and alternative laws") {
    AlgebraElem i = AlgebraElem::basis(O, 1), j = AlgebraElem::basis(O, 2),
                k = AlgebraElem::basis(O, 3), l = AlgebraElem::basis(O, 4),
                kl = AlgebraElem::basis(O, 7);
    CHECK(associator(i, j, l) == kl + kl);
    CHECK_FALSE(associator(i, j, l).is_zero());
    CHECK(associator(i, j, k).is_zero());

    // field-coordinate route on a sample
    SplitMix64 rng(24);
    for (int r = 0; r < 60; ++r) {
        AlgebraElem x = rand_oct(rng), y = rand_oct(rng);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(y, x, x).is_zero());
    }
    // golden-coordinate route for volume
    const GoldenTable &t = GoldenTable::of(O);
    for (int r = 0; r < 1200; ++r) {
        std::vector<GoldenInt> x = rand_goct(rng), y = rand_goct(rng);
        CHECK(t.mul(x, t.mul(x, y)) == t.mul(t.mul(x, x), y));
        CHECK(t.mul(t.mul(y, x), x) == t.mul(y, t.mul(x, x)));
    }
}

TEST_CASE("norm composition and conjugation anti-automorphism") {
    SplitMix64 rng(25);
    for (int r = 0; r < 60; ++r) {
        AlgebraElem x = rand_oct(rng), y = rand_oct(rng);
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK((x * y).conj() == y.conj() * x.conj());
    }
    // 2N(x) = B(x, x), so norm composition over the golden coordinates reads
    // 2 B(xy, xy) = B(x, x) B(y, y)
    const GoldenTable &t = GoldenTable::of(O);
    for (int r = 0; r < 1200; ++r) {
        std::vector<GoldenInt> x = rand_goct(rng), y = rand_goct(rng);
        std::vector<GoldenInt> xy = t.mul(x, y);
        CHECK(GoldenInt(2, 0) * golden_pair(t, xy, xy) ==
              golden_pair(t, x, x) * golden_pair(t, y, y));
        CHECK(t.conj(xy) == t.mul(t.conj(y), t.conj(x)));
    }
}

TEST_CASE("pairing stability B(gx, y) = B(x, conj(g) y)") {
    SplitMix64 rng(26);
    for (int r = 0; r < 60; ++r) {
        AlgebraElem g = rand_oct(rng, 1), x = rand_oct(rng, 1), y = rand_oct(rng, 1);
        CHECK(polar_form(g * x, y) == polar_form(x, g.conj() * y));
        CHECK(polar_form(x * g, y) == polar_form(x, y * g.conj()));
    }
    const GoldenTable &t = GoldenTable::of(O);
    for (int r = 0; r < 1100; ++r) {
        std::vector<GoldenInt> g = rand_goct(rng, 1), x = rand_goct(rng, 1), y = rand_goct(rng, 1);
        CHECK(golden_pair(t, t.mul(g, x), y) == golden_pair(t, x, t.mul(t.conj(g), y)));
        CHECK(golden_pair(t, t.mul(x, g), y) == golden_pair(t, x, t.mul(y, t.conj(g))));
    }
}

TEST_CASE("decagonal presentation of C") {
    const Algebra &C10 = Algebra::complex_zeta10();
    AlgebraElem z = AlgebraElem::basis(C10, 1);
    // z has order 10: z^5 = -1
    AlgebraElem p = z;
    for (int t = 0; t < 4; ++t) p = p * z;
    CHECK(p == -AlgebraElem::one(C10));
    CHECK(z.norm() == FieldElem::one());
    CHECK(z.trace() == FieldElem::phi());
}

TEST_CASE("eisenstein presentation of C") {
    const Algebra &Cw = Algebra::complex_omega();
    AlgebraElem w = AlgebraElem::basis(Cw, 1);
    AlgebraElem w3 = w * w * w;
    CHECK(w3 == AlgebraElem::one(Cw));
    CHECK(w.norm() == FieldElem::one());
    CHECK(w.trace() == FieldElem(Rat(-1), Rat(0)));
}
