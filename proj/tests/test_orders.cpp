#include <doctest.h>

#include "golden/orders.hpp"

using namespace golden;

namespace {

AlgebraElem quat(Rat w, Rat x, Rat y, Rat z) {
    const Algebra &H = Algebra::quaternion();
    return AlgebraElem(H, {FieldElem(w, Rat(0)), FieldElem(x, Rat(0)), FieldElem(y, Rat(0)),
                           FieldElem(z, Rat(0))});
}

} // namespace

TEST_CASE("every catalog order passes the order criterion") {
    for (const std::string &name : catalog_names()) {
        CAPTURE(name);
        const OrderSpec &spec = catalog(name);
        VerifyOutcome v = verify_order(spec);
        CHECK_MESSAGE(v.ok, name, ": ", v.ok ? "" : v.violation.describe());
        REQUIRE(v.tables.mult.size() == spec.rank());
        // the tables reproduce the basis products exactly
        for (std::size_t i = 0; i < spec.rank(); ++i)
            for (std::size_t j = 0; j < spec.rank(); ++j) {
                AlgebraElem rebuilt = spec.from_ring_coordinates(v.tables.mult[i][j]);
                CHECK(rebuilt == spec.basis()[i] * spec.basis()[j]);
            }
        for (std::size_t i = 0; i < spec.rank(); ++i) {
            AlgebraElem rebuilt = spec.from_ring_coordinates(v.tables.conj[i]);
            CHECK(rebuilt == spec.basis()[i].conj());
        }
    }
}

TEST_CASE("icosian basis elements are unit icosians") {
    const OrderSpec &icosian = catalog("icosian");
    for (const AlgebraElem &e : icosian.basis()) CHECK(e.norm() == FieldElem::one());
}

TEST_CASE("icosian double is closed in rank 8") {
    const OrderSpec &g0 = catalog("icosian_double");
    CHECK(g0.rank() == 8);
    VerifyOutcome v = verify_order(g0);
    REQUIRE(v.ok);
    // norm splits as N(a) + N(b) on random module elements
    SplitMix64 rng(31);
    const Algebra &H = Algebra::quaternion();
    for (int r = 0; r < 100; ++r) {
        std::vector<GoldenInt> c;
        for (int t = 0; t < 8; ++t) c.emplace_back(Int(rng.range(-2, 2)), Int(rng.range(-2, 2)));
        AlgebraElem x = g0.from_ring_coordinates(c);
        std::vector<FieldElem> lo(x.coords().begin(), x.coords().begin() + 4);
        std::vector<FieldElem> hi(x.coords().begin() + 4, x.coords().end());
        CHECK(x.norm() == AlgebraElem(H, lo).norm() + AlgebraElem(H, hi).norm());
    }
}

TEST_CASE("a non-closed span is rejected with the offending coefficient") {
    const Algebra &H = Algebra::quaternion();
    std::vector<AlgebraElem> basis = {
        AlgebraElem::one(H),
        AlgebraElem::basis(H, 1),
        AlgebraElem::basis(H, 2),
        quat(Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)),
    };
    OrderSpec spec("bad-hamilton", RingTag::Z, H, basis);
    VerifyOutcome v = verify_order(spec);
    REQUIRE_FALSE(v.ok);
    CHECK(denominator(v.violation.coefficient.a()) == 2);
}

TEST_CASE("a linearly dependent basis is rejected outright") {
    const Algebra &H = Algebra::quaternion();
    std::vector<AlgebraElem> dependent = {
        AlgebraElem::one(H),
        AlgebraElem::basis(H, 1),
        AlgebraElem::basis(H, 2),
        quat(Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)), // (1 + i)/2 is in span(1, i)
    };
    CHECK_THROWS_AS(OrderSpec("degenerate", RingTag::Z, H, dependent), std::invalid_argument);
}

TEST_CASE("coordinates in the icosian basis") {
    const OrderSpec &icosian = catalog("icosian");
    AlgebraElem j = AlgebraElem::basis(Algebra::quaternion(), 2);
    Coordinates cj = coordinates_of(j, icosian);
    REQUIRE(cj.in_order);
    CHECK(cj.ring_coords == std::vector<GoldenInt>{GoldenInt(1, -1), GoldenInt(2, -1),
                                                   GoldenInt(0, 0), GoldenInt(2, -2)});
    AlgebraElem k = AlgebraElem::basis(Algebra::quaternion(), 3);
    Coordinates ck = coordinates_of(k, icosian);
    REQUIRE(ck.in_order);
    CHECK(ck.ring_coords == std::vector<GoldenInt>{GoldenInt(-2, 1), GoldenInt(-3, 1),
                                                   GoldenInt(2, 0), GoldenInt(-2, 2)});
}

TEST_CASE("half a mixed sum is not in the icosian double") {
    const OrderSpec &g0 = catalog("icosian_double");
    // (1 + l)/2 with 1, l both unit octonions
    AlgebraElem one = AlgebraElem::one(Algebra::octonion());
    AlgebraElem ell = AlgebraElem::basis(Algebra::octonion(), 4);
    Coordinates c = coordinates_of((one + ell).half(), g0);
    CHECK_FALSE(c.in_order);
    CHECK(c.field_coords.size() == 8);
}

TEST_CASE("identity coordinates in every catalog order") {
    for (const std::string &name : catalog_names()) {
        const OrderSpec &spec = catalog(name);
        Coordinates c = coordinates_of(AlgebraElem::one(spec.algebra()), spec);
        REQUIRE(c.in_order);
        CHECK(c.ring_coords[0] == GoldenInt::one());
        for (std::size_t r = 1; r < spec.rank(); ++r) CHECK(c.ring_coords[r].is_zero());
    }
}

TEST_CASE("unknown catalog name") {
    CHECK_THROWS_AS(catalog("kirmse"), std::invalid_argument);
}

TEST_CASE("coxeter-dickson basis is made of unit octonions containing 1") {
    const OrderSpec &cd = catalog("coxeter_dickson");
    CHECK(cd.basis()[0] == AlgebraElem::one(Algebra::octonion()));
    for (const AlgebraElem &b : cd.basis()) {
        CHECK(b.norm() == FieldElem::one());
        for (const FieldElem &c : b.coords()) CHECK(denominator(c.a()) <= 2);
    }
    // h = (i+j+k+l)/2 belongs to the module
    AlgebraElem h = (AlgebraElem::basis(Algebra::octonion(), 1) +
                     AlgebraElem::basis(Algebra::octonion(), 2) +
                     AlgebraElem::basis(Algebra::octonion(), 3) +
                     AlgebraElem::basis(Algebra::octonion(), 4))
                        .half();
    CHECK(h.norm() == FieldElem::one());
    CHECK(coordinates_of(h, cd).in_order);
    // and so does the whole Graves basis
    for (std::size_t t = 0; t < 8; ++t)
        CHECK(coordinates_of(AlgebraElem::basis(Algebra::octonion(), t), cd).in_order);
}

TEST_CASE("associativity holds in the quaternionic orders and fails in the octonionic ones") {
    SplitMix64 rng(32);
    for (const std::string &name : catalog_names()) {
        const OrderSpec &spec = catalog(name);
        if (spec.algebra().kind() != AmbientKind::Octonion) {
            for (int r = 0; r < 40; ++r) {
                AlgebraElem x(spec.algebra()), y(spec.algebra()), z(spec.algebra());
                for (std::size_t t = 0; t < spec.rank(); ++t) {
                    x = x + spec.basis()[t].scaled(FieldElem(Rat(rng.range(-2, 2)), Rat(0)));
                    y = y + spec.basis()[t].scaled(FieldElem(Rat(rng.range(-2, 2)), Rat(0)));
                    z = z + spec.basis()[t].scaled(FieldElem(Rat(rng.range(-2, 2)), Rat(0)));
                }
                CHECK(associator(x, y, z).is_zero());
            }
        } else {
            const Algebra &O = spec.algebra();
            CHECK_FALSE(associator(AlgebraElem::basis(O, 1), AlgebraElem::basis(O, 2),
                                   AlgebraElem::basis(O, 4))
                            .is_zero());
        }
    }
}
