#include <doctest.h>

#include "golden/golden.hpp"

#include <set>
#include <vector>

using namespace golden;

namespace {

GoldenInt rand_golden(SplitMix64 &rng, long span = 30) {
    return GoldenInt(Int(rng.range(-span, span)), Int(rng.range(-span, span)));
}

FieldElem rand_field(SplitMix64 &rng) {
    Rat a(rng.range(-20, 20), rng.range(1, 7));
    Rat b(rng.range(-20, 20), rng.range(1, 7));
    return FieldElem(a, b);
}

} // namespace

TEST_CASE("golden multiplication") {
    CHECK(GoldenInt::phi() * GoldenInt::phi() == GoldenInt(1, 1));
    // (2+3phi)(5-3phi) = 1: the determinant unit of the doubled Gram
    CHECK(GoldenInt(2, 3) * GoldenInt(5, -3) == GoldenInt::one());
    SplitMix64 rng(1);
    for (int i = 0; i < 50; ++i) {
        GoldenInt x = rand_golden(rng);
        CHECK(GoldenInt::one() * x == x);
    }
}

TEST_CASE("golden conjugation") {
    CHECK(GoldenInt::phi().conj() == GoldenInt(1, -1));
    CHECK(GoldenInt(9, 0).conj() == GoldenInt(9, 0));
    SplitMix64 rng(2);
    for (int i = 0; i < 200; ++i) {
        GoldenInt x = rand_golden(rng);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("golden trace and norm") {
    CHECK(GoldenInt::phi().trace() == 1);
    CHECK(GoldenInt::phi().norm() == -1);
    CHECK(GoldenInt(2, 3).trace() == 7);
    CHECK(GoldenInt(2, 3).norm() == 1);
    CHECK(GoldenInt::one().trace() == 2);
    CHECK(GoldenInt::one().norm() == 1);
}

TEST_CASE("ring axioms and Galois compatibility on random triples") {
    SplitMix64 rng(3);
    for (int i = 0; i < 1200; ++i) {
        GoldenInt x = rand_golden(rng), y = rand_golden(rng), z = rand_golden(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x + x.conj() == GoldenInt(x.trace(), 0));
        CHECK(x * x.conj() == GoldenInt(x.norm(), 0));
    }
}

TEST_CASE("field axioms on random triples") {
    SplitMix64 rng(4);
    int inverses = 0;
    for (int i = 0; i < 1200; ++i) {
        FieldElem x = rand_field(rng), y = rand_field(rng), z = rand_field(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == FieldElem::one());
            ++inverses;
        }
    }
    CHECK(inverses > 1000);
    CHECK_THROWS_AS(FieldElem::zero().inverse(), std::domain_error);
}

TEST_CASE("unit group: +-phi^k has field norm +-1") {
    GoldenInt p = GoldenInt::one();
    for (int k = 0; k <= 6; ++k) {
        Int n = p.norm();
        CHECK((n == 1 || n == -1));
        CHECK((-p).norm() == n);
        Int ninv = p.inverse().norm();
        CHECK((ninv == 1 || ninv == -1));
        p = p * GoldenInt::phi();
    }
    CHECK_FALSE(GoldenInt(2, 0).is_unit());
    CHECK_THROWS_AS(GoldenInt(2, 0).inverse(), std::domain_error);
}

TEST_CASE("dirichlet height") {
    CHECK(GoldenInt(7, -2).dirichlet_height() == 7);
    CHECK(GoldenInt::phi().dirichlet_height() == 0);
    SplitMix64 rng(5);
    for (int i = 0; i < 500; ++i) {
        GoldenInt x = rand_golden(rng, 1000);
        FieldElem h = dirichlet_height_kappa_form(x);
        CHECK(h == FieldElem(Rat(x.dirichlet_height()), Rat(0)));
    }
}

TEST_CASE("residue reductions are ring homomorphisms") {
    CHECK(reduce_mod_sqrt5(GoldenInt::phi()) == ResidueF5(3));
    CHECK(reduce_mod_sqrt5(sqrt5()) == ResidueF5(0));
    ResidueF4 w = reduce_mod2(GoldenInt(1, 1));
    CHECK_FALSE(w.is_zero());
    CHECK(w * w * w == ResidueF4(1, 0));

    SplitMix64 rng(6);
    for (int i = 0; i < 1000; ++i) {
        GoldenInt x = rand_golden(rng), y = rand_golden(rng);
        CHECK(reduce_mod2(x * y) == reduce_mod2(x) * reduce_mod2(y));
        CHECK(reduce_mod2(x + y) == reduce_mod2(x) + reduce_mod2(y));
        CHECK(reduce_mod_sqrt5(x * y) == reduce_mod_sqrt5(x) * reduce_mod_sqrt5(y));
        CHECK(reduce_mod_sqrt5(x + y) == reduce_mod_sqrt5(x) + reduce_mod_sqrt5(y));
        // kernel checks
        CHECK(reduce_mod2(GoldenInt(2, 0) * x).is_zero());
        CHECK(reduce_mod_sqrt5(sqrt5() * x).is_zero());
    }
}

TEST_CASE("F4 multiplicative group is cyclic of order 3") {
    std::set<unsigned> seen;
    ResidueF4 w(0, 1);
    ResidueF4 acc(1, 0);
    for (int i = 0; i < 3; ++i) {
        acc = acc * w;
        seen.insert(acc.index());
    }
    CHECK(seen.size() == 3);
    CHECK(acc == ResidueF4(1, 0));
}

TEST_CASE("lambda membership") {
    CHECK_FALSE(lambda_member(FieldElem(Rat(1, 2), Rat(0))));
    CHECK(lambda_member(FieldElem::phi()));
    CHECK(lambda_member(inv_sqrt5()));
    // Tr(phi^2 * 1/2) = 3/2 is the failing condition for 1/2
    FieldElem phi2 = FieldElem::phi() * FieldElem::phi();
    CHECK((phi2 * FieldElem(Rat(1, 2), Rat(0))).trace() == Rat(3, 2));
}

TEST_CASE("lambda membership agrees with the generator form on a denominator grid") {
    // Independent route: brute-force the set {m*phi + n/sqrt5} over a box
    // large enough to cover the grid below.
    std::set<std::pair<Rat, Rat>> lattice;
    for (long m = -12; m <= 12; ++m) {
        for (long n = -20; n <= 20; ++n) {
            FieldElem v = Rat(m) * FieldElem::phi() + Rat(n) * inv_sqrt5();
            lattice.insert({v.a(), v.b()});
        }
    }
    int members = 0;
    for (long qa = 1; qa <= 10; ++qa) {
        for (long pa = -3 * qa; pa <= 3 * qa; ++pa) {
            for (long qb = 1; qb <= 10; ++qb) {
                for (long pb = -2 * qb; pb <= 2 * qb; ++pb) {
                    FieldElem alpha(Rat(pa, qa), Rat(pb, qb));
                    bool in_lattice = lattice.count({alpha.a(), alpha.b()}) > 0;
                    CHECK(lambda_member(alpha) == in_lattice);
                    members += in_lattice;
                }
            }
        }
    }
    CHECK(members > 0);
}

TEST_CASE("canonical rendering") {
    CHECK(GoldenInt(1, 1).str() == "1+1*phi");
    CHECK(GoldenInt(2, 3).str() == "2+3*phi");
    CHECK(GoldenInt(7, -2).str() == "7-2*phi");
    CHECK(FieldElem(Rat(1, 2), Rat(-1, 3)).str() == "1/2-1/3*phi");
    CHECK(FieldElem::one().str() == "1/1+0/1*phi");
}

TEST_CASE("exact division in the ring") {
    GoldenInt x = GoldenInt(2, 3) * GoldenInt(4, -7);
    auto q = x.divide_exact(GoldenInt(4, -7));
    REQUIRE(q.has_value());
    CHECK(*q == GoldenInt(2, 3));
    CHECK_FALSE(GoldenInt(1, 0).divide_exact(GoldenInt(2, 0)).has_value());
}
