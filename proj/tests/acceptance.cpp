// Acceptance suite: end-to-end verification of every headline claim, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "golden/certify.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace golden;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string &msg) {
    if (!cond) throw Failure(msg);
}

template <typename T, typename U>
void require_eq(const T &got, const U &want, const std::string &what) {
    if (!(got == static_cast<T>(want))) {
        std::ostringstream os;
        os << what << ": expected " << want << ", computed " << got;
        throw Failure(os.str());
    }
}

void criterion_order_closure() {
    for (const std::string &name : catalog_names()) {
        const VerifyOutcome &v = verify_order_cached(catalog(name));
        require(v.ok, name + " fails the order criterion: " +
                          (v.ok ? "" : v.violation.describe()));
    }
    // the golden tables exist and reproduce the products exactly
    for (const char *name : {"icosian", "icosian_double"}) {
        const OrderSpec &spec = catalog(name);
        const VerifyOutcome &v = verify_order_cached(spec);
        for (std::size_t i = 0; i < spec.rank(); ++i)
            for (std::size_t j = 0; j < spec.rank(); ++j)
                require(spec.from_ring_coordinates(v.tables.mult[i][j]) ==
                            spec.basis()[i] * spec.basis()[j],
                        std::string(name) + " structure constants do not reproduce products");
    }
}

void criterion_shell_sizes() {
    const std::pair<const char *, std::size_t> expected[] = {
        {"gaussian", 4},      {"eisenstein", 6},        {"hamilton", 8},
        {"hybrid", 12},       {"hurwitz", 24},          {"graves_cayley", 16},
        {"coxeter_dickson", 240}, {"icosian", 120},     {"icosian_double", 240},
    };
    for (const auto &[name, size] : expected)
        require_eq(unit_shell(name).shell.size(), size, std::string(name) + " shell size");
    require_eq(h2_model().size(), std::size_t(10), "h2 model size");
    require_eq(h3_model().size(), std::size_t(30), "h3 model size");
}

void criterion_root_shells() {
    const char *crystallographic_rows[] = {"gaussian", "eisenstein", "hamilton", "hybrid",
                                           "hurwitz",  "graves_cayley", "coxeter_dickson"};
    for (const char *name : crystallographic_rows) {
        const RootReport &rep = cached_root_report(name);
        require(rep.centrally_symmetric, std::string(name) + " is not centrally symmetric");
        require(rep.reflection_closed, std::string(name) + " is not reflection closed");
        require(rep.crystallographic, std::string(name) + " has a non-integer Cartan value");
    }
    for (const char *name : {"icosian", "icosian_double"}) {
        const RootReport &rep = cached_root_report(name);
        require(rep.centrally_symmetric && rep.reflection_closed,
                std::string(name) + " fails symmetry or closure");
        require(rep.cartan_in_ring, std::string(name) + " has a Cartan value outside Z[phi]");
        require(!rep.crystallographic, std::string(name) + " is unexpectedly crystallographic");
    }
    const RootReport &h2 = cached_root_report("h2");
    require(h2.centrally_symmetric && h2.reflection_closed && h2.cartan_in_ring,
            "h2 fails the root axioms");
    std::set<FieldElem> h2_values(h2.cartan_values.begin(), h2.cartan_values.end());
    std::set<FieldElem> expected_values = {
        FieldElem(Rat(2), Rat(0)),  FieldElem(Rat(-2), Rat(0)), FieldElem(Rat(0), Rat(1)),
        FieldElem(Rat(0), Rat(-1)), FieldElem(Rat(-1), Rat(1)), FieldElem(Rat(1), Rat(-1)),
    };
    require(h2_values == expected_values, "h2 Cartan value set differs from the six golden cosines");
    const RootReport &h3 = cached_root_report("h3");
    require(h3.centrally_symmetric && h3.reflection_closed && h3.cartan_in_ring,
            "h3 fails the root axioms");
}

void criterion_icosian_is_600_cell() {
    require(unit_shell("icosian").shell.elements == h4_model().elements,
            "the enumerated icosian shell differs from the 600-cell coordinate model");
}

void criterion_gram_facts() {
    const GramData &ico = polar_gram_cached(catalog("icosian"));
    const long printed[4][4][2] = {
        {{2, 0}, {0, 0}, {1, 0}, {-1, 0}},
        {{0, 0}, {2, 0}, {1, 0}, {-1, 1}},
        {{1, 0}, {1, 0}, {2, 0}, {-1, 0}},
        {{-1, 0}, {-1, 1}, {-1, 0}, {2, 0}},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            require(ico.polar.at(i, j) == GoldenInt(printed[i][j][0], printed[i][j][1]),
                    "icosian Gram entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs");
    require(ico.determinant == GoldenInt(1, 1), "det of the icosian Gram is not phi + 1");

    const GramData &dbl = polar_gram_cached(catalog("icosian_double"));
    require(dbl.determinant == GoldenInt(2, 3), "det of the doubled Gram is not 2 + 3 phi");
    require_eq(dbl.determinant.norm(), Int(1), "field norm of the doubled determinant");

    SelfDualReport sd = golden_self_dual(catalog("icosian_double"));
    require(sd.self_dual, "the icosian double is not polar self-dual");
    require(dbl.polar * sd.inverse_witness == Matrix<GoldenInt>::identity(8),
            "the inverse witness is not an inverse");

    const TraceGram &tico = trace_gram_cached(catalog("icosian"));
    require_eq(tico.determinant, Int(625), "icosian trace determinant");
    require(tico.even, "icosian trace lattice is not even");
    const TraceGram &tdbl = trace_gram_cached(catalog("icosian_double"));
    require_eq(tdbl.determinant, Int(390625), "doubled trace determinant");
}

void criterion_den2(unsigned workers) {
    SearchReport r = den2_search(workers);
    require_eq(r.total, std::size_t(21845), "den2 line total");
    require_eq(r.count(FilterClass::NotMixed), std::size_t(170), "den2 not-mixed count");
    require_eq(r.count(FilterClass::ConjFail), std::size_t(16320), "den2 conjugation failures");
    require_eq(r.count(FilterClass::PairingFail), std::size_t(5355), "den2 pairing failures");
    require_eq(r.survivors(), std::size_t(0), "den2 survivors");
    require_eq(r.extras.at("not_mixed_low_half"), std::size_t(85), "den2 low-half lines");

    SearchReport swapped = den2_search(workers, {FilterClass::NotMixed, FilterClass::PairingFail,
                                                 FilterClass::ConjFail, FilterClass::NormFail,
                                                 FilterClass::MultFail, FilterClass::SquareFail});
    require_eq(swapped.survivors(), std::size_t(0), "den2 survivors under swapped F2/F3");
    SearchReport reversed = den2_search(workers, {FilterClass::SquareFail, FilterClass::MultFail,
                                                  FilterClass::NormFail, FilterClass::PairingFail,
                                                  FilterClass::ConjFail, FilterClass::NotMixed});
    require_eq(reversed.survivors(), std::size_t(0), "den2 survivors under reversed order");
}

void criterion_sqrt5(unsigned workers) {
    SearchReport r = sqrt5_search(workers);
    require_eq(r.total, std::size_t(97656), "sqrt5 line total");
    require_eq(r.extras.at("mixed_lines"), std::size_t(97344), "sqrt5 mixed lines");
    require_eq(r.survivors(), std::size_t(0), "sqrt5 survivors");
    require_eq(r.extras.at("gram_rank_mod_sqrt5"), std::size_t(8), "Gram rank mod sqrt5");
}

void criterion_half_root(unsigned workers) {
    SearchReport strict = half_root_scan(HalfRootMode::Strict, workers);
    require_eq(strict.extras.at("pairs"), std::size_t(14400), "half-root pair count");
    require_eq(strict.extras.at("norm_exactly_half"), std::size_t(14400),
               "pairs with norm exactly 1/2");
    require_eq(strict.extras.at("cosets"), std::size_t(3600), "half-root cosets");
    require_eq(strict.extras.at("strict_survivors"), std::size_t(0), "strict survivors");

    SearchReport trace = half_root_scan(HalfRootMode::Trace, workers);
    require_eq(trace.extras.at("trace_norm_one"), std::size_t(14400), "pairs with trace norm 1");
    require(!lambda_member(FieldElem(Rat(1, 2), Rat(0))),
            "1/2 unexpectedly lies in the trace lattice");
    require_eq(trace.extras.at("polar_pass_raw"), std::size_t(324), "raw polar filter passes");
    require_eq(trace.extras.at("polar_pass_cosets"), std::size_t(81), "coset polar filter passes");
    require_eq(trace.extras.at("phi_closure_rep_failures"), std::size_t(3600),
               "phi-closure failures per coset");
    require_eq(trace.extras.at("module_survivors"), std::size_t(0), "trace module survivors");
}

void criterion_tower(unsigned workers) {
    DiscriminantGroup dg(trace_gram_cached(catalog("icosian_double")).gram);
    require_eq(dg.quotient_rank(), std::size_t(8), "discriminant quotient rank");
    for (std::size_t t : dg.nontrivial())
        require_eq(dg.divisors()[t], Int(5), "discriminant divisor");

    SearchReport r = tower_search(workers);
    require_eq(r.extras.at("plus_type"), std::size_t(1), "discriminant form type");
    require_eq(r.extras.at("isotropic_lines"), std::size_t(19656), "isotropic line count");
    require_eq(r.extras.at("hyperbolic_rank"), std::size_t(4), "hyperbolic rank");
    require_eq(r.extras.at("phi_scalar"), std::size_t(3), "phi scalar on the quotient");
    require_eq(r.extras.at("sqrt5_annihilates"), std::size_t(1), "sqrt5 annihilation");
    require_eq(r.extras.at("closure_dim_8"), std::size_t(19656), "stable closures of dimension 8");
    require_eq(r.extras.at("candidates"), std::size_t(0), "tower candidates");
}

void criterion_associator() {
    const Algebra &O = Algebra::octonion();
    AlgebraElem i = AlgebraElem::basis(O, 1), j = AlgebraElem::basis(O, 2),
                l = AlgebraElem::basis(O, 4), kl = AlgebraElem::basis(O, 7);
    require(associator(i, j, l) == kl + kl, "[i, j, l] is not 2 k l");

    const GoldenTable &table = GoldenTable::of(O);
    SplitMix64 rng(0xacce97ULL);
    for (int round = 0; round < 10000; ++round) {
        std::vector<GoldenInt> x, y;
        for (int t = 0; t < 8; ++t) {
            x.emplace_back(Int(rng.range(-2, 2)), Int(rng.range(-2, 2)));
            y.emplace_back(Int(rng.range(-2, 2)), Int(rng.range(-2, 2)));
        }
        require(table.mul(x, table.mul(x, y)) == table.mul(table.mul(x, x), y),
                "left alternative law fails");
        require(table.mul(table.mul(y, x), x) == table.mul(y, table.mul(x, x)),
                "right alternative law fails");
    }
}

void criterion_determinism() {
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "goldcert-acceptance";
    fs::remove_all(base);
    RunOptions one, two;
    one.workers = 1;
    two.workers = 2;
    RunManifest m1 = run_all((base / "w1").string(), one);
    RunManifest m2 = run_all((base / "w2").string(), two);
    require(m1.all_pass, "manifest reports failing checks");
    require(m1.bytes == m2.bytes, "manifests differ across worker counts");
    require(m1.combined_hash == m2.combined_hash, "manifest hashes differ across worker counts");
    fs::remove_all(base);
}

void property_suites() {
    SplitMix64 rng(0x9e0be5ULL);
    // ring and field axioms with norm multiplicativity
    for (int round = 0; round < 1000; ++round) {
        GoldenInt x(Int(rng.range(-40, 40)), Int(rng.range(-40, 40)));
        GoldenInt y(Int(rng.range(-40, 40)), Int(rng.range(-40, 40)));
        GoldenInt z(Int(rng.range(-40, 40)), Int(rng.range(-40, 40)));
        require((x * y) * z == x * (y * z), "ring associativity fails");
        require(x * (y + z) == x * y + x * z, "ring distributivity fails");
        require((x * y).norm() == x.norm() * y.norm(), "norm multiplicativity fails");
        FieldElem f(Rat(rng.range(-9, 9), rng.range(1, 5)), Rat(rng.range(-9, 9), rng.range(1, 5)));
        if (!f.is_zero()) require(f * f.inverse() == FieldElem::one(), "field inverse fails");
    }
    // pairing stability in the octonions, via the ambient golden Gram
    const Algebra &O = Algebra::octonion();
    const GoldenTable &table = GoldenTable::of(O);
    auto pair_of = [&](const std::vector<GoldenInt> &a, const std::vector<GoldenInt> &b) {
        GoldenInt acc = GoldenInt::zero();
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) acc += a[r] * table.ambient_gram().at(r, c) * b[c];
        return acc;
    };
    for (int round = 0; round < 1000; ++round) {
        std::vector<GoldenInt> g, x, y;
        for (int t = 0; t < 8; ++t) {
            g.emplace_back(Int(rng.range(-1, 1)), Int(rng.range(-1, 1)));
            x.emplace_back(Int(rng.range(-1, 1)), Int(rng.range(-1, 1)));
            y.emplace_back(Int(rng.range(-1, 1)), Int(rng.range(-1, 1)));
        }
        require(pair_of(table.mul(g, x), y) == pair_of(x, table.mul(table.conj(g), y)),
                "pairing stability fails");
    }
    // smith normal form reconstruction and the adjugate identity
    for (int round = 0; round < 1000; ++round) {
        std::size_t n = 2 + static_cast<std::size_t>(rng.range(0, 3));
        Matrix<Int> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Int(rng.range(-7, 7));
        SmithForm s = smith_normal_form(a);
        Matrix<Int> prod = s.left * a * s.right;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                require(prod.at(i, j) == (i == j ? s.divisors[i] : Int(0)),
                        "smith reconstruction fails");
        Matrix<Int> adj_prod = a * adjugate(a);
        Int d = det(a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                require(adj_prod.at(i, j) == (i == j ? d : Int(0)), "adjugate identity fails");
    }
}

} // namespace

int main() {
    unsigned workers = 2;
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"criterion-01 order closure (P1)", criterion_order_closure},
        {"criterion-02 shell sizes (P2)", criterion_shell_sizes},
        {"criterion-03 root-shell verification", criterion_root_shells},
        {"criterion-04 icosian shell equals the 600-cell model", criterion_icosian_is_600_cell},
        {"criterion-05 Gram facts (P3)", criterion_gram_facts},
        {"criterion-06 strict denominator-two no-go (P4)", [&] { criterion_den2(workers); }},
        {"criterion-07 ramified no-go (P5)", [&] { criterion_sqrt5(workers); }},
        {"criterion-08 half-root scans", [&] { criterion_half_root(workers); }},
        {"criterion-09 tower no-go (P6)", [&] { criterion_tower(workers); }},
        {"criterion-10 associator witness and alternative laws", criterion_associator},
        {"criterion-11 manifest determinism", criterion_determinism},
        {"property suites (axioms, pairing, smith, adjugate)", property_suites},
    };

    int failures = 0;
    for (const auto &[name, fn] : criteria) {
        try {
            fn();
            std::cout << "[PASS] " << name << "\n";
        } catch (const std::exception &e) {
            ++failures;
            std::cout << "[FAIL] " << name << ": " << e.what() << "\n";
        }
        std::cout.flush();
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
