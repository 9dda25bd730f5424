#pragma once

#include "golden/search.hpp"
#include "golden/sha256.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace golden {

inline const char *tool_version() { return "goldcert 1.0.0"; }

enum class WitnessMode { None, Summary, Full };

struct RunOptions {
    unsigned workers = 1;
    WitnessMode witnesses = WitnessMode::Summary;
    std::string only_order; // restricts p2-shells to one catalog order
};

/// One verification certificate: deterministic key/value content with a
/// canonical byte serialization. Keys are sorted; integers are rendered in
/// decimal; ring elements use the canonical "a+b*phi" rendering; there are
/// no timestamps and no floating point values anywhere.
class Certificate {
public:
    explicit Certificate(std::string check_id) : check_id_(std::move(check_id)) {}
    Certificate() = default;

    const std::string &check_id() const { return check_id_; }
    bool passed() const { return pass_; }

    void put_param(const std::string &key, const std::string &value) {
        params_.emplace_back(key, value);
    }
    void put_count(const std::string &key, const Int &value) {
        counts_.emplace_back(key, to_string(value));
    }
    void put_count(const std::string &key, std::size_t value) {
        counts_.emplace_back(key, std::to_string(value));
    }
    /// Expected value paired with the count or parameter of the same key.
    void expect_count(const std::string &key, const Int &value) {
        expected_.emplace_back(key, to_string(value));
    }
    void expect_count(const std::string &key, std::size_t value) {
        expected_.emplace_back(key, std::to_string(value));
    }
    void expect_param(const std::string &key, const std::string &value) {
        expected_.emplace_back(key, value);
    }
    void add_witness(const std::string &w) { witnesses_.push_back(w); }

    /// Differences between the expected entries and the recorded values of
    /// the same keys, as printable lines.
    std::vector<std::string> mismatches() const {
        std::vector<std::string> out;
        auto lookup = [&](const std::string &key) -> const std::string * {
            for (const auto &[k, v] : counts_)
                if (k == key) return &v;
            for (const auto &[k, v] : params_)
                if (k == key) return &v;
            return nullptr;
        };
        for (const auto &[key, want] : expected_) {
            const std::string *got = lookup(key);
            if (!got) {
                out.push_back(key + ": expected " + want + ", value missing");
            } else if (*got != want) {
                out.push_back(key + ": expected " + want + ", computed " + *got);
            }
        }
        return out;
    }

    /// Compares every expected entry against the recorded value of the same
    /// key; sets the status and returns the mismatches as printable lines.
    std::vector<std::string> finalize() {
        std::vector<std::string> out = mismatches();
        pass_ = out.empty();
        return out;
    }

    std::string serialize() const {
        std::vector<std::string> lines;
        lines.push_back("check=" + check_id_);
        lines.push_back("format=goldcert/1");
        lines.push_back(std::string("status=") + (pass_ ? "PASS" : "FAIL"));
        for (const auto &[k, v] : params_) lines.push_back("param." + k + "=" + v);
        for (const auto &[k, v] : counts_) lines.push_back("count." + k + "=" + v);
        for (const auto &[k, v] : expected_) lines.push_back("expect." + k + "=" + v);
        for (std::size_t i = 0; i < witnesses_.size(); ++i) {
            char idx[8];
            std::snprintf(idx, sizeof idx, "%03zu", i);
            lines.push_back("witness." + std::string(idx) + "=" + witnesses_[i]);
        }
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const auto &l : lines) {
            out += l;
            out += "\n";
        }
        return out;
    }

    static Certificate parse(const std::string &bytes) {
        Certificate cert;
        std::istringstream in(bytes);
        std::string line;
        std::vector<std::pair<std::string, std::string>> witness_lines;
        while (std::getline(in, line)) {
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("Certificate::parse: malformed line: " + line);
            std::string key = line.substr(0, eq), value = line.substr(eq + 1);
            if (key == "check") {
                cert.check_id_ = value;
            } else if (key == "status") {
                cert.pass_ = (value == "PASS");
            } else if (key == "format") {
                if (value != "goldcert/1")
                    throw std::invalid_argument("Certificate::parse: unknown format " + value);
            } else if (key.rfind("param.", 0) == 0) {
                cert.params_.emplace_back(key.substr(6), value);
            } else if (key.rfind("count.", 0) == 0) {
                cert.counts_.emplace_back(key.substr(6), value);
            } else if (key.rfind("expect.", 0) == 0) {
                cert.expected_.emplace_back(key.substr(7), value);
            } else if (key.rfind("witness.", 0) == 0) {
                witness_lines.emplace_back(key, value);
            } else {
                throw std::invalid_argument("Certificate::parse: unknown key " + key);
            }
        }
        std::sort(witness_lines.begin(), witness_lines.end());
        for (auto &[k, v] : witness_lines) cert.witnesses_.push_back(v);
        return cert;
    }

private:
    std::string check_id_;
    bool pass_ = false;
    std::vector<std::pair<std::string, std::string>> params_;
    std::vector<std::pair<std::string, std::string>> counts_;
    std::vector<std::pair<std::string, std::string>> expected_;
    std::vector<std::string> witnesses_;
};

inline const std::vector<std::string> &check_ids() {
    static const std::vector<std::string> ids = {
        "p1-closure",  "p2-shells", "p3-gram",         "p4-den2",        "p5-sqrt5",
        "p6-tower",    "half-root-strict", "half-root-trace", "self-dual"};
    return ids;
}

namespace checks {

inline std::string render_golden_matrix(const Matrix<GoldenInt> &m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m.at(i, j).str();
        }
    }
    out += "]";
    return out;
}

inline void attach_search_witnesses(Certificate &cert, const SearchReport &rep,
                                    WitnessMode mode) {
    if (mode == WitnessMode::None) return;
    for (unsigned c = 0; c < 7; ++c) {
        if (rep.witnesses[c])
            cert.add_witness(std::string(filter_class_name(static_cast<FilterClass>(c))) + ": " +
                             *rep.witnesses[c]);
    }
    if (mode == WitnessMode::Full)
        for (const auto &s : rep.survivor_list) cert.add_witness("survivor: " + s);
}

inline Certificate p1_closure(const RunOptions &opt) {
    Certificate cert("p1-closure");
    for (const std::string &name : catalog_names()) {
        const OrderSpec &spec = catalog(name);
        const VerifyOutcome &v = verify_order_cached(spec);
        cert.put_count(name + "_products_checked", spec.rank() * spec.rank());
        cert.put_count(name + "_conjugates_checked", spec.rank());
        cert.put_count(name + "_violations", std::size_t(v.ok ? 0 : 1));
        cert.expect_count(name + "_violations", std::size_t(0));
        if (!v.ok && opt.witnesses != WitnessMode::None)
            cert.add_witness(name + ": " + v.violation.describe());
    }
    cert.finalize();
    return cert;
}

inline Certificate p2_shells(const RunOptions &opt) {
    Certificate cert("p2-shells");
    static const std::pair<const char *, std::size_t> expected_sizes[] = {
        {"gaussian", 4},      {"eisenstein", 6},       {"hamilton", 8},
        {"hybrid", 12},       {"hurwitz", 24},         {"graves_cayley", 16},
        {"coxeter_dickson", 240}, {"icosian", 120},    {"icosian_double", 240},
    };
    for (const auto &[name, size] : expected_sizes) {
        if (!opt.only_order.empty() && opt.only_order != name) continue;
        const ShellEnumeration &e = unit_shell(name);
        cert.put_count(std::string(name) + "_shell", e.shell.size());
        cert.expect_count(std::string(name) + "_shell", size);
        cert.put_count(std::string(name) + "_closure_route", e.closure_count);
        cert.put_count(std::string(name) + "_box_route", e.box_count);
        cert.expect_count(std::string(name) + "_closure_route", size);
        cert.expect_count(std::string(name) + "_box_route", size);
        std::string bounds = "[";
        for (std::size_t i = 0; i < e.box_bounds.size(); ++i) {
            if (i) bounds += ",";
            bounds += to_string(e.box_bounds[i]);
        }
        bounds += "]";
        cert.put_param(std::string(name) + "_box_bounds", bounds);
        cert.put_param(std::string(name) + "_listing_sha256", sha256_hex(shell_listing(e.shell)));
    }
    if (opt.only_order.empty()) {
        cert.put_count("h2_model", h2_model().size());
        cert.expect_count("h2_model", std::size_t(10));
        cert.put_count("h3_model", h3_model().size());
        cert.expect_count("h3_model", std::size_t(30));
        cert.put_count("h4_model_matches_icosian_shell",
                       std::size_t(h4_model().elements == unit_shell("icosian").shell.elements));
        cert.expect_count("h4_model_matches_icosian_shell", std::size_t(1));
        // root-shell verification for every catalog shell and both models
        for (const auto &[name, size] : expected_sizes) {
            const RootReport &rep = cached_root_report(name);
            bool golden_row = catalog(name).ring() == RingTag::Zphi;
            bool ok = rep.centrally_symmetric && rep.reflection_closed &&
                      rep.reflections_involutive && rep.cartan_in_ring &&
                      (golden_row || rep.crystallographic);
            cert.put_count(std::string(name) + "_root_axioms", std::size_t(ok ? 1 : 0));
            cert.expect_count(std::string(name) + "_root_axioms", std::size_t(1));
        }
        const RootReport &h2 = cached_root_report("h2");
        cert.put_count("h2_root_axioms",
                       std::size_t(h2.centrally_symmetric && h2.reflection_closed &&
                                   h2.cartan_in_ring && !h2.crystallographic));
        cert.expect_count("h2_root_axioms", std::size_t(1));
        const RootReport &h3 = cached_root_report("h3");
        cert.put_count("h3_root_axioms",
                       std::size_t(h3.centrally_symmetric && h3.reflection_closed &&
                                   h3.cartan_in_ring && !h3.crystallographic));
        cert.expect_count("h3_root_axioms", std::size_t(1));
    }
    cert.finalize();
    return cert;
}

inline Certificate p3_gram(const RunOptions &) {
    Certificate cert("p3-gram");
    const GramData &ico = polar_gram_cached(catalog("icosian"));
    cert.put_param("gram_icosian", render_golden_matrix(ico.polar));
    cert.expect_param("gram_icosian",
                      "[2+0*phi, 0+0*phi, 1+0*phi, -1+0*phi; "
                      "0+0*phi, 2+0*phi, 1+0*phi, -1+1*phi; "
                      "1+0*phi, 1+0*phi, 2+0*phi, -1+0*phi; "
                      "-1+0*phi, -1+1*phi, -1+0*phi, 2+0*phi]");
    cert.put_param("det_icosian", ico.determinant.str());
    cert.expect_param("det_icosian", "1+1*phi");

    const GramData &dbl = polar_gram_cached(catalog("icosian_double"));
    cert.put_param("det_double", dbl.determinant.str());
    cert.expect_param("det_double", "2+3*phi");
    cert.put_count("det_double_field_norm", dbl.determinant.norm());
    cert.expect_count("det_double_field_norm", Int(1));

    RingInverse inv = invert_over_ring(dbl.polar);
    cert.put_count("inverse_gram_in_ring", std::size_t(inv.ok ? 1 : 0));
    cert.expect_count("inverse_gram_in_ring", std::size_t(1));

    const TraceGram &tico = trace_gram_cached(catalog("icosian"));
    cert.put_count("trace_det_icosian", tico.determinant);
    cert.expect_count("trace_det_icosian", Int(625));
    cert.put_count("trace_even_icosian", std::size_t(tico.even ? 1 : 0));
    cert.expect_count("trace_even_icosian", std::size_t(1));

    const TraceGram &tdbl = trace_gram_cached(catalog("icosian_double"));
    cert.put_count("trace_det_double", tdbl.determinant);
    cert.expect_count("trace_det_double", Int(390625));
    cert.finalize();
    return cert;
}

inline Certificate self_dual(const RunOptions &opt) {
    Certificate cert("self-dual");
    SelfDualReport dbl = golden_self_dual(catalog("icosian_double"));
    cert.put_count("double_self_dual", std::size_t(dbl.self_dual ? 1 : 0));
    cert.expect_count("double_self_dual", std::size_t(1));
    cert.put_count("double_det_field_norm", dbl.determinant_field_norm);
    cert.expect_count("double_det_field_norm", Int(1));

    SelfDualReport ico = golden_self_dual(catalog("icosian"));
    cert.put_count("icosian_self_dual", std::size_t(ico.self_dual ? 1 : 0));
    cert.expect_count("icosian_self_dual", std::size_t(1));

    SelfDualReport ham = golden_self_dual(catalog("hamilton"));
    cert.put_count("hamilton_self_dual", std::size_t(ham.self_dual ? 1 : 0));
    cert.expect_count("hamilton_self_dual", std::size_t(0));
    cert.put_param("hamilton_det", ham.determinant.str());
    cert.expect_param("hamilton_det", "16+0*phi");

    if (opt.witnesses != WitnessMode::None && dbl.self_dual)
        cert.add_witness("inverse_gram_double: " + render_golden_matrix(dbl.inverse_witness));
    cert.finalize();
    return cert;
}

inline Certificate p4_den2(const RunOptions &opt) {
    Certificate cert("p4-den2");
    SearchReport rep = den2_search(opt.workers);
    cert.put_count("lines_total", rep.total);
    cert.expect_count("lines_total", std::size_t(21845));
    cert.put_count("not_mixed", rep.count(FilterClass::NotMixed));
    cert.expect_count("not_mixed", std::size_t(170));
    cert.put_count("not_mixed_low_half", rep.extras.at("not_mixed_low_half"));
    cert.expect_count("not_mixed_low_half", std::size_t(85));
    cert.put_count("not_mixed_high_half", rep.extras.at("not_mixed_high_half"));
    cert.expect_count("not_mixed_high_half", std::size_t(85));
    cert.put_count("conj_fail", rep.count(FilterClass::ConjFail));
    cert.expect_count("conj_fail", std::size_t(16320));
    cert.put_count("pairing_fail", rep.count(FilterClass::PairingFail));
    cert.expect_count("pairing_fail", std::size_t(5355));
    cert.put_count("survivors", rep.survivors());
    cert.expect_count("survivors", std::size_t(0));

    // the survivor set does not depend on the filter order
    SearchReport swapped = den2_search(opt.workers, {FilterClass::NotMixed, FilterClass::PairingFail,
                                                     FilterClass::ConjFail, FilterClass::NormFail,
                                                     FilterClass::MultFail, FilterClass::SquareFail});
    cert.put_count("survivors_swapped_f2_f3", swapped.survivors());
    cert.expect_count("survivors_swapped_f2_f3", std::size_t(0));
    SearchReport reversed = den2_search(opt.workers, {FilterClass::SquareFail, FilterClass::MultFail,
                                                      FilterClass::NormFail, FilterClass::PairingFail,
                                                      FilterClass::ConjFail, FilterClass::NotMixed});
    cert.put_count("survivors_reversed_order", reversed.survivors());
    cert.expect_count("survivors_reversed_order", std::size_t(0));

    // every nonzero F4-subspace contains a projective line, so zero
    // survivors close the subspace case as well
    cert.put_param("subspace_corollary", rep.survivors() == 0 ? "closed" : "open");
    cert.expect_param("subspace_corollary", "closed");
    attach_search_witnesses(cert, rep, opt.witnesses);
    cert.finalize();
    return cert;
}

inline Certificate p5_sqrt5(const RunOptions &opt) {
    Certificate cert("p5-sqrt5");
    SearchReport rep = sqrt5_search(opt.workers);
    cert.put_count("lines_total", rep.total);
    cert.expect_count("lines_total", std::size_t(97656));
    cert.put_count("mixed_lines", rep.extras.at("mixed_lines"));
    cert.expect_count("mixed_lines", std::size_t(97344));
    cert.put_count("survivors", rep.survivors());
    cert.expect_count("survivors", std::size_t(0));
    cert.put_count("gram_rank_mod_sqrt5", rep.extras.at("gram_rank_mod_sqrt5"));
    cert.expect_count("gram_rank_mod_sqrt5", std::size_t(8));
    attach_search_witnesses(cert, rep, opt.witnesses);
    cert.finalize();
    return cert;
}

inline Certificate half_root(HalfRootMode mode, const RunOptions &opt) {
    Certificate cert(mode == HalfRootMode::Strict ? "half-root-strict" : "half-root-trace");
    SearchReport rep = half_root_scan(mode, opt.workers);
    // the pass counts are basis dependent; pin the basis in the certificate
    cert.put_param("g0_basis",
                   "(e1..e4, e1*l..e4*l) with e=(1, i, (1+i+j+k)/2, (-1+(phi-1)*i-phi*j)/2)");
    cert.put_count("pairs", rep.extras.at("pairs"));
    cert.expect_count("pairs", std::size_t(14400));
    cert.put_count("norm_exactly_half", rep.extras.at("norm_exactly_half"));
    cert.expect_count("norm_exactly_half", std::size_t(14400));
    cert.put_count("cosets", rep.extras.at("cosets"));
    cert.expect_count("cosets", std::size_t(3600));
    if (mode == HalfRootMode::Strict) {
        cert.put_count("survivors", rep.extras.at("strict_survivors"));
        cert.expect_count("survivors", std::size_t(0));
    } else {
        cert.put_count("trace_norm_one", rep.extras.at("trace_norm_one"));
        cert.expect_count("trace_norm_one", std::size_t(14400));
        cert.put_count("polar_pass_raw", rep.extras.at("polar_pass_raw"));
        cert.expect_count("polar_pass_raw", std::size_t(324));
        cert.put_count("polar_pass_cosets", rep.extras.at("polar_pass_cosets"));
        cert.expect_count("polar_pass_cosets", std::size_t(81));
        cert.put_count("phi_closure_rep_failures", rep.extras.at("phi_closure_rep_failures"));
        cert.expect_count("phi_closure_rep_failures", std::size_t(3600));
        cert.put_count("module_survivors", rep.extras.at("module_survivors"));
        cert.expect_count("module_survivors", std::size_t(0));
    }
    attach_search_witnesses(cert, rep, opt.witnesses);
    cert.finalize();
    return cert;
}

inline Certificate p6_tower(const RunOptions &opt) {
    Certificate cert("p6-tower");
    SearchReport rep = tower_search(opt.workers);
    cert.put_count("lines_total", rep.total);
    cert.expect_count("lines_total", std::size_t(97656));
    cert.put_count("isotropic_lines", rep.extras.at("isotropic_lines"));
    cert.expect_count("isotropic_lines", std::size_t(19656));
    cert.put_count("plus_type", rep.extras.at("plus_type"));
    cert.expect_count("plus_type", std::size_t(1));
    cert.put_count("hyperbolic_rank", rep.extras.at("hyperbolic_rank"));
    cert.expect_count("hyperbolic_rank", std::size_t(4));
    cert.put_count("phi_scalar", rep.extras.at("phi_scalar"));
    cert.expect_count("phi_scalar", std::size_t(3));
    cert.put_count("sqrt5_annihilates", rep.extras.at("sqrt5_annihilates"));
    cert.expect_count("sqrt5_annihilates", std::size_t(1));
    cert.put_count("closure_dim_8", rep.extras.count("closure_dim_8") ? rep.extras.at("closure_dim_8")
                                                                      : std::size_t(0));
    cert.expect_count("closure_dim_8", std::size_t(19656));
    cert.put_count("candidates", rep.extras.at("candidates"));
    cert.expect_count("candidates", std::size_t(0));
    cert.put_count("quotient_not_totally_isotropic",
                   rep.extras.at("quotient_not_totally_isotropic"));
    cert.expect_count("quotient_not_totally_isotropic", std::size_t(1));
    attach_search_witnesses(cert, rep, opt.witnesses);
    cert.finalize();
    return cert;
}

} // namespace checks

inline Certificate run_check(const std::string &check_id, const RunOptions &opt = {}) {
    if (check_id == "p1-closure") return checks::p1_closure(opt);
    if (check_id == "p2-shells") return checks::p2_shells(opt);
    if (check_id == "p3-gram") return checks::p3_gram(opt);
    if (check_id == "p4-den2") return checks::p4_den2(opt);
    if (check_id == "p5-sqrt5") return checks::p5_sqrt5(opt);
    if (check_id == "p6-tower") return checks::p6_tower(opt);
    if (check_id == "half-root-strict") return checks::half_root(HalfRootMode::Strict, opt);
    if (check_id == "half-root-trace") return checks::half_root(HalfRootMode::Trace, opt);
    if (check_id == "self-dual") return checks::self_dual(opt);
    throw std::invalid_argument("run_check: unknown check id: " + check_id);
}

/// The run manifest: tool version, pinned conventions, per-certificate
/// hashes and the final combined hash over the canonical certificate bytes
/// in lexicographic check-id order. No timestamps.
struct RunManifest {
    bool all_pass = false;
    std::vector<std::pair<std::string, bool>> check_status;
    std::string bytes;
    std::string combined_hash;
};

inline RunManifest build_manifest(const std::vector<Certificate> &certs) {
    std::vector<std::pair<std::string, std::string>> by_id; // id -> serialized bytes
    RunManifest m;
    m.all_pass = true;
    for (const Certificate &c : certs) {
        by_id.emplace_back(c.check_id(), c.serialize());
        m.check_status.emplace_back(c.check_id(), c.passed());
        m.all_pass &= c.passed();
    }
    std::sort(by_id.begin(), by_id.end());

    std::vector<std::string> lines;
    Sha256 combined;
    for (const auto &[id, bytes] : by_id) {
        combined.update(bytes);
        lines.push_back("cert." + id + ".sha256=" + sha256_hex(bytes));
    }
    lines.push_back("convention.cd=ell^2=-1; ell*a=conj(a)*ell; [i,j,ell]=2*k*ell");
    lines.push_back(
        "convention.icosian_basis=(1, i, (1+i+j+k)/2, (-1+(phi-1)*i-phi*j)/2)");
    lines.push_back(std::string("status=") + (m.all_pass ? "PASS" : "FAIL"));
    lines.push_back(std::string("tool=") + tool_version());
    std::sort(lines.begin(), lines.end());

    auto digest = combined.digest();
    static const char *hex = "0123456789abcdef";
    std::string combined_hex;
    for (unsigned char b : digest) {
        combined_hex.push_back(hex[b >> 4]);
        combined_hex.push_back(hex[b & 15]);
    }
    m.combined_hash = combined_hex;
    for (const auto &l : lines) {
        m.bytes += l;
        m.bytes += "\n";
    }
    m.bytes += "sha256=" + combined_hex + "\n";
    return m;
}

/// Runs every check, writes one certificate file per check plus the
/// MANIFEST into the output directory, and reports overall status.
inline RunManifest run_all(const std::string &out_dir, const RunOptions &opt = {}) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<Certificate> certs;
    for (const std::string &id : check_ids()) certs.push_back(run_check(id, opt));
    for (const Certificate &c : certs) {
        std::ofstream out(fs::path(out_dir) / (c.check_id() + ".cert"), std::ios::binary);
        out << c.serialize();
    }
    RunManifest m = build_manifest(certs);
    std::ofstream mf(fs::path(out_dir) / "MANIFEST", std::ios::binary);
    mf << m.bytes;
    return m;
}

} // namespace golden
