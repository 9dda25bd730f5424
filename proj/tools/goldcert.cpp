#include <CLI11.hpp>

#include "golden/certify.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_inconsistent = 2;
constexpr int exit_usage = 3;

golden::WitnessMode parse_witness_mode(const std::string &s) {
    if (s == "none") return golden::WitnessMode::None;
    if (s == "full") return golden::WitnessMode::Full;
    return golden::WitnessMode::Summary;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"goldcert: exact-arithmetic certificates for golden composition-algebra orders"};
    app.require_subcommand(1);

    std::string out_dir = "certs";
    unsigned workers = 1;
    std::string witnesses = "summary";
    app.add_option("--out", out_dir, "output directory for certificate files");
    app.add_option("--workers", workers, "worker threads for the searches")
        ->check(CLI::Range(1u, 64u));
    app.add_option("--witnesses", witnesses, "witness verbosity")
        ->check(CLI::IsMember({"none", "summary", "full"}));

    CLI::App *cmd_all = app.add_subcommand("all", "run every check and write the manifest");

    std::string check_id, only_order;
    CLI::App *cmd_check = app.add_subcommand("check", "run a single check and print it");
    cmd_check->add_option("id", check_id, "check id (see: goldcert list)")->required();
    cmd_check->add_option("--order", only_order, "restrict p2-shells to one catalog order");

    CLI::App *cmd_list = app.add_subcommand("list", "list check ids and catalog orders");

    std::string shell_order;
    CLI::App *cmd_export = app.add_subcommand("export-shell", "write a unit shell listing");
    cmd_export->add_option("order", shell_order, "catalog order name")->required();

    for (CLI::App *cmd : {cmd_all, cmd_check, cmd_list, cmd_export}) cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    golden::RunOptions opt;
    opt.workers = workers;
    opt.witnesses = parse_witness_mode(witnesses);
    opt.only_order = only_order;

    try {
        if (*cmd_list) {
            std::cout << "checks:\n";
            for (const auto &id : golden::check_ids()) std::cout << "  " << id << "\n";
            std::cout << "orders:\n";
            for (const auto &name : golden::catalog_names()) std::cout << "  " << name << "\n";
            return exit_pass;
        }

        if (*cmd_export) {
            const golden::Shell &shell = golden::unit_shell(shell_order).shell;
            std::filesystem::create_directories(out_dir);
            std::filesystem::path path =
                std::filesystem::path(out_dir) / (shell_order + ".shell");
            std::ofstream out(path, std::ios::binary);
            std::string listing = golden::shell_listing(shell);
            out << listing;
            std::cout << path.string() << ": " << shell.size()
                      << " elements, sha256=" << golden::sha256_hex(listing) << "\n";
            return exit_pass;
        }

        if (*cmd_check) {
            golden::Certificate cert = golden::run_check(check_id, opt);
            std::filesystem::create_directories(out_dir);
            std::ofstream out(std::filesystem::path(out_dir) / (check_id + ".cert"),
                              std::ios::binary);
            out << cert.serialize();
            std::cout << cert.serialize();
            if (!cert.passed()) {
                for (const auto &m : cert.mismatches()) std::cerr << "mismatch: " << m << "\n";
                return exit_mismatch;
            }
            return exit_pass;
        }

        if (*cmd_all) {
            golden::RunManifest manifest = golden::run_all(out_dir, opt);
            for (const auto &[id, pass] : manifest.check_status)
                std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << "\n";
            std::cout << "manifest sha256=" << manifest.combined_hash << "\n";
            if (!manifest.all_pass) {
                for (const auto &[id, pass] : manifest.check_status) {
                    if (pass) continue;
                    golden::Certificate cert = golden::run_check(id, opt);
                    for (const auto &m : cert.mismatches())
                        std::cerr << id << " mismatch: " << m << "\n";
                }
                return exit_mismatch;
            }
            return exit_pass;
        }
    } catch (const golden::InconsistencyError &e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return exit_inconsistent;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_inconsistent;
    }
    return exit_usage;
}
