// Command-line front end: classify, left-part, catalog, verify, generate.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tpc/report.hpp"
#include "tpc/spec_format.hpp"

namespace {

void add_run_flags(CLI::App* cmd, std::string& file, tpc::RunConfig& config, std::string& out)
{
    cmd->add_option("file", file, "algebra spec file")->required();
    cmd->add_option("--max-dim", config.max_dim, "catalog dimension bound")->capture_default_str();
    cmd->add_flag("--assume-complete", config.assume_complete, "treat the catalog as complete");
    cmd->add_option("--end-cap", config.end_cap, "hom/endomorphism enumeration cap exponent")->capture_default_str();
    cmd->add_option("--pd-cap", config.pd_cap, "projective dimension cap")->capture_default_str();
    cmd->add_option("--search-budget", config.search_budget, "assignments per dimension vector")->capture_default_str();
    cmd->add_option("--out", out, "write the JSON report here");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Split torsion pairs of bound quiver algebras over small prime fields"};
    app.require_subcommand(1);

    std::string file;
    std::string out;
    tpc::RunConfig config;
    std::uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "classify every vertex subset");
    auto* left = app.add_subcommand("left-part", "left part and its abelian-exactness");
    auto* catalog = app.add_subcommand("catalog", "indecomposables up to --max-dim");
    auto* verify = app.add_subcommand("verify", "run every oracle against the classification");
    for (auto* cmd : {classify, left, catalog, verify}) add_run_flags(cmd, file, config, out);
    auto* generate = app.add_subcommand("generate", "print a random spec from the property-suite generator");
    generate->add_option("--seed", seed, "generator seed")->required();
    generate->add_option("--out", out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? tpc::kExitOk : tpc::kExitInputError;
    }

    tpc::Report report;
    try {
        if (generate->parsed()) {
            report = tpc::generate_report(seed);
        } else {
            const tpc::AlgebraPtr algebra = tpc::build_algebra(tpc::load_spec_file(file));
            if (classify->parsed()) report = tpc::classify_report(algebra, config);
            if (left->parsed()) report = tpc::left_part_report(algebra, config);
            if (catalog->parsed()) report = tpc::catalog_report(algebra, config);
            if (verify->parsed()) report = tpc::verify_report(algebra, config);
            report.document["input"] = file;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << file << ": " << e.what() << "\n";
        return tpc::kExitInputError;
    }

    std::cout << report.summary;
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot write " << out << "\n";
            return tpc::kExitInputError;
        }
        os << report.document.dump(2) << "\n";
    }
    return report.exit_code;
}
