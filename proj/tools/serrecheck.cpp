// serrecheck: Serre's condition and Cohen-Macaulay checks for simplicial
// complexes given as facet lists or generator pseudo-paths (gen:rp2, ...).
//
// Exit codes: 0 holds / agree, 1 fails / disagree, 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "report.hpp"

namespace rep = serrecheck::report;

int main(int argc, char** argv) {
    CLI::App app{"Serre's condition (S_r) and Cohen-Macaulay checks for simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::string fields = "q";
    app.add_flag("--json", as_json, "Print the JSON report instead of text");

    std::string source;
    const std::string input_help = "Facet file or generator pseudo-path (gen:rp2, gen:boundary-simplex:4, ...)";

    auto* homology = app.add_subcommand("homology", "Reduced Betti numbers");
    homology->add_option("input", source, input_help)->required();
    homology->add_option("--field,--fields", fields, "Comma-separated fields: q or a prime")->capture_default_str();

    int r = 0;
    std::string mode = "serre";
    bool audit = false;
    auto* check = app.add_subcommand("check", "Decide (S_r) or sequential (S_r)");
    check->add_option("input", source, input_help)->required();
    check->add_option("--r", r, "Serre index r >= 2")->required();
    check->add_option("--field,--fields", fields, "Comma-separated fields: q or a prime")->capture_default_str();
    check->add_option("--mode", mode, "serre or seq")->check(CLI::IsMember({"serre", "seq"}))->capture_default_str();
    check->add_flag("--audit", audit, "Collect every failing witness");

    std::optional<int> rmax;
    std::optional<std::size_t> gen_count;
    std::optional<std::uint64_t> seed;
    auto* oracle = app.add_subcommand("oracle", "Cross-check every characterization for each r");
    oracle->add_option("input", source, input_help);
    oracle->add_option("--field,--fields", fields, "Comma-separated fields: q or a prime")->capture_default_str();
    oracle->add_option("--rmax", rmax, "Largest r to test (default d = dim + 1)");
    oracle->add_option("--gen", gen_count, "Run over N complexes of the random corpus instead of an input");
    oracle->add_option("--seed", seed, "Base seed for --gen (default 7) or for gen:random");

    auto* profile = app.add_subcommand("profile", "max r, CM and sequential CM per field");
    profile->add_option("input", source, input_help)->required();
    profile->add_option("--field,--fields", fields, "Comma-separated fields: q or a prime")->capture_default_str();

    bool list = false;
    auto* gen = app.add_subcommand("gen", "Write a generated complex as a facet list");
    gen->add_option("spec", source, "Generator, with or without the gen: prefix");
    gen->add_option("--seed", seed, "Seed for random generators without seed=");
    gen->add_flag("--list", list, "List generator names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        rep::json report;
        const auto F = rep::parse_fields(fields);
        if (*homology) {
            report = rep::homology_report(rep::load_input(source, seed), F);
        } else if (*check) {
            report = rep::check_report(rep::load_input(source, seed), r, F,
                                       mode == "seq" ? rep::Mode::Sequential : rep::Mode::Serre, audit);
        } else if (*oracle) {
            if (gen_count && !source.empty()) throw rep::UsageError("give either an input or --gen, not both");
            if (gen_count) report = rep::oracle_corpus_report(*gen_count, seed.value_or(7), F, rmax);
            else if (source.empty()) throw rep::UsageError("oracle needs an input or --gen N");
            else report = rep::oracle_report(rep::load_input(source, seed), F, rmax);
        } else if (*profile) {
            report = rep::profile_report(rep::load_input(source, seed), F);
        } else if (*gen) {
            if (list) {
                for (const auto& name : rep::generator_names()) std::cout << "gen:" << name << "\n";
                return 0;
            }
            if (source.empty()) throw rep::UsageError("gen needs a generator spec (see --list)");
            const auto in = rep::load_input(source.starts_with("gen:") ? source : "gen:" + source, seed);
            report = rep::gen_report(in);
        }
        std::cout << (as_json ? report.dump(2) + "\n" : rep::render_text(report));
        return rep::exit_code(report);
    } catch (const rep::UsageError& e) {
        if (as_json) std::cout << rep::json{{"error", e.what()}, {"exit_code", 2}}.dump(2) << "\n";
        std::cerr << "serrecheck: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        if (as_json) std::cout << rep::json{{"error", e.what()}, {"exit_code", 2}}.dump(2) << "\n";
        std::cerr << "serrecheck: " << e.what() << "\n";
        return 2;
    }
}
