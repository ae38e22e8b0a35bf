#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gcoring/error.hpp"
#include "gcoring/fixtures.hpp"
#include "gcoring/structure_file.hpp"
#include "gcoring/suites.hpp"

using namespace gcoring;

namespace {

int run_check(const std::string& target, const std::string& suite, std::uint64_t seed, const std::string& format) {
    try {
        Fixture fx = load_target(target);
        CheckReport r = run_suite(fx, suite, seed);
        std::cout << (format == "machine" ? format_machine(r, fx.name, seed) : format_text(r, fx.name, seed));
        return r.ok() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int run_emit(const std::string& name, const std::string& path) {
    try {
        const std::string text = emit_structure(fixture_by_name(name));
        if (path.empty()) {
            std::cout << text;
            return 0;
        }
        std::ofstream out(path, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            return 2;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for group corings, their comodules, dual rings, Galois and Morita theory"};
    app.require_subcommand(1);

    std::string target, suite, format = "text";
    std::uint64_t seed = 0;
    CLI::App* check = app.add_subcommand("check", "Run a check suite on a structure file or a bundled fixture");
    check->add_option("target", target, "Structure file path or fixture name (FIX-...)")->required();
    check->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    check->add_option("--seed", seed, "Seed for sampled test objects")->default_val(0);
    check->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));

    CLI::App* fixtures = app.add_subcommand("fixtures", "List or emit bundled fixtures");
    fixtures->require_subcommand(1);
    CLI::App* list = fixtures->add_subcommand("list", "List bundled fixture names");
    std::string name, out_path;
    CLI::App* emit = fixtures->add_subcommand("emit", "Write a bundled fixture as a structure file");
    emit->add_option("name", name, "Fixture name")->required();
    emit->add_option("-o,--output", out_path, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return run_check(target, suite, seed, format);
    if (list->parsed()) {
        for (const auto& n : fixture_names()) std::cout << n << "  " << fixture_by_name(n).description << "\n";
        return 0;
    }
    if (emit->parsed()) return run_emit(name, out_path);
    return 2;
}
