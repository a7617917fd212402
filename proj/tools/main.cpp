#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "csample/cli.hpp"

namespace {

csample::OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return csample::OutputFormat::csv;
    if (name == "json") return csample::OutputFormat::json;
    return csample::OutputFormat::lines;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic consistent sampling: seeded, reproducible draws with or "
                 "without replacement, plus a statistical self-check harness."};
    app.require_subcommand(1);

    csample::CliConfig draw_config;
    std::string format_name = "lines";
    CLI::App* draw = app.add_subcommand(
        "draw", "Draw a sample from newline-delimited item ids (stdin or --input)");
    draw->add_option("--seed", draw_config.seed, "Seed; the sole source of randomness")
        ->required();
    draw->add_option("--size", draw_config.size, "Number of records to draw")->required();
    draw->add_flag("--with-replacement", draw_config.with_replacement,
                   "Return drawn items to the pool");
    draw->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"lines", "csv", "json"}))
        ->capture_default_str();
    draw->add_flag("--show-tickets", draw_config.show_tickets,
                   "Include ticket numbers (csv/json only)");
    draw->add_option("--input", draw_config.input_path,
                     "Path to the id list; '-' reads standard input")
        ->capture_default_str();

    csample::AnalyzeConfig analyze_config;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Run a statistical self-check; JSON report per line");
    analyze->require_subcommand(1);

    CLI::App* log_gap = analyze->add_subcommand(
        "log-gap", "Mean of ln(1 - ticket) at generation k against the -k law");
    log_gap->add_option("--k", analyze_config.k, "Generation to inspect")->required();
    log_gap->add_option("--trials", analyze_config.trials, "Trial count")->required();

    CLI::App* g_attempts = analyze->add_subcommand(
        "g-attempts", "Retry counts of the replacement-ticket procedure");
    g_attempts->add_option("--trials", analyze_config.trials, "Trial count")->required();

    CLI::App* nine_run = analyze->add_subcommand(
        "nine-run", "Linear growth of the leading-9 run across generations");
    nine_run->add_option("--max-k", analyze_config.max_k, "Highest generation")->required();
    nine_run->add_option("--trials", analyze_config.trials, "Trial count")->required();

    CLI::App* chi_square = analyze->add_subcommand(
        "chi-square", "Uniformity of the first draw over many seeds");
    chi_square->add_option("--n", analyze_config.n, "Population size")->required();
    chi_square->add_option("--trials", analyze_config.trials, "Trial count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? csample::kExitOk : csample::kExitUsage;
    }

    if (draw->parsed()) {
        draw_config.format = parse_format(format_name);
        if (draw_config.input_path == "-") {
            return csample::run_draw(draw_config, std::cin, std::cout, std::cerr);
        }
        std::ifstream file(draw_config.input_path, std::ios::binary);
        if (!file) {
            std::cerr << "csample: cannot open input file: " << draw_config.input_path
                      << '\n';
            return csample::kExitInput;
        }
        return csample::run_draw(draw_config, file, std::cout, std::cerr);
    }

    if (log_gap->parsed()) analyze_config.kind = csample::AnalyzeConfig::Kind::log_gap;
    if (g_attempts->parsed()) analyze_config.kind = csample::AnalyzeConfig::Kind::g_attempts;
    if (nine_run->parsed()) analyze_config.kind = csample::AnalyzeConfig::Kind::nine_run;
    if (chi_square->parsed()) analyze_config.kind = csample::AnalyzeConfig::Kind::chi_square;
    return csample::run_analyze(analyze_config, std::cout, std::cerr);
}
