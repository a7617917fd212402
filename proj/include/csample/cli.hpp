#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "csample/analysis.hpp"
#include "csample/errors.hpp"
#include "csample/oracle.hpp"
#include "csample/sampler.hpp"

namespace csample {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReportFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitSize = 4;

enum class OutputFormat { lines, csv, json };

struct CliConfig {
    std::string seed;
    std::uint64_t size = 0;
    bool with_replacement = false;
    OutputFormat format = OutputFormat::lines;
    bool show_tickets = false;
    std::string input_path = "-";  // "-" reads standard input
};

// Newline-delimited ids; the trailing newline is optional. Blank lines,
// NUL bytes and duplicates are reported with their line number.
inline std::vector<std::string> read_ids(std::istream& in) {
    std::vector<std::string> ids;
    std::unordered_set<std::string> seen;
    std::string line;
    for (std::uint64_t line_no = 1; std::getline(in, line); ++line_no) {
        if (line.empty()) {
            throw InputError("line " + std::to_string(line_no) + ": empty id");
        }
        if (line.find('\0') != std::string::npos) {
            throw InputError("line " + std::to_string(line_no) + ": id contains a NUL byte");
        }
        if (!seen.insert(line).second) {
            throw InputError("line " + std::to_string(line_no) + ": duplicate id \"" + line +
                             "\"");
        }
        ids.push_back(line);
    }
    if (ids.empty()) throw InputError("input contains no ids");
    return ids;
}

inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline void write_records(const std::vector<SampleRecord>& records, OutputFormat format,
                          bool show_tickets, std::ostream& out) {
    switch (format) {
        case OutputFormat::lines:
            for (const SampleRecord& r : records) out << r.id << '\n';
            break;
        case OutputFormat::csv:
            out << (show_tickets ? "position,id,generation,ticket_number"
                                 : "position,id,generation")
                << '\n';
            for (const SampleRecord& r : records) {
                out << r.position << ',' << csv_field(r.id) << ',' << r.generation;
                if (show_tickets) out << ',' << r.number.str();
                out << '\n';
            }
            break;
        case OutputFormat::json: {
            nlohmann::ordered_json array = nlohmann::ordered_json::array();
            for (const SampleRecord& r : records) {
                nlohmann::ordered_json obj;
                obj["position"] = r.position;
                obj["id"] = r.id;
                obj["generation"] = r.generation;
                if (show_tickets) obj["ticket_number"] = r.number.str();
                array.push_back(std::move(obj));
            }
            out << array.dump(2) << '\n';
            break;
        }
    }
}

inline int run_draw(const CliConfig& config, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    if (config.show_tickets && config.format == OutputFormat::lines) {
        err << "csample: --show-tickets requires --format csv or json\n";
        return kExitUsage;
    }
    try {
        Population population = Population::from_ids(read_ids(in));
        std::vector<SampleRecord> records =
            sample(population, config.seed, config.size, config.with_replacement);
        write_records(records, config.format, config.show_tickets, out);
        return kExitOk;
    } catch (const SizeError& e) {
        err << "csample: " << e.what() << '\n';
        return kExitSize;
    } catch (const InputError& e) {
        err << "csample: " << e.what() << '\n';
        return kExitInput;
    }
}

struct AnalyzeConfig {
    enum class Kind { log_gap, g_attempts, nine_run, chi_square };
    Kind kind = Kind::log_gap;
    unsigned k = 1;
    unsigned max_k = 20;
    unsigned n = 2;
    std::uint64_t trials = 0;
};

// One JSON object per StatReport, one per line. Exit 0 only if all pass.
inline int run_analyze(const AnalyzeConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<StatReport> reports;
    try {
        switch (config.kind) {
            case AnalyzeConfig::Kind::log_gap:
                reports.push_back(log_gap_mean(config.k, config.trials));
                break;
            case AnalyzeConfig::Kind::g_attempts: {
                AttemptSummary summary = measure_g_attempts(config.trials);
                reports.push_back(g_attempt_mean_report(summary));
                reports.push_back(make_report("g_attempt_max", summary.trials,
                                              summary.max, 0.0, 500.0));
                break;
            }
            case AnalyzeConfig::Kind::nine_run: {
                auto [slope, r2] = nine_run_reports(config.max_k, config.trials);
                reports.push_back(std::move(slope));
                reports.push_back(std::move(r2));
                break;
            }
            case AnalyzeConfig::Kind::chi_square:
                reports.push_back(chi_square_first_draw(config.n, config.trials));
                break;
        }
    } catch (const InputError& e) {
        err << "csample: " << e.what() << '\n';
        return kExitUsage;
    }

    bool all_pass = true;
    for (const StatReport& r : reports) {
        nlohmann::ordered_json obj;
        obj["name"] = r.name;
        obj["sample_count"] = r.sample_count;
        obj["estimate"] = r.estimate;
        obj["reference"] = r.reference;
        obj["tolerance"] = r.tolerance;
        obj["pass"] = r.pass;
        out << obj.dump() << '\n';
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitReportFailed;
}

}  // namespace csample
