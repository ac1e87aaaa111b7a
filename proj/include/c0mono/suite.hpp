#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "c0mono/rational.hpp"
#include "c0mono/seqspace.hpp"

namespace c0mono {

/// Invalid configuration document; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Certificate suites, in report order.
enum class SuiteKind { skew, monotone, maximal, extensions, gap };

inline constexpr SuiteKind kAllSuites[] = {SuiteKind::skew, SuiteKind::monotone, SuiteKind::maximal,
                                           SuiteKind::extensions, SuiteKind::gap};

std::string_view suite_name(SuiteKind kind);
/// Throws ConfigError for an unknown name. "all" is not accepted here.
SuiteKind suite_from_name(std::string_view name);

struct SuiteConfig {
    std::uint64_t seed = 7;
    std::size_t samples = 1000;
    std::size_t support_max = 16;
    std::int64_t coeff_bound = 100;
    /// Distinct, in first-occurrence order.
    std::vector<Rational> taus;
    EvConstSeq ytilde;
    /// Distinct, in report order.
    std::vector<SuiteKind> suites;

    /// seed 7, ytilde = unit(1), taus {1/3, 1/2, 1, 2, 3}, every suite.
    static SuiteConfig defaults();
};

/// Parses and validates a JSON config document. Missing fields take the
/// values of SuiteConfig::defaults(). Throws ConfigError.
SuiteConfig parse_config(std::string_view document);
SuiteConfig parse_config(std::istream& in);
SuiteConfig load_config(const std::filesystem::path& path);

nlohmann::ordered_json config_to_json(const SuiteConfig& config);

struct SuiteRecord {
    std::string name;
    bool passed = true;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    /// Exact values, always serialized as rational strings.
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
    std::vector<std::string> failures;
    double duration_ms = 0.0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<SuiteRecord> suites;
    std::string timestamp;

    [[nodiscard]] bool passed() const;
};

/// Runs the selected suites (concurrently, one sampler per suite) and
/// assembles the report in suite order. Certificate errors become suite
/// failures.
SuiteReport run_suite(const SuiteConfig& config);

enum class ReportFormat { json, markdown };

struct RenderOptions {
    ReportFormat format = ReportFormat::json;
    /// Include the timestamp and per-suite durations. Off gives byte-identical output per config.
    bool timing = true;
};

std::string render_report(const SuiteReport& report, const RenderOptions& options);

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int suite_failed = 1;
inline constexpr int config_error = 2;
inline constexpr int io_error = 3;
}  // namespace exit_code

/// Writes the rendered report to `out` (standard output when empty or "-").
/// Returns exit_code::pass / suite_failed, or io_error after printing to
/// standard error when the write fails.
int emit_report(const SuiteReport& report, const RenderOptions& options, const std::string& out);

}  // namespace c0mono
