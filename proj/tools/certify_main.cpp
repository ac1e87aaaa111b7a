// certify: runs the certificate suites and writes a JSON or Markdown report.
//
//   certify run --config <path|-> [--format json|markdown] [--out <path>] [--timestamp on|off]
//   certify <skew|monotone|maximal|extensions|gap> [same options]
//
// Exit codes: 0 all suites pass, 1 a suite failed, 2 config/usage error, 3 I/O error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "c0mono/suite.hpp"

namespace {

struct Options {
    std::string config;
    std::string format = "json";
    std::string out = "-";
    std::string timestamp = "on";
};

void add_common(CLI::App* cmd, Options& opts) {
    cmd->add_option("--config", opts.config, "JSON config file, or - for standard input (built-in defaults if omitted)");
    cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--out", opts.out, "Report destination, - for standard output");
    cmd->add_option("--timestamp", opts.timestamp, "Include timestamp and durations")
        ->check(CLI::IsMember({"on", "off"}));
}

int execute(const Options& opts, std::optional<c0mono::SuiteKind> only) {
    c0mono::SuiteConfig config;
    try {
        if (opts.config.empty()) {
            config = c0mono::SuiteConfig::defaults();
        } else if (opts.config == "-") {
            config = c0mono::parse_config(std::cin);
        } else {
            config = c0mono::load_config(opts.config);
        }
    } catch (const c0mono::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return c0mono::exit_code::config_error;
    }
    if (only) {
        config.suites = {*only};
    }

    const c0mono::SuiteReport report = c0mono::run_suite(config);
    const c0mono::RenderOptions render{
        opts.format == "markdown" ? c0mono::ReportFormat::markdown : c0mono::ReportFormat::json,
        opts.timestamp == "on",
    };
    return c0mono::emit_report(report, render, opts.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificate suites for the skew operator T on c0"};
    app.require_subcommand(1);

    Options opts;
    auto* run = app.add_subcommand("run", "Run the suites selected in the config");
    add_common(run, opts);

    std::map<CLI::App*, c0mono::SuiteKind> shortcuts;
    for (const auto kind : c0mono::kAllSuites) {
        const std::string name(c0mono::suite_name(kind));
        auto* cmd = app.add_subcommand(name, "Run only the " + name + " suite");
        add_common(cmd, opts);
        shortcuts.emplace(cmd, kind);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return c0mono::exit_code::config_error;
    }

    try {
        for (const auto& [cmd, kind] : shortcuts) {
            if (cmd->parsed()) {
                return execute(opts, kind);
            }
        }
        return execute(opts, std::nullopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return c0mono::exit_code::suite_failed;
    }
}
