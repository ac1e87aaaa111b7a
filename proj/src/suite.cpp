#include "c0mono/suite.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "c0mono/certify.hpp"
#include "c0mono/gossez.hpp"
#include "c0mono/serialize.hpp"

namespace c0mono {

using json = nlohmann::ordered_json;

std::string_view suite_name(SuiteKind kind) {
    switch (kind) {
        case SuiteKind::skew: return "skew";
        case SuiteKind::monotone: return "monotone";
        case SuiteKind::maximal: return "maximal";
        case SuiteKind::extensions: return "extensions";
        case SuiteKind::gap: return "gap";
    }
    return "unknown";
}

SuiteKind suite_from_name(std::string_view name) {
    for (const auto kind : kAllSuites) {
        if (suite_name(kind) == name) {
            return kind;
        }
    }
    throw ConfigError("suites: unknown suite name '" + std::string(name) + "'");
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.taus = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    c.ytilde = EvConstSeq::unit(1);
    c.suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
    return c;
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

std::uint64_t read_unsigned(const json& node, const char* field, std::uint64_t min) {
    if (!node.is_number_integer() || (!node.is_number_unsigned() && node.get<std::int64_t>() < 0)) {
        throw ConfigError(std::string(field) + ": expected a nonnegative integer, got " + node.dump());
    }
    const auto value = node.get<std::uint64_t>();
    if (value < min) {
        throw ConfigError(std::string(field) + ": must be at least " + std::to_string(min) + ", got " + node.dump());
    }
    return value;
}

Rational read_rational(const json& node, const std::string& field) {
    try {
        return rational_from_json(node);
    } catch (const ParseError& e) {
        throw ConfigError(field + ": " + e.what());
    }
}

}  // namespace

SuiteConfig parse_config(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }

    SuiteConfig config = SuiteConfig::defaults();
    for (const auto& [key, node] : doc.items()) {
        if (key == "seed") {
            config.seed = read_unsigned(node, "seed", 0);
        } else if (key == "samples") {
            config.samples = read_unsigned(node, "samples", 1);
        } else if (key == "support_max") {
            config.support_max = read_unsigned(node, "support_max", 2);
        } else if (key == "coeff_bound") {
            const auto bound = read_unsigned(node, "coeff_bound", 1);
            // Keeps p/q draws inside int64 arithmetic in the sampler.
            if (bound > (std::uint64_t{1} << 62)) {
                throw ConfigError("coeff_bound: too large");
            }
            config.coeff_bound = static_cast<std::int64_t>(bound);
        } else if (key == "taus") {
            if (!node.is_array() || node.empty()) {
                throw ConfigError("taus: expected a nonempty array of rationals");
            }
            config.taus.clear();
            for (std::size_t i = 0; i < node.size(); ++i) {
                const std::string field = "taus[" + std::to_string(i) + "]";
                Rational tau = read_rational(node[i], field);
                if (tau.sign() <= 0) {
                    throw ConfigError(field + ": tau must be positive, got " + tau.str());
                }
                if (std::find(config.taus.begin(), config.taus.end(), tau) == config.taus.end()) {
                    config.taus.push_back(std::move(tau));
                }
            }
        } else if (key == "ytilde") {
            try {
                config.ytilde = sequence_from_json(node);
            } catch (const ParseError& e) {
                throw ConfigError(std::string("ytilde: ") + e.what());
            }
            if (!config.ytilde.finitely_supported()) {
                throw ConfigError("ytilde: tail must be 0");
            }
            const Rational mass = total_sum(config.ytilde);
            if (mass.sign() <= 0) {
                throw ConfigError("ytilde: <e, ytilde> must be positive, got " + mass.str());
            }
        } else if (key == "suites") {
            if (!node.is_array()) {
                throw ConfigError("suites: expected an array of suite names");
            }
            if (node.empty()) {
                throw ConfigError("suites: at least one suite must be selected");
            }
            std::vector<SuiteKind> chosen;
            for (const auto& name : node) {
                if (!name.is_string()) {
                    throw ConfigError("suites: expected suite names as strings, got " + name.dump());
                }
                const auto text = name.get<std::string>();
                if (text == "all") {
                    chosen.insert(chosen.end(), std::begin(kAllSuites), std::end(kAllSuites));
                } else {
                    chosen.push_back(suite_from_name(text));
                }
            }
            std::sort(chosen.begin(), chosen.end());
            chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
            config.suites = std::move(chosen);
        } else {
            throw ConfigError("unknown config field '" + key + "'");
        }
    }
    return config;
}

SuiteConfig parse_config(std::istream& in) {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

SuiteConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    return parse_config(in);
}

json config_to_json(const SuiteConfig& config) {
    json taus = json::array();
    for (const auto& t : config.taus) {
        taus.push_back(to_json(t));
    }
    json suites = json::array();
    for (const auto kind : config.suites) {
        suites.push_back(std::string(suite_name(kind)));
    }
    return {{"seed", config.seed},
            {"samples", config.samples},
            {"support_max", config.support_max},
            {"coeff_bound", config.coeff_bound},
            {"taus", std::move(taus)},
            {"ytilde", to_json(config.ytilde)},
            {"suites", std::move(suites)}};
}

// ---------------------------------------------------------------------------
// Suites

namespace {

void fail(SuiteRecord& record, std::string message) {
    record.passed = false;
    // Cap the list; counts carry the totals.
    if (record.failures.size() < 20) {
        record.failures.push_back(std::move(message));
    }
}

std::vector<GraphPoint> draw_graph_points(GraphSampler& sampler, const SuiteConfig& config) {
    std::vector<GraphPoint> points;
    points.reserve(config.samples);
    for (std::size_t i = 0; i < config.samples; ++i) {
        points.push_back(random_graph_point(sampler, config.support_max, config.coeff_bound));
    }
    return points;
}

void run_skew(const SuiteConfig& config, GraphSampler& sampler, SuiteRecord& record) {
    std::uint64_t failures = 0;
    Rational worst;
    for (std::size_t i = 0; i < config.samples; ++i) {
        const EvConstSeq y = sampler.sequence(config.support_max, config.coeff_bound);
        const EvConstSeq gy = gossez_apply(y);
        const Rational p = pairing(gy, y);
        worst = std::max(worst, p.abs());
        if (!p.is_zero()) {
            ++failures;
            fail(record, "<G(y), y> = " + p.str() + " for y = " + to_string(y));
        }
        if (gy.tail() != -total_sum(y)) {
            ++failures;
            fail(record, "tail(G(y)) != -sum(y) for y = " + to_string(y));
        }
    }
    record.counts["samples"] = config.samples;
    record.counts["failures"] = failures;
    record.evidence["max_abs_pairing"] = worst.str();
}

void run_monotone(const SuiteConfig& config, GraphSampler& sampler, SuiteRecord& record) {
    std::uint64_t failures = 0;
    Rational worst;
    for (std::size_t i = 0; i < config.samples; ++i) {
        const GraphPoint p = random_graph_point(sampler, config.support_max, config.coeff_bound);
        const GraphPoint q = random_graph_point(sampler, config.support_max, config.coeff_bound);
        const Rational product = monotone_product(p, q);
        worst = std::max(worst, product.abs());
        if (!product.is_zero()) {
            ++failures;
            fail(record, "monotone product " + product.str() + " != 0");
        }
    }
    record.counts["pairs"] = config.samples;
    record.counts["failures"] = failures;
    record.evidence["max_abs_product"] = worst.str();
}

/// Re-evaluates a Violation independently of violation_witness.
bool violation_checks_out(const EvConstSeq& x, const EvConstSeq& y, const Violation& v) {
    const auto& w = v.witness;
    if (-gossez_apply(w.y()) != w.x() || !range_member(w.y())) {
        return false;
    }
    const Rational product = pairing(x - w.x(), y - w.y());
    if (product != v.product || product.sign() >= 0) {
        return false;
    }
    return v.kind != Violation::Kind::recurrence_break || product == Rational(-1);
}

void run_maximal(const SuiteConfig& config, GraphSampler& sampler, SuiteRecord& record) {
    std::uint64_t members = 0;
    std::uint64_t violations = 0;
    std::uint64_t recurrence_breaks = 0;
    std::uint64_t sum_defects = 0;
    std::uint64_t failures = 0;
    std::optional<Rational> worst_product;

    auto expect_violation = [&](const EvConstSeq& x, const EvConstSeq& y, const char* what) {
        const WitnessVerdict verdict = violation_witness(x, y);
        const auto* v = std::get_if<Violation>(&verdict);
        if (v == nullptr) {
            ++failures;
            fail(record, std::string(what) + ": expected Violation, got Member");
            return;
        }
        if (!violation_checks_out(x, y, *v)) {
            ++failures;
            fail(record, std::string(what) + ": witness does not reproduce product " + v->product.str());
            return;
        }
        ++violations;
        (v->kind == Violation::Kind::recurrence_break ? recurrence_breaks : sum_defects)++;
        if (!worst_product || v->product > *worst_product) {
            worst_product = v->product;
        }
    };

    for (std::size_t i = 0; i < config.samples; ++i) {
        const GraphPoint p = random_graph_point(sampler, config.support_max, config.coeff_bound);
        const WitnessVerdict verdict = violation_witness(p.x(), p.y());
        if (std::holds_alternative<Member>(verdict)) {
            ++members;
        } else {
            ++failures;
            fail(record, "graph point rejected: y = " + to_string(p.y()));
        }
    }

    // Perturbations by a nonzero delta outside graph(T); graph(T) is linear,
    // so the perturbed pair is outside it as well.
    for (std::size_t i = 0; i < config.samples; ++i) {
        const GraphPoint p = random_graph_point(sampler, config.support_max, config.coeff_bound);
        EvConstSeq dx;
        EvConstSeq dy;
        do {
            const auto mode = sampler.uniform(0, 2);
            dx = mode == 1 ? EvConstSeq{} : sampler.nonzero_sequence(config.support_max, config.coeff_bound);
            dy = mode == 0 ? EvConstSeq{} : sampler.nonzero_sequence(config.support_max, config.coeff_bound);
        } while (range_member(dy) && -gossez_apply(dy) == dx);
        expect_violation(p.x() + dx, p.y() + dy, "perturbed graph point");
    }

    // Pairs satisfying the difference recurrence with a nonzero sum:
    // x = -G(y) - (sum y) e is finitely supported but not -G(y).
    for (std::size_t i = 0; i < config.samples / 4; ++i) {
        EvConstSeq y = sampler.nonzero_sequence(config.support_max, config.coeff_bound);
        const Rational s = total_sum(y);
        if (s.is_zero()) {
            continue;
        }
        const EvConstSeq x = -gossez_apply(y) - EvConstSeq::constant(s);
        expect_violation(x, y, "sum-defect pair");
    }

    record.counts["members"] = members;
    record.counts["violations"] = violations;
    record.counts["recurrence_breaks"] = recurrence_breaks;
    record.counts["sum_defects"] = sum_defects;
    record.counts["failures"] = failures;
    record.evidence["max_violation_product"] = worst_product ? worst_product->str() : std::string("none");
}

void run_extensions(const SuiteConfig& config, GraphSampler& sampler, SuiteRecord& record) {
    const Rational mass = total_sum(config.ytilde);
    record.evidence["pairing_e_ytilde"] = mass.str();
    record.counts["distinct_taus"] = config.taus.size();
    if (config.taus.size() < 2) {
        fail(record, "insufficient distinct taus: need at least 2, got " + std::to_string(config.taus.size()));
        return;
    }

    const auto points = draw_graph_points(sampler, config);
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    json margins = json::array();
    for (const auto& tau : config.taus) {
        const ExtensionPoint ep = extension_point(tau, config.ytilde);
        const Rational first = closure_margin(ep, points.front());
        bool constant = true;
        for (const auto& p : points) {
            const Rational m = closure_margin(ep, p);
            ++checked;
            if (m != first) {
                constant = false;
            }
            if (m != mass || m.sign() <= 0) {
                ++failures;
                fail(record, "closure margin " + m.str() + " != <e, ytilde> at tau = " + tau.str());
            }
        }
        margins.push_back({{"tau", tau.str()}, {"margin", first.str()}, {"constant", constant}});
    }

    json products = json::array();
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < config.taus.size(); ++i) {
        for (std::size_t j = i + 1; j < config.taus.size(); ++j) {
            const auto& t1 = config.taus[i];
            const auto& t2 = config.taus[j];
            ++pairs;
            try {
                const Rational d = distinctness(t1, t2, config.ytilde);
                products.push_back({{"tau1", t1.str()}, {"tau2", t2.str()}, {"product", d.str()}});
            } catch (const std::exception& e) {
                ++failures;
                fail(record, "distinctness(" + t1.str() + ", " + t2.str() + "): " + e.what());
            }
        }
    }

    record.counts["margins_checked"] = checked;
    record.counts["pairs"] = pairs;
    record.counts["failures"] = failures;
    record.evidence["margins"] = std::move(margins);
    record.evidence["distinctness"] = std::move(products);
}

void run_gap(const SuiteConfig& config, GraphSampler& sampler, SuiteRecord& record) {
    const Rational mass = total_sum(config.ytilde);
    const auto points = draw_graph_points(sampler, config);
    std::uint64_t failures = 0;
    json gaps = json::array();
    for (const auto& tau : config.taus) {
        const ExtensionPoint ep = extension_point(tau, config.ytilde);
        const Rational duality = pairing(ep.xstarstar(), ep.xstar());
        try {
            const Rational gap = fitzpatrick_gap(ep, points);
            if (gap != mass || gap.sign() <= 0) {
                ++failures;
                fail(record, "gap " + gap.str() + " != <e, ytilde> at tau = " + tau.str());
            }
            gaps.push_back({{"tau", tau.str()},
                            {"pairing_xstar_xstarstar", duality.str()},
                            {"sup", (duality - gap).str()},
                            {"gap", gap.str()}});
        } catch (const std::exception& e) {
            ++failures;
            fail(record, "fitzpatrick_gap at tau = " + tau.str() + ": " + e.what());
        }
    }
    record.counts["samples"] = config.samples;
    record.counts["taus"] = config.taus.size();
    record.counts["failures"] = failures;
    record.evidence["pairing_e_ytilde"] = mass.str();
    // Every per-tau gap equals <e, ytilde> unless a failure was recorded.
    record.evidence["gap"] = failures == 0 ? mass.str() : std::string("inconsistent");
    record.evidence["per_tau"] = std::move(gaps);
}

SuiteRecord run_one(SuiteKind kind, const SuiteConfig& config) {
    SuiteRecord record;
    record.name = std::string(suite_name(kind));
    GraphSampler sampler(GraphSampler::split_seed(config.seed, static_cast<std::uint64_t>(kind)));
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (kind) {
            case SuiteKind::skew: run_skew(config, sampler, record); break;
            case SuiteKind::monotone: run_monotone(config, sampler, record); break;
            case SuiteKind::maximal: run_maximal(config, sampler, record); break;
            case SuiteKind::extensions: run_extensions(config, sampler, record); break;
            case SuiteKind::gap: run_gap(config, sampler, record); break;
        }
    } catch (const std::exception& e) {
        fail(record, std::string("aborted: ") + e.what());
    }
    record.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return record;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteRecord& r) { return r.passed; });
}

SuiteReport run_suite(const SuiteConfig& config) {
    if (config.suites.empty()) {
        throw ConfigError("suites: at least one suite must be selected");
    }
    SuiteReport report;
    report.config = config;
    report.timestamp = utc_timestamp();

    std::vector<std::future<SuiteRecord>> pending;
    pending.reserve(config.suites.size());
    for (const auto kind : config.suites) {
        pending.push_back(std::async(std::launch::async, run_one, kind, std::cref(config)));
    }
    for (auto& f : pending) {
        report.suites.push_back(f.get());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_json(const SuiteReport& report, bool timing) {
    json doc;
    doc["overall"] = report.passed() ? "pass" : "fail";
    if (timing) {
        doc["timestamp"] = report.timestamp;
    }
    doc["config"] = config_to_json(report.config);
    json suites = json::array();
    for (const auto& s : report.suites) {
        json entry;
        entry["name"] = s.name;
        entry["status"] = s.passed ? "pass" : "fail";
        entry["counts"] = s.counts;
        entry["evidence"] = s.evidence;
        entry["failures"] = s.failures;
        if (timing) {
            entry["duration_ms"] = s.duration_ms;
        }
        suites.push_back(std::move(entry));
    }
    doc["suites"] = std::move(suites);
    return doc.dump(2) + "\n";
}

void markdown_evidence(std::ostream& os, const std::string& key, const json& value) {
    if (value.is_array()) {
        os << "- " << key << ":\n";
        for (const auto& item : value) {
            os << "  - ";
            bool first = true;
            for (const auto& [k, v] : item.items()) {
                os << (first ? "" : ", ") << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump());
                first = false;
            }
            os << '\n';
        }
    } else {
        os << "- " << key << ": `" << (value.is_string() ? value.get<std::string>() : value.dump()) << "`\n";
    }
}

std::string render_markdown(const SuiteReport& report, bool timing) {
    std::ostringstream os;
    os << "# Certificate report\n\n";
    os << "Overall: **" << (report.passed() ? "pass" : "fail") << "**\n\n";
    if (timing) {
        os << "Generated: " << report.timestamp << "\n\n";
    }
    const auto& c = report.config;
    os << "Config: seed " << c.seed << ", samples " << c.samples << ", support_max " << c.support_max
       << ", coeff_bound " << c.coeff_bound << ", ytilde " << to_string(c.ytilde) << ", taus";
    for (const auto& t : c.taus) {
        os << ' ' << t;
    }
    os << "\n\n";
    os << "| suite | status |" << (timing ? " duration (ms) |" : "") << "\n";
    os << "|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& s : report.suites) {
        os << "| " << s.name << " | " << (s.passed ? "pass" : "fail") << " |";
        if (timing) {
            os << ' ' << static_cast<long long>(s.duration_ms) << " |";
        }
        os << '\n';
    }
    for (const auto& s : report.suites) {
        os << "\n## " << s.name << "\n\n";
        for (const auto& [k, v] : s.counts.items()) {
            os << "- " << k << ": " << v.dump() << '\n';
        }
        for (const auto& [k, v] : s.evidence.items()) {
            markdown_evidence(os, k, v);
        }
        for (const auto& f : s.failures) {
            os << "- FAILURE: " << f << '\n';
        }
    }
    return os.str();
}

}  // namespace

std::string render_report(const SuiteReport& report, const RenderOptions& options) {
    return options.format == ReportFormat::json ? render_json(report, options.timing)
                                                : render_markdown(report, options.timing);
}

int emit_report(const SuiteReport& report, const RenderOptions& options, const std::string& out) {
    const std::string text = render_report(report, options);
    if (out.empty() || out == "-") {
        std::cout << text << std::flush;
        if (!std::cout) {
            std::cerr << "error: failed writing report to standard output\n";
            return exit_code::io_error;
        }
    } else {
        std::ofstream file(out, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open '" << out << "' for writing\n";
            return exit_code::io_error;
        }
        file << text;
        file.close();
        if (!file) {
            std::cerr << "error: failed writing report to '" << out << "'\n";
            return exit_code::io_error;
        }
    }
    return report.passed() ? exit_code::pass : exit_code::suite_failed;
}

}  // namespace c0mono
