#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "c0mono/serialize.hpp"
#include "c0mono/suite.hpp"

using namespace c0mono;
using json = nlohmann::ordered_json;

namespace {

const char* kMinimal = R"({"seed": 7, "ytilde": {"prefix": ["1"], "tail": "0"}, "taus": ["1", "2"]})";

SuiteConfig small(std::initializer_list<SuiteKind> suites) {
    SuiteConfig c = SuiteConfig::defaults();
    c.samples = 60;
    c.suites = suites;
    return c;
}

}  // namespace

TEST_SUITE("serialize") {
    TEST_CASE("sequence wire format") {
        const EvConstSeq s({Rational(1, 2), Rational(-3)}, Rational(0));
        const json j = to_json(s);
        CHECK(j.dump() == R"({"prefix":["1/2","-3"],"tail":"0"})");
        CHECK(sequence_from_json(j) == s);
        CHECK(sequence_from_json(json::parse(R"({"prefix": [2, "4/2"], "tail": 2})")) == EvConstSeq({}, Rational(2)));
        CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"prefix": []})")), ParseError);
        CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"prefix": ["x"], "tail": "0"})")), ParseError);
        CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"prefix": [1.5], "tail": "0"})")), ParseError);
        CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"prefix": [], "tail": "0", "x": 1})")), ParseError);
    }
}

TEST_SUITE("config") {
    TEST_CASE("minimal config takes defaults") {
        const SuiteConfig c = parse_config(kMinimal);
        CHECK(c.seed == 7);
        CHECK(c.samples == 1000);
        CHECK(c.support_max == 16);
        CHECK(c.coeff_bound == 100);
        CHECK(c.suites.size() == 5);
        CHECK(c.ytilde == EvConstSeq::unit(1));
        CHECK(c.taus == std::vector<Rational>{Rational(1), Rational(2)});
        CHECK(parse_config("{}").taus.size() == 5);
    }

    TEST_CASE("duplicate taus are merged") {
        const SuiteConfig c = parse_config(R"({"taus": ["1", "1", "2/2"]})");
        CHECK(c.taus == std::vector<Rational>{Rational(1)});
    }

    TEST_CASE("suite selection") {
        CHECK(parse_config(R"({"suites": ["gap", "skew", "gap"]})").suites ==
              std::vector<SuiteKind>{SuiteKind::skew, SuiteKind::gap});
        CHECK(parse_config(R"({"suites": ["all"]})").suites.size() == 5);
    }

    TEST_CASE("field-level errors") {
        auto message = [](const char* doc) {
            try {
                parse_config(doc);
            } catch (const ConfigError& e) {
                return std::string(e.what());
            }
            return std::string("no error");
        };
        CHECK(message(R"({"ytilde": {"prefix": ["-1", "1"], "tail": "0"}})").find("ytilde") != std::string::npos);
        CHECK(message(R"({"ytilde": {"prefix": [], "tail": "1"}})").find("ytilde") != std::string::npos);
        CHECK(message(R"({"taus": ["0"]})").find("taus[0]") != std::string::npos);
        CHECK(message(R"({"taus": ["1", "-1/2"]})").find("taus[1]") != std::string::npos);
        CHECK(message(R"({"taus": ["1/0"]})").find("taus[0]") != std::string::npos);
        CHECK(message(R"({"taus": []})").find("taus") != std::string::npos);
        CHECK(message(R"({"suites": ["skew", "bogus"]})").find("bogus") != std::string::npos);
        CHECK(message(R"({"suites": []})").find("suites") != std::string::npos);
        CHECK(message(R"({"samples": 0})").find("samples") != std::string::npos);
        CHECK(message(R"({"support_max": 1})").find("support_max") != std::string::npos);
        CHECK(message(R"({"seed": -3})").find("seed") != std::string::npos);
        CHECK(message(R"({"colour": 1})").find("colour") != std::string::npos);
        CHECK(message("[1, 2]").find("object") != std::string::npos);
        CHECK(message("{").find("JSON") != std::string::npos);
    }

    TEST_CASE("config round trip through JSON") {
        const SuiteConfig c = parse_config(R"({"seed": 3, "samples": 9, "taus": ["1/3", "5"],
            "ytilde": {"prefix": ["0", "2"], "tail": "0"}, "suites": ["maximal"]})");
        const SuiteConfig again = parse_config(config_to_json(c).dump());
        CHECK(config_to_json(again) == config_to_json(c));
    }

    TEST_CASE("load_config reports unreadable files") {
        CHECK_THROWS_AS(load_config("/nonexistent/dir/config.json"), ConfigError);
    }
}

TEST_SUITE("runner") {
    TEST_CASE("every suite passes on the defaults") {
        SuiteConfig c = small({SuiteKind::skew, SuiteKind::monotone, SuiteKind::maximal, SuiteKind::extensions,
                               SuiteKind::gap});
        const SuiteReport r = run_suite(c);
        REQUIRE(r.suites.size() == 5);
        for (const auto& s : r.suites) {
            INFO(s.name);
            CHECK(s.passed);
            CHECK(s.failures.empty());
        }
        CHECK(r.passed());
        CHECK(r.suites[4].name == "gap");
        CHECK(r.suites[4].evidence["gap"] == "1");
    }

    TEST_CASE("extension products for taus 1, 2, 3") {
        SuiteConfig c = small({SuiteKind::extensions});
        c.taus = {Rational(1), Rational(2), Rational(3)};
        const SuiteReport r = run_suite(c);
        REQUIRE(r.suites.size() == 1);
        const auto& products = r.suites[0].evidence["distinctness"];
        REQUIRE(products.size() == 3);
        CHECK(products[0]["product"] == "-1/2");
        CHECK(products[1]["product"] == "-4/3");
        CHECK(products[2]["product"] == "-1/6");
    }

    TEST_CASE("a single tau fails the extensions suite") {
        SuiteConfig c = parse_config(R"({"taus": ["1", "1"], "suites": ["extensions", "gap"], "samples": 20})");
        const SuiteReport r = run_suite(c);
        CHECK_FALSE(r.passed());
        CHECK_FALSE(r.suites[0].passed);
        REQUIRE_FALSE(r.suites[0].failures.empty());
        CHECK(r.suites[0].failures[0].find("insufficient distinct taus") != std::string::npos);
        CHECK(r.suites[1].passed);
    }

    TEST_CASE("empty suite list is a config error") {
        SuiteConfig c = small({});
        CHECK_THROWS_AS(run_suite(c), ConfigError);
    }

    TEST_CASE("deterministic rendering without timing") {
        SuiteConfig c = small({SuiteKind::maximal, SuiteKind::gap});
        const RenderOptions off{ReportFormat::json, false};
        const std::string a = render_report(run_suite(c), off);
        const std::string b = render_report(run_suite(c), off);
        CHECK(a == b);
        CHECK(a.find("timestamp") == std::string::npos);
        CHECK(a.find("duration_ms") == std::string::npos);
        CHECK(json::parse(a)["overall"] == "pass");

        const RenderOptions md{ReportFormat::markdown, false};
        CHECK(render_report(run_suite(c), md) == render_report(run_suite(c), md));

        const RenderOptions on{ReportFormat::json, true};
        const std::string timed = render_report(run_suite(c), on);
        CHECK(timed.find("timestamp") != std::string::npos);
        CHECK(timed.find("duration_ms") != std::string::npos);
    }

    TEST_CASE("different seeds draw different samples") {
        SuiteConfig a = small({SuiteKind::maximal});
        SuiteConfig b = a;
        b.seed = a.seed + 1;
        const RenderOptions off{ReportFormat::json, false};
        CHECK(render_report(run_suite(a), off) != render_report(run_suite(b), off));
    }

    TEST_CASE("emit_report exit codes") {
        const auto dir = std::filesystem::temp_directory_path() / "c0mono_emit_test";
        std::filesystem::create_directories(dir);
        const RenderOptions off{ReportFormat::json, false};

        const SuiteReport good = run_suite(small({SuiteKind::skew}));
        CHECK(emit_report(good, off, (dir / "good.json").string()) == exit_code::pass);
        std::ifstream in(dir / "good.json");
        std::stringstream text;
        text << in.rdbuf();
        CHECK(json::parse(text.str())["overall"] == "pass");

        SuiteReport bad = good;
        bad.suites[0].passed = false;
        CHECK(emit_report(bad, off, (dir / "bad.json").string()) == exit_code::suite_failed);

        CHECK(emit_report(good, off, "/nonexistent/dir/report.json") == exit_code::io_error);
        std::filesystem::remove_all(dir);
    }
}
