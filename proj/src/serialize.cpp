#include "c0mono/serialize.hpp"

#include <vector>

namespace c0mono {

nlohmann::ordered_json to_json(const Rational& value) { return value.str(); }

nlohmann::ordered_json to_json(const EvConstSeq& seq) {
    nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
    for (const auto& v : seq.prefix()) {
        prefix.push_back(v.str());
    }
    return {{"prefix", std::move(prefix)}, {"tail", seq.tail().str()}};
}

Rational rational_from_json(const nlohmann::ordered_json& node) {
    if (node.is_string()) {
        return Rational::parse(node.get<std::string>());
    }
    if (node.is_number_integer()) {
        return Rational(node.get<long>());
    }
    throw ParseError("expected a rational string \"p/q\", got " + node.dump());
}

EvConstSeq sequence_from_json(const nlohmann::ordered_json& node) {
    if (!node.is_object() || !node.contains("prefix") || !node.contains("tail")) {
        throw ParseError("sequence must be an object with \"prefix\" and \"tail\"");
    }
    const auto& prefix = node.at("prefix");
    if (!prefix.is_array()) {
        throw ParseError("sequence \"prefix\" must be an array");
    }
    for (const auto& [key, _] : node.items()) {
        if (key != "prefix" && key != "tail") {
            throw ParseError("unknown sequence field \"" + key + "\"");
        }
    }
    std::vector<Rational> entries;
    entries.reserve(prefix.size());
    for (const auto& v : prefix) {
        entries.push_back(rational_from_json(v));
    }
    return {std::move(entries), rational_from_json(node.at("tail"))};
}

}  // namespace c0mono
