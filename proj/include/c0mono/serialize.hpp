#pragma once

#include <json.hpp>

#include "c0mono/rational.hpp"
#include "c0mono/seqspace.hpp"

namespace c0mono {

// Wire format shared by config and report documents:
//   rational -> "p/q" in lowest terms, or "p" when q == 1
//   sequence -> {"prefix": [rational...], "tail": rational}

nlohmann::ordered_json to_json(const Rational& value);
nlohmann::ordered_json to_json(const EvConstSeq& seq);

/// Accepts a rational string or a JSON integer. Throws ParseError otherwise.
Rational rational_from_json(const nlohmann::ordered_json& node);
/// Throws ParseError on a missing "prefix"/"tail" or malformed entries.
EvConstSeq sequence_from_json(const nlohmann::ordered_json& node);

}  // namespace c0mono
