#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ladder/classgroup.hpp"
#include "ladder/decompose.hpp"
#include "ladder/ladder.hpp"
#include "ladder/rewriter.hpp"
#include "ladder/sdm.hpp"

namespace ladder {

// Text formats. Parsers throw FormatError for unreadable input and
// DomainError for a cell set that is not a ladder. Non-fatal diagnostics
// (duplicate cells) are appended to `warnings` when given.

/// {"cells": [[row, col], ...]}, 1-based.
Ladder parse_json(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// '#' present, '.' absent, one row per line.
Ladder parse_ascii(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// JSON if the first non-space byte is '{', ASCII otherwise.
Ladder parse_ladder(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// One line per row, no trailing newline. With annotate, inside corners are
/// marked L (lower), U (upper) or C (coincidental).
std::string render_ascii(const Ladder& y, bool annotate = false);

/// {"exps": [[row, col, e], ...]}
Monomial parse_monomial(std::string_view text);

nlohmann::json to_json(Cell c);
nlohmann::json to_json(const std::vector<Cell>& cells);
nlohmann::json to_json(const Ladder& y);
nlohmann::json to_json(const CornerProfile& p);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const Factorization& f);
/// {"P": {"1": c}, "Q": {"1": c}} with zero coefficients omitted.
nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const SdmReport& r);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const WitnessReport& r);

}  // namespace ladder
