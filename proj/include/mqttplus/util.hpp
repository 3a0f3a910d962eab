#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mqttplus {

/// Strict decimal parse: optional sign, fraction, exponent; surrounding
/// whitespace trimmed; the whole trimmed text must be consumed. Rejects
/// inf/nan spellings (sensor payloads are plain decimals).
std::optional<double> parse_decimal(std::string_view text);

/// Canonical payload formatting for broker-produced values: up to six
/// fractional digits, trailing zeros trimmed ("23" not "23.000000").
std::string format_value(double v);

std::vector<std::string> split_levels(std::string_view topic);
std::string join_levels(const std::vector<std::string>& levels);

/// Split on a delimiter without collapsing empty fields.
std::vector<std::string> split(std::string_view text, char delim);

}  // namespace mqttplus
