#include "mqttplus/util.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace mqttplus {

std::optional<double> parse_decimal(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) return std::nullopt;
    std::string_view t = text.substr(b, e - b);

    // Validate shape by hand; from_chars would accept "inf"/"nan" and hex.
    size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    size_t mantissa_digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
        ++mantissa_digits;
    }
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            ++i;
            ++mantissa_digits;
        }
    }
    if (mantissa_digits == 0) return std::nullopt;
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        size_t exp_digits = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            ++i;
            ++exp_digits;
        }
        if (exp_digits == 0) return std::nullopt;
    }
    if (i != t.size()) return std::nullopt;

    // from_chars has no leading '+' support.
    if (t[0] == '+') t.remove_prefix(1);
    double v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::string format_value(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s = buf;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        size_t last = s.find_last_not_of('0');
        if (last == dot) last = dot - 1;
        s.erase(last + 1);
    }
    return s;
}

std::vector<std::string> split_levels(std::string_view topic) {
    return split(topic, '/');
}

std::string join_levels(const std::vector<std::string>& levels) {
    std::string out;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) out += '/';
        out += levels[i];
    }
    return out;
}

std::vector<std::string> split(std::string_view text, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(text.substr(start));
            break;
        }
        out.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace mqttplus
