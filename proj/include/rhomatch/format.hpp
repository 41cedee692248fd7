#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhomatch {

// Shortest decimal string that round-trips the double, capped at 12
// significant digits so reports stay stable across platforms.
inline std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    std::string shortest(buf, end);
    int digits = 0;
    for (char c : shortest) {
        if (c >= '0' && c <= '9') ++digits;
        if (c == 'e' || c == 'E') break;
    }
    if (digits <= 12) return shortest;
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Accepts a plain decimal ("0.3") or a fraction ("11/16").
inline double parse_alpha(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("alpha: empty value");
    double value = 0.0;
    auto slash = text.find('/');
    std::size_t consumed = 0;
    try {
        if (slash == std::string::npos) {
            value = std::stod(text, &consumed);
            if (consumed != text.size()) throw std::invalid_argument("trailing characters");
        } else {
            std::size_t c1 = 0, c2 = 0;
            double num = std::stod(text.substr(0, slash), &c1);
            double den = std::stod(text.substr(slash + 1), &c2);
            if (c1 != slash || c2 != text.size() - slash - 1)
                throw std::invalid_argument("trailing characters");
            if (den == 0.0) throw std::invalid_argument("zero denominator");
            value = num / den;
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("alpha: cannot parse '" + text + "' (use a decimal or p/q)");
    }
    if (!(value >= 0.0) || !(value < 1.0))
        throw std::invalid_argument("alpha: value " + text + " outside [0,1)");
    return value;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace rhomatch
