#ifndef PATCHANT_UNITS_HPP
#define PATCHANT_UNITS_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

#include "patchant/error.hpp"

namespace patchant {

enum class Unit { millimetre, metre, gigahertz, hertz, ohm };

inline Unit parse_unit(std::string_view name) {
    if (name == "mm") return Unit::millimetre;
    if (name == "m") return Unit::metre;
    if (name == "GHz") return Unit::gigahertz;
    if (name == "Hz") return Unit::hertz;
    if (name == "ohm") return Unit::ohm;
    throw ValidationError("unit", "unknown unit '" + std::string(name) + "'");
}

/// Multiplies `value` by 10^exponent in decimal: the shortest decimal
/// representation of `value` has its exponent shifted, then is rounded once.
/// So 24.8 mm becomes exactly the double nearest 0.0248, which a binary
/// multiply by 1e-3 does not guarantee.
inline double scale_decimal(double value, int exponent) {
    if (exponent == 0 || value == 0.0 || !std::isfinite(value)) return value;
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::scientific);
    if (ec != std::errc{}) return value * std::pow(10.0, exponent);
    std::string text(buf.data(), end);
    const auto e = text.find('e');
    const int shifted = std::stoi(text.substr(e + 1)) + exponent;
    text = text.substr(0, e + 1) + std::to_string(shifted);
    double out = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec == std::errc::result_out_of_range) return value * std::pow(10.0, exponent);
    return out;
}

inline int si_exponent(Unit unit) {
    switch (unit) {
    case Unit::millimetre: return -3;
    case Unit::gigahertz: return 9;
    case Unit::metre:
    case Unit::hertz:
    case Unit::ohm: return 0;
    }
    return 0;
}

/// Converts a value expressed in `unit` to SI.
inline double normalize_quantity(double value, Unit unit) {
    if (!std::isfinite(value)) throw ValidationError("value", "not finite");
    return scale_decimal(value, si_exponent(unit));
}

inline double normalize_quantity(double value, std::string_view unit) {
    return normalize_quantity(value, parse_unit(unit));
}

/// Parses a decimal literal and scales it by 10^shift with a single
/// rounding step, e.g. ("24.8", -3) yields the double nearest 0.0248.
inline double parse_decimal_shifted(std::string_view literal, int shift) {
    std::string text(literal);
    int exponent = shift;
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
        exponent += std::stoi(text.substr(e + 1));
        text.erase(e);
    }
    text += 'e' + std::to_string(exponent);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec == std::errc::invalid_argument || ptr != text.data() + text.size())
        throw ValidationError("value", "'" + std::string(literal) + "' is not a decimal number");
    if (ec == std::errc::result_out_of_range)
        throw ValidationError("value", "'" + std::string(literal) + "' is out of range");
    return out;
}

/// Shortest round-trip decimal text of `value`, scaled by 10^shift without
/// any binary arithmetic. parse_decimal_shifted(format_decimal_shifted(v, s), -s)
/// reproduces v exactly for every finite v.
inline std::string format_decimal_shifted(double value, int shift) {
    if (!std::isfinite(value)) throw ValidationError("value", "not finite");
    if (value == 0.0) return std::signbit(value) ? "-0" : "0";
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::scientific);
    (void)ec;
    const std::string sci(buf.data(), end);
    const auto e = sci.find('e');
    const int exponent = std::stoi(sci.substr(e + 1)) + shift;
    std::string mantissa = sci.substr(0, e);
    const bool negative = mantissa.front() == '-';
    if (negative) mantissa.erase(0, 1);
    std::string digits;
    for (char ch : mantissa)
        if (ch != '.') digits += ch;

    std::string out;
    if (exponent < -6 || exponent > 15) {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += '.' + digits.substr(1);
        out += 'e' + std::to_string(exponent);
    } else if (exponent < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
        const auto int_len = static_cast<std::size_t>(exponent) + 1;
        if (digits.size() <= int_len) {
            out = digits + std::string(int_len - digits.size(), '0');
        } else {
            out = digits.substr(0, int_len) + '.' + digits.substr(int_len);
        }
    }
    return negative ? '-' + out : out;
}

} // namespace patchant

#endif
