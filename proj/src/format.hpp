#pragma once

#include <cstdint>
#include <string>

namespace rf {

// Renders num/den with exactly `decimals` fraction digits, rounding half up.
// Integer arithmetic throughout, so ties round predictably (1/16 at one
// decimal place of a percent is 6.25 -> "6.3"). den == 0 renders as zero.
inline std::string format_decimal_halfup(std::uint64_t num, std::uint64_t den,
                                         unsigned decimals) {
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < decimals; ++i) scale *= 10;
    const std::uint64_t scaled = den == 0 ? 0 : (2 * num * scale + den) / (2 * den);
    std::string out = std::to_string(scaled / scale);
    if (decimals > 0) {
        std::string frac = std::to_string(scaled % scale);
        out += "." + std::string(decimals - frac.size(), '0') + frac;
    }
    return out;
}

// Percent with one fraction digit: count/total * 100.
inline std::string format_percent(std::uint64_t count, std::uint64_t total) {
    return format_decimal_halfup(count * 100, total, 1);
}

} // namespace rf
