#include "altpresence/format.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace altpresence {

namespace {

long long pow10_ll(int k) {
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace

std::string fixed(double value, int decimals) {
    const long long scale = pow10_ll(decimals);
    // Scale in extended precision so values sitting exactly on a half-ulp of
    // the display grid round by their decimal value, not by a binary artifact.
    const long long r = llroundl(static_cast<long double>(value) * scale);
    unsigned long long mag =
        r < 0 ? -static_cast<unsigned long long>(r) : static_cast<unsigned long long>(r);
    std::string digits = std::to_string(mag / scale);
    std::string out;
    if (r < 0) out.push_back('-');
    out += digits;
    if (decimals > 0) {
        std::string frac = std::to_string(mag % scale);
        out.push_back('.');
        out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
        out += frac;
    }
    return out;
}

double display_round(double value, int decimals) {
    const long long scale = pow10_ll(decimals);
    const long long r = llroundl(static_cast<long double>(value) * scale);
    return static_cast<double>(r) / static_cast<double>(scale);
}

}  // namespace altpresence
