#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sslab {

using i128 = __int128;
using u128 = unsigned __int128;

// Decimal round-trip helpers. iostreams have no native __int128 support, and
// the instance file format plus the JSON reports both need full-width weights.
inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? u128(-(v + 1)) + 1 : u128(v);
    char buf[48];
    int pos = 48;
    while (x > 0) {
        buf[--pos] = char('0' + int(x % 10));
        x /= 10;
    }
    std::string out;
    if (neg) out.push_back('-');
    out.append(buf + pos, 48 - pos);
    return out;
}

inline i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("parse_i128: no digits");
    u128 acc = 0;
    const u128 limit = neg ? (u128(1) << 127) : (u128(1) << 127) - 1;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("parse_i128: bad digit in '" + s + "'");
        acc = acc * 10 + u128(c - '0');
        if (acc > limit) throw std::invalid_argument("parse_i128: overflow in '" + s + "'");
    }
    if (neg) return acc == (u128(1) << 127) ? i128(-(i128((u128(1) << 127) - 1)) - 1) : -i128(acc);
    return i128(acc);
}

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

}  // namespace sslab
