#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "unidist/common.hpp"

namespace unidist {

// Exact element of (1/2)Z, stored as twice its value.
struct HalfInt {
    int64_t twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int64_t doubled) : twice(doubled) {}

    static constexpr HalfInt whole(int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(int64_t numerator) { return HalfInt(numerator); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr bool is_strict_half() const { return twice % 2 != 0; }

    // Only valid when is_integer().
    constexpr int64_t as_integer() const { return twice / 2; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

    // Midpoint of two grid-compatible values; requires the sum to be even.
    static HalfInt midpoint(HalfInt a, HalfInt b) {
        int64_t s = a.twice + b.twice;
        if (s % 2 != 0) throw InternalError("HalfInt::midpoint: sum not in (1/2)Z");
        return HalfInt(s / 2);
    }

    std::string str() const {
        if (is_integer()) return std::to_string(as_integer());
        return std::to_string(twice) + "/2";
    }
};

constexpr HalfInt operator""_hi(unsigned long long n) { return HalfInt::whole(static_cast<int64_t>(n)); }

} // namespace unidist
