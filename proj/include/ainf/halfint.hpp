#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ainf/errors.hpp"

namespace ainf {

/// Exact half-integer: the value is doubled/2. No floating point anywhere.
struct HalfInt {
    std::int64_t doubled = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t d) : doubled(d) {}

    static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
    static constexpr HalfInt half(std::int64_t d) { return HalfInt(d); }

    bool is_integer() const { return doubled % 2 == 0; }

    std::int64_t as_integer() const {
        if (!is_integer())
            throw NonIntegral("half-integer " + str() + " is not an integer");
        return doubled / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.doubled + b.doubled); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.doubled - b.doubled); }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt(-a.doubled); }
    friend constexpr HalfInt operator*(std::int64_t c, HalfInt a) { return HalfInt(c * a.doubled); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.doubled == b.doubled; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.doubled != b.doubled; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.doubled < b.doubled; }

    HalfInt& operator+=(HalfInt o) {
        doubled += o.doubled;
        return *this;
    }

    /// Renders exactly: integers as "n", halves as "d/2".
    std::string str() const {
        if (doubled % 2 == 0) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }
};

}  // namespace ainf
