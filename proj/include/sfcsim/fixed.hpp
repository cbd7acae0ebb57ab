#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace sfcsim {

// Exact decimal quantity with six fractional digits, stored as a scaled
// 64-bit integer. All resource accounting goes through this type so that
// allocate/release sequences never drift.
template <typename Tag>
class Fixed {
public:
    static constexpr std::int64_t kScale = 1'000'000;

    constexpr Fixed() = default;

    static constexpr Fixed from_raw(std::int64_t raw) {
        Fixed f;
        f.raw_ = raw;
        return f;
    }

    static Fixed from_double(double v) {
        return from_raw(static_cast<std::int64_t>(std::llround(v * static_cast<double>(kScale))));
    }

    constexpr std::int64_t raw() const { return raw_; }
    double to_double() const { return static_cast<double>(raw_) / static_cast<double>(kScale); }

    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool is_negative() const { return raw_ < 0; }

    constexpr Fixed& operator+=(Fixed o) { raw_ += o.raw_; return *this; }
    constexpr Fixed& operator-=(Fixed o) { raw_ -= o.raw_; return *this; }
    friend constexpr Fixed operator+(Fixed a, Fixed b) { return a += b; }
    friend constexpr Fixed operator-(Fixed a, Fixed b) { return a -= b; }
    friend constexpr Fixed operator-(Fixed a) { return from_raw(-a.raw_); }

    friend constexpr auto operator<=>(Fixed, Fixed) = default;
    friend constexpr bool operator==(Fixed, Fixed) = default;

    // Fixed-format decimal with exactly six fractional digits.
    std::string str() const {
        std::int64_t mag = raw_ < 0 ? -raw_ : raw_;
        std::string frac = std::to_string(mag % kScale);
        frac.insert(0, 6 - frac.size(), '0');
        return (raw_ < 0 ? "-" : "") + std::to_string(mag / kScale) + "." + frac;
    }

private:
    std::int64_t raw_ = 0;
};

struct AmountTag {};
struct MillisTag {};

/// Resource amount: compute units, MB, or Mbps depending on context.
using Amount = Fixed<AmountTag>;
/// Latency in milliseconds (resolution 1 ns).
using Millis = Fixed<MillisTag>;

inline Amount operator""_amt(long double v) { return Amount::from_double(static_cast<double>(v)); }
inline Amount operator""_amt(unsigned long long v) { return Amount::from_raw(static_cast<std::int64_t>(v) * Amount::kScale); }
inline Millis operator""_ms(long double v) { return Millis::from_double(static_cast<double>(v)); }
inline Millis operator""_ms(unsigned long long v) { return Millis::from_raw(static_cast<std::int64_t>(v) * Millis::kScale); }

}  // namespace sfcsim
