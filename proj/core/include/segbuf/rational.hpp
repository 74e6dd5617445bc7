#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace segbuf {

namespace detail {
__extension__ typedef __int128 Int128;
}  // namespace detail

/// Reduced fraction over 64-bit integers with a positive denominator.
///
/// Comparisons cross-multiply in 128-bit arithmetic, so they are exact for
/// every representable value. Arithmetic reduces through 128-bit
/// intermediates and throws std::overflow_error if the reduced result does
/// not fit back into 64 bits.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const detail::Int128 lhs = static_cast<detail::Int128>(a.num_) * b.den_;
        const detail::Int128 rhs = static_cast<detail::Int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// Decimal rendering rounded half away from zero. Display only.
    std::string to_decimal(int places = 6) const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace segbuf
