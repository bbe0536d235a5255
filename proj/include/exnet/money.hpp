#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace exnet {

/// Fixed-point currency, stored as integer hundredths. All account and
/// ledger arithmetic is exact; there is no floating point on the money path.
class Money {
public:
    constexpr Money() = default;
    static constexpr Money from_cents(int64_t cents) { return Money(cents); }

    /// Parses "48.00", "0.5", "-17", "30000". More than two decimals is an
    /// error (tick size is 0.01).
    static Money parse(const std::string& text);

    constexpr int64_t cents() const { return cents_; }
    double to_double() const { return static_cast<double>(cents_) / 100.0; }

    /// Serializes with exactly two decimals, e.g. "480.00".
    std::string str() const;

    constexpr Money operator+(Money o) const { return Money(cents_ + o.cents_); }
    constexpr Money operator-(Money o) const { return Money(cents_ - o.cents_); }
    constexpr Money operator-() const { return Money(-cents_); }
    constexpr Money operator*(int64_t n) const { return Money(cents_ * n); }
    Money& operator+=(Money o) { cents_ += o.cents_; return *this; }
    Money& operator-=(Money o) { cents_ -= o.cents_; return *this; }
    auto operator<=>(const Money&) const = default;

private:
    explicit constexpr Money(int64_t cents) : cents_(cents) {}
    int64_t cents_ = 0;
};

constexpr Money operator*(int64_t n, Money m) { return m * n; }

} // namespace exnet
