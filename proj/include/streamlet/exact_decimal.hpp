#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace streamlet {

/// Lossless decimal number: sign * digits * 10^(-scale), where digits is a
/// base-10 magnitude with no leading zeros and scale counts fractional
/// digits. Addition never rounds, so summing a file of decimals gives the
/// mathematically exact result regardless of magnitude or precision.
///
/// Equality is defined on value: 0.3 and 0.30 compare equal even though
/// their representations differ (addition keeps the wider scale rather
/// than trimming trailing fractional zeros). Values are immutable and safe
/// to share across threads.
class ExactDecimal {
  public:
    /// Zero: sign +1, digits "0", scale 0.
    ExactDecimal() = default;

    /// Parses optional sign, digits, optionally '.' followed by more
    /// digits ("23.4", "-25.88", "+7"). Throws DecimalParseError on
    /// anything else, including "", ".", "23." and "1.2.3".
    static ExactDecimal parse(std::string_view text);

    /// Exact sum. The result carries max(scale(), other.scale()).
    ExactDecimal add(const ExactDecimal& other) const;

    /// Canonical text, round-trippable: parse(to_string(x)) == x.
    std::string to_string() const;

    int sign() const { return negative_ ? -1 : +1; }
    const std::string& digits() const { return digits_; }
    int scale() const { return scale_; }
    bool is_zero() const { return digits_ == "0"; }

    /// Value equality, scale-insensitive.
    friend bool operator==(const ExactDecimal& a, const ExactDecimal& b);
    friend bool operator!=(const ExactDecimal& a, const ExactDecimal& b) { return !(a == b); }

    friend ExactDecimal operator+(const ExactDecimal& a, const ExactDecimal& b) {
        return a.add(b);
    }

  private:
    ExactDecimal(bool negative, std::string digits, int scale);

    bool negative_ = false;
    std::string digits_ = "0";  // magnitude, most significant digit first
    int scale_ = 0;
};

std::ostream& operator<<(std::ostream& out, const ExactDecimal& value);

}  // namespace streamlet
