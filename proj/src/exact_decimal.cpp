#include "streamlet/exact_decimal.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "streamlet/errors.hpp"

namespace streamlet {
namespace {

// Magnitude helpers on digit strings, most significant digit first.

std::string strip_leading_zeros(std::string digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return "0";
    return digits.substr(first);
}

// -1, 0, +1 as a < b, a == b, a > b. Inputs must carry no leading zeros.
int compare_magnitude(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

std::string add_magnitude(const std::string& a, const std::string& b) {
    std::string out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    int carry = 0;
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    while (ia != a.rend() || ib != b.rend() || carry != 0) {
        int sum = carry;
        if (ia != a.rend()) sum += *ia++ - '0';
        if (ib != b.rend()) sum += *ib++ - '0';
        out.push_back(static_cast<char>('0' + sum % 10));
        carry = sum / 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Requires a >= b.
std::string sub_magnitude(const std::string& a, const std::string& b) {
    assert(compare_magnitude(a, b) >= 0);
    std::string out;
    out.reserve(a.size());
    int borrow = 0;
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    while (ia != a.rend()) {
        int diff = (*ia++ - '0') - borrow;
        if (ib != b.rend()) diff -= *ib++ - '0';
        if (diff < 0) {
            diff += 10;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<char>('0' + diff));
    }
    std::reverse(out.begin(), out.end());
    return strip_leading_zeros(std::move(out));
}

// Scales a magnitude up by appending zeros (multiply by 10^k).
std::string pad_scale(std::string digits, int k) {
    if (digits == "0" && k > 0) return digits;
    digits.append(static_cast<std::size_t>(k), '0');
    return digits;
}

}  // namespace

ExactDecimal::ExactDecimal(bool negative, std::string digits, int scale)
    : negative_(negative), digits_(std::move(digits)), scale_(scale) {
    if (digits_ == "0") negative_ = false;
}

ExactDecimal ExactDecimal::parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }

    std::string digits;
    int scale = 0;
    bool seen_dot = false;
    bool integer_digits = false;
    bool fraction_digits = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) {
                ++scale;
                fraction_digits = true;
            } else {
                integer_digits = true;
            }
        } else if (c == '.') {
            if (seen_dot) throw DecimalParseError("multiple '.' in decimal: " + std::string(text));
            seen_dot = true;
        } else {
            throw DecimalParseError("invalid character in decimal: " + std::string(text));
        }
    }
    if (!integer_digits || (seen_dot && !fraction_digits)) {
        throw DecimalParseError("malformed decimal: " + std::string(text));
    }
    return ExactDecimal(negative, strip_leading_zeros(std::move(digits)), scale);
}

ExactDecimal ExactDecimal::add(const ExactDecimal& other) const {
    // Align to the wider scale by zero-padding the narrower operand.
    int scale = std::max(scale_, other.scale_);
    std::string a = pad_scale(digits_, scale - scale_);
    std::string b = pad_scale(other.digits_, scale - other.scale_);

    if (negative_ == other.negative_) {
        return ExactDecimal(negative_, add_magnitude(a, b), scale);
    }
    int cmp = compare_magnitude(a, b);
    if (cmp == 0) return ExactDecimal(false, "0", scale);
    if (cmp > 0) return ExactDecimal(negative_, sub_magnitude(a, b), scale);
    return ExactDecimal(other.negative_, sub_magnitude(b, a), scale);
}

std::string ExactDecimal::to_string() const {
    std::string out;
    if (negative_) out.push_back('-');
    if (scale_ == 0) {
        out += digits_;
        return out;
    }
    std::string mag = digits_;
    std::size_t width = static_cast<std::size_t>(scale_) + 1;
    if (mag.size() < width) mag.insert(0, width - mag.size(), '0');
    out += mag.substr(0, mag.size() - static_cast<std::size_t>(scale_));
    out.push_back('.');
    out += mag.substr(mag.size() - static_cast<std::size_t>(scale_));
    return out;
}

bool operator==(const ExactDecimal& a, const ExactDecimal& b) {
    if (a.negative_ != b.negative_) return false;
    int scale = std::max(a.scale_, b.scale_);
    return pad_scale(a.digits_, scale - a.scale_) == pad_scale(b.digits_, scale - b.scale_);
}

std::ostream& operator<<(std::ostream& out, const ExactDecimal& value) {
    return out << value.to_string();
}

}  // namespace streamlet
