#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spinunitary {

using Rational = boost::rational<std::int64_t>;
using RationalVec = std::vector<Rational>;

// A half-integer kept as twice its value, so every operation stays in the integers.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t integer) : doubled_(2 * integer) {}

    static constexpr HalfInt from_doubled(std::int64_t doubled) {
        HalfInt h;
        h.doubled_ = doubled;
        return h;
    }
    // Throws std::invalid_argument unless the denominator divides 2.
    static HalfInt from_rational(const Rational& r);

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integral() const { return doubled_ % 2 == 0; }
    constexpr bool is_strict_half() const { return doubled_ % 2 != 0; }
    Rational to_rational() const { return Rational(doubled_, 2); }

    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    std::int64_t doubled_ = 0;
};

using HalfIntVec = std::vector<HalfInt>;

constexpr HalfInt half(std::int64_t numerator_over_two) { return HalfInt::from_doubled(numerator_over_two); }

bool is_integer(const Rational& r);
std::int64_t floor_of(const Rational& r);
Rational abs_of(const Rational& r);

// "p" for integers, "p/q" otherwise.
std::string format(const Rational& r);
std::string format(HalfInt h);
std::string format(const RationalVec& v);
std::string format(const HalfIntVec& v);

// Accepts "p", "-p", "p/q"; whitespace around the value is ignored. Throws ParseError.
Rational parse_rational(std::string_view text);

RationalVec to_rational(const HalfIntVec& v);
HalfIntVec to_half_ints(const RationalVec& v);

}  // namespace spinunitary
