#include "spinunitary/numbers.hpp"

#include "spinunitary/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace spinunitary {

HalfInt HalfInt::from_rational(const Rational& r) {
    if (r.denominator() == 1) return HalfInt(r.numerator());
    if (r.denominator() == 2) return from_doubled(r.numerator());
    throw std::invalid_argument("not a half-integer: " + format(r));
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

Rational abs_of(const Rational& r) { return r < 0 ? -r : r; }

std::string format(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format(HalfInt h) { return format(h.to_rational()); }

namespace {
template <class Vec>
std::string format_vec(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format(v[i]);
    }
    return out + ")";
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
    return value;
}
}  // namespace

std::string format(const RationalVec& v) { return format_vec(v); }
std::string format(const HalfIntVec& v) { return format_vec(v); }

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s, text));
    std::int64_t num = parse_int(s.substr(0, slash), text);
    std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

RationalVec to_rational(const HalfIntVec& v) {
    RationalVec out;
    out.reserve(v.size());
    for (HalfInt h : v) out.push_back(h.to_rational());
    return out;
}

HalfIntVec to_half_ints(const RationalVec& v) {
    HalfIntVec out;
    out.reserve(v.size());
    for (const Rational& r : v) out.push_back(HalfInt::from_rational(r));
    return out;
}

}  // namespace spinunitary
