#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed textual input (formulas, rationals, polynomials).
/// `position()` is a byte offset into the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses `[-]digits[/digits]`. The result is canonical (lowest terms,
/// positive denominator).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational midpoint(const Rational& lo, const Rational& hi);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// An exact rational or the formal minimum element -inf.
class ExtendedRational {
public:
    ExtendedRational() = default;  // -inf
    ExtendedRational(Rational value) : value_(std::move(value)) {}

    static ExtendedRational minus_infinity() { return {}; }

    bool is_minus_infinity() const { return !value_.has_value(); }
    const Rational& value() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
    friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                            const ExtendedRational& b);

private:
    std::optional<Rational> value_;
};

/// Accepts a rational literal or "-inf".
ExtendedRational parse_extended_rational(std::string_view text);
std::string to_string(const ExtendedRational& a);

}  // namespace dlo
