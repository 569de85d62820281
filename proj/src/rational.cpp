#include "dlo/rational.hpp"

#include <cctype>

namespace dlo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (!all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'",
                         slash == std::string_view::npos ? 0 : slash + 1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational midpoint(const Rational& lo, const Rational& hi) {
    Rational m = (lo + hi) / 2;
    m.canonicalize();
    return m;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

const Rational& ExtendedRational::value() const {
    if (!value_) throw std::logic_error("-inf has no rational value");
    return *value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
        return !a.is_minus_infinity() <=> !b.is_minus_infinity();
    return compare(*a.value_, *b.value_);
}

ExtendedRational parse_extended_rational(std::string_view text) {
    if (text == "-inf") return ExtendedRational::minus_infinity();
    return parse_rational(text);
}

std::string to_string(const ExtendedRational& a) {
    return a.is_minus_infinity() ? std::string("-inf") : to_string(a.value());
}

}  // namespace dlo
