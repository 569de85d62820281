#pragma once

// The polynomial presentation of K0: generators X(a;n) for a rational or
// -inf, reduction modulo the same-base product relations, the isomorphism
// zeta into characteristics and its triangular inverse.

#include "dlo/grothendieck.hpp"

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace dlo {

/// X(a;n): the class of an n-chain lying above a.
struct Generator {
    ExtendedRational base;
    std::uint32_t index = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);
};

/// Generator -> exponent (>= 1).
using Monomial = std::map<Generator, std::uint32_t>;

class GenPoly {
public:
    GenPoly() = default;
    GenPoly(const Integer& c);  // constant
    GenPoly(const Generator& g);
    static GenPoly monomial(const Monomial& m, const Integer& c = 1);

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Integer& c);
    bool is_zero() const { return terms_.empty(); }
    /// Every monomial uses each base at most once, with exponent 1.
    bool is_normal_form() const;
    /// Rational bases occurring in the polynomial.
    ParamSet params() const;

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly& operator*=(const GenPoly& o);
    friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
    friend GenPoly operator*(GenPoly a, const GenPoly& b) { return a *= b; }
    friend GenPoly operator-(const GenPoly& a) { return GenPoly() - a; }
    friend bool operator==(const GenPoly&, const GenPoly&) = default;

private:
    std::map<Monomial, Integer> terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);
/// Sum of index * exponent.
std::uint64_t degree(const Monomial& m);

/// Text form, e.g. `3*X(0;2)*X(-inf;1) - X(1/2;1)`. Terms are printed by
/// decreasing height, then by per-base degree read from the lowest base up
/// (larger first); generators within a term by decreasing base.
std::string to_string(const GenPoly& p);
std::string to_string(const Generator& g);
/// Integers, X(a;n), `+ - * ^` and parentheses.
GenPoly parse_genpoly(std::string_view text);

/// Normal form modulo the relations
/// X(a;k) X(a;l) = sum_{i=0..l} C(k+i,i) C(k,l-i) X(a;k+i), l <= k.
/// With `rng`, same-base factors are combined in a random order.
GenPoly reduce_mod_I(const GenPoly& p, std::mt19937_64* rng = nullptr);

/// X(a;k) X(a;l) minus its rewrite (k, l may come in either order).
GenPoly ideal_generator(const ExtendedRational& a, std::uint32_t k, std::uint32_t l);
/// k! X(a;k) - prod_{i<k} (X(a;1) - i).
GenPoly iprime_generator(const ExtendedRational& a, std::uint32_t k);

/// The class of the polynomial over `params`, which must contain every
/// rational base. X(a;n) maps to an n-chain above a.
K0Element zeta(const GenPoly& p, const ParamSet& params);
/// The normal-form polynomial of monomial(T) for a color T: one generator
/// per occupied gap, based at the gap's lower endpoint.
Monomial monomial_of(const ParamSet& params, const GapVector& gaps);
/// The unique normal form p with zeta(p, e.params()) == e. Throws
/// std::logic_error if a leading color fails to cancel.
GenPoly zeta_inv(const K0Element& e);

/// Replaces every generator based at `from` by the same generator at `to`.
GenPoly substitute_base(const GenPoly& p, const ExtendedRational& from, const ExtendedRational& to);

/// Polynomial in one variable with rational coefficients, lowest degree
/// first, no trailing zeros.
struct RationalPoly {
    std::vector<Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
};
RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
/// x(x-1)...(x-j+1)/j!.
RationalPoly falling_binomial(std::uint32_t j);
std::string to_string(const RationalPoly& p);

/// X(a;j) -> falling_binomial(j) in the variable X(a;1). All generators must
/// share one base.
RationalPoly substitute_falling(const GenPoly& p);

/// The class of an n-chain strictly between a and b (a < b), over {b, a}.
K0Element chain_between(const Rational& b, const Rational& a, std::uint32_t n);

struct IdentityCheck {
    bool holds;
    std::string lhs;
    std::string rhs;
};

/// nf(b,a) = sum_{i<=n} if(b,c) (n-i)f(c,a) + sum_{i<n} if(b,c) (n-1-i)f(c,a),
/// with nf(b,a) the n-chain class between a and b and 0f = 1. Requires
/// a < c < b.
IdentityCheck verify_convolution(std::uint32_t n, const Rational& a, const Rational& c, const Rational& b);
/// n! nf(b,a) = prod_{i<n} (1f(b,a) - i). Requires a < b and n >= 1.
IdentityCheck verify_factorial(std::uint32_t n, const Rational& a, const Rational& b);

/// X_k prod_{i<l} (X_1 - i) - l! sum_i C(k+i,i) C(k,l-i) X_{k+i} at base a.
GenPoly iprime_congruence(std::uint32_t k, std::uint32_t l, const ExtendedRational& a);
/// The congruence vanishes under the falling-factorial substitution, and it
/// differs from l! * ideal_generator(a,k,l) by an explicit multiple of
/// iprime_generator(a,l). Requires 1 <= l <= k.
bool verify_iprime_congruence(std::uint32_t k, std::uint32_t l, const ExtendedRational& a);
/// l!, after checking that l! * ideal_generator(k,l) is congruent to
/// iprime_congruence(k,l) modulo the factorial relations and vanishes under
/// the substitution. Throws std::logic_error if a check fails.
Integer corollary_multiple(std::uint32_t k, std::uint32_t l);

}  // namespace dlo
