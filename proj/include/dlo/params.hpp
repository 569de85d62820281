#pragma once

#include "dlo/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dlo {

/// A finite parameter set, stored strictly descending.
///
/// With k parameters p_0 > ... > p_{k-1} there are k+1 open gaps:
/// gap 0 is (p_0, +inf), gap i is (p_i, p_{i-1}) and gap k is (-inf, p_{k-1}).
class ParamSet {
public:
    ParamSet() = default;

    /// Sorts descending and drops duplicates.
    explicit ParamSet(std::vector<Rational> values);

    /// Validates that `values` is already strictly descending.
    static ParamSet from_descending(std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    std::size_t gap_count() const { return values_.size() + 1; }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

    bool contains(const Rational& v) const;
    bool includes(const ParamSet& other) const;
    ParamSet unite(const ParamSet& other) const;

    /// Lower endpoint of a gap; -inf for the bottom gap.
    ExtendedRational gap_floor(std::size_t gap) const;

    struct Position {
        bool pinned;        // equals values()[index]
        std::size_t index;  // parameter index if pinned, else gap index
    };
    Position locate(const Rational& v) const;

    friend bool operator==(const ParamSet& a, const ParamSet& b);

private:
    std::vector<Rational> values_;
};

std::string to_string(const ParamSet& params);

/// Free-block counts per gap of a parameter set (the "color" of an atom).
struct GapVector {
    std::vector<std::uint32_t> counts;

    std::size_t size() const { return counts.size(); }
    std::uint64_t height() const;
    bool is_zero() const { return height() == 0; }

    friend auto operator<=>(const GapVector&, const GapVector&) = default;
    friend bool operator==(const GapVector&, const GapVector&) = default;
};

GapVector zero_gaps(std::size_t gap_count);

/// Order used to pick the leading color when inverting zeta: larger total
/// height first, then the gap vector read bottom gap first, larger first.
/// Returns true when `a` strictly leads `b`.
bool leads(const GapVector& a, const GapVector& b);

std::string to_string(const GapVector& g);

}  // namespace dlo
