#include "dlo/params.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlo {

ParamSet::ParamSet(std::vector<Rational> values) : values_(std::move(values)) {
    for (auto& v : values_) v.canonicalize();
    std::sort(values_.begin(), values_.end(), [](const Rational& a, const Rational& b) { return a > b; });
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

ParamSet ParamSet::from_descending(std::vector<Rational> values) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] > values[i]))
            throw std::invalid_argument("parameters must be strictly descending");
    ParamSet p;
    p.values_ = std::move(values);
    return p;
}

bool ParamSet::contains(const Rational& v) const {
    return std::binary_search(values_.begin(), values_.end(), v,
                              [](const Rational& a, const Rational& b) { return a > b; });
}

bool ParamSet::includes(const ParamSet& other) const {
    return std::all_of(other.values_.begin(), other.values_.end(),
                       [this](const Rational& v) { return contains(v); });
}

ParamSet ParamSet::unite(const ParamSet& other) const {
    std::vector<Rational> all = values_;
    all.insert(all.end(), other.values_.begin(), other.values_.end());
    return ParamSet(std::move(all));
}

ExtendedRational ParamSet::gap_floor(std::size_t gap) const {
    if (gap >= values_.size()) return ExtendedRational::minus_infinity();
    return values_[gap];
}

ParamSet::Position ParamSet::locate(const Rational& v) const {
    // First index whose value is <= v.
    const auto it = std::lower_bound(values_.begin(), values_.end(), v,
                                     [](const Rational& a, const Rational& b) { return a > b; });
    const auto i = static_cast<std::size_t>(it - values_.begin());
    if (it != values_.end() && *it == v) return {true, i};
    return {false, i};
}

bool operator==(const ParamSet& a, const ParamSet& b) { return a.values_ == b.values_; }

std::string to_string(const ParamSet& params) {
    std::string s = "{";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += to_string(params[i]);
    }
    return s + "}";
}

std::uint64_t GapVector::height() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

GapVector zero_gaps(std::size_t gap_count) { return GapVector{std::vector<std::uint32_t>(gap_count, 0)}; }

bool leads(const GapVector& a, const GapVector& b) {
    const auto ha = a.height(), hb = b.height();
    if (ha != hb) return ha > hb;
    return std::lexicographical_compare(b.counts.rbegin(), b.counts.rend(),
                                        a.counts.rbegin(), a.counts.rend());
}

std::string to_string(const GapVector& g) {
    std::string s = "(";
    for (std::size_t i = 0; i < g.counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.counts[i]);
    }
    return s + ")";
}

}  // namespace dlo
