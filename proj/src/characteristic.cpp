#include "dlo/characteristic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlo {

Characteristic Characteristic::constant(const Integer& c, ParamSet params) {
    Characteristic out(std::move(params));
    out.add_term(zero_gaps(out.params_.gap_count()), c);
    return out;
}

Characteristic Characteristic::color(ParamSet params, GapVector gaps, const Integer& coeff) {
    Characteristic out(std::move(params));
    out.add_term(gaps, coeff);
    return out;
}

Integer Characteristic::coeff(const GapVector& g) const {
    const auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

void Characteristic::add_term(const GapVector& g, const Integer& c) {
    if (g.size() != params_.gap_count())
        throw std::invalid_argument("gap vector " + to_string(g) + " does not fit parameters " + to_string(params_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool Characteristic::nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::uint64_t Characteristic::height() const {
    std::uint64_t h = 0;
    for (const auto& [g, c] : coeffs_) h = std::max(h, g.height());
    return h;
}

Integer Characteristic::top_height_total() const {
    const auto h = height();
    Integer total = 0;
    for (const auto& [g, c] : coeffs_)
        if (g.height() == h) total += c;
    return total;
}

std::optional<std::pair<GapVector, Integer>> Characteristic::leading() const {
    if (coeffs_.empty()) return std::nullopt;
    auto best = coeffs_.begin();
    for (auto it = coeffs_.begin(); it != coeffs_.end(); ++it)
        if (leads(it->first, best->first)) best = it;
    return *best;
}

bool Characteristic::same_representation(const Characteristic& other) const {
    return params_ == other.params_ && coeffs_ == other.coeffs_;
}

bool operator==(const Characteristic& a, const Characteristic& b) {
    if (a.params() == b.params()) return a.same_representation(b);
    const ParamSet u = a.params().unite(b.params());
    return refine(a, u).same_representation(refine(b, u));
}

Characteristic chi_of_atoms(const std::vector<Atom>& atoms, const ParamSet& params) {
    Characteristic out(params);
    for (const auto& a : atoms) {
        if (!(a.params() == params)) throw std::invalid_argument("chi_of_atoms: atom over a different parameter set");
        out.add_term(a.gaps(), 1);
    }
    return out;
}

Characteristic chi(const PositiveDNF& d, std::size_t n, const ParamSet& params) {
    return chi_of_atoms(split(d, n, params), params);
}

Characteristic chi(const PositiveDNF& d, std::size_t n) { return chi(d, n, d.params()); }

namespace {

// Placements of a g-chain into r+1 sub-gaps separated by r pins:
// sub-gap counts and the number of ways to choose the occupied pins.
struct Placement {
    std::vector<std::uint32_t> counts;
    Integer ways;
};

std::vector<Placement> placements(std::uint32_t g, std::size_t r) {
    std::vector<Placement> out;
    std::vector<std::uint32_t> counts(r + 1, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::uint32_t left) -> void {
        if (slot == r + 1) {
            if (left <= r) out.push_back({counts, binomial(r, left)});
            return;
        }
        for (std::uint32_t c = 0; c <= left; ++c) {
            counts[slot] = c;
            self(self, slot + 1, left - c);
        }
        counts[slot] = 0;
    };
    rec(rec, 0, g);
    return out;
}

}  // namespace

Characteristic refine(const Characteristic& c, const ParamSet& target) {
    const ParamSet& from = c.params();
    if (!target.includes(from))
        throw std::invalid_argument("refine: " + to_string(target) + " is not a superset of " + to_string(from));
    if (target == from) return c;

    // Number of new parameters inside each old gap.
    const std::size_t k = from.size();
    std::vector<std::size_t> inside(k + 1);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t pos = target.locate(from[i]).index;
        inside[i] = pos - prev - (i ? 1 : 0);
        prev = pos;
    }
    inside[k] = target.size() - (k ? prev + 1 : 0);

    std::map<std::pair<std::uint32_t, std::size_t>, std::vector<Placement>> cache;
    auto cached = [&](std::uint32_t g, std::size_t r) -> const std::vector<Placement>& {
        auto key = std::make_pair(g, r);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, placements(g, r)).first;
        return it->second;
    };

    Characteristic out(target);
    for (const auto& [gaps, coeff] : c.coeffs()) {
        GapVector refined{std::vector<std::uint32_t>(target.gap_count(), 0)};
        auto rec = [&](auto&& self, std::size_t gap, std::size_t offset, const Integer& ways) -> void {
            if (gap == k + 1) {
                out.add_term(refined, coeff * ways);
                return;
            }
            for (const auto& p : cached(gaps.counts[gap], inside[gap])) {
                std::copy(p.counts.begin(), p.counts.end(), refined.counts.begin() + static_cast<std::ptrdiff_t>(offset));
                self(self, gap + 1, offset + inside[gap] + 1, ways * p.ways);
            }
        };
        rec(rec, 0, 0, Integer(1));
    }
    return out;
}

Equivalence equivalent(const PositiveDNF& d1, std::size_t n1, const PositiveDNF& d2, std::size_t n2) {
    const ParamSet u = d1.params().unite(d2.params());
    const auto c1 = chi(d1, n1, u);
    const auto c2 = chi(d2, n2, u);
    return {c1.same_representation(c2), u};
}

PositiveDNF delta_pad(const PositiveDNF& d, std::size_t n, std::size_t m) {
    if (n == 0) throw std::invalid_argument("delta_pad: dimension must be positive");
    if (m < n) throw std::invalid_argument("delta_pad: target dimension smaller than source");
    if (m == n) return d;
    Clause pad;
    for (std::size_t i = n; i < m; ++i) pad.push_back({Term::var(0), Rel::Equal, Term::var(i)});
    PositiveDNF padding(m, {*make_clause(pad)});
    return conjoin(d.with_arity(m), padding);
}

PositiveDNF restrict_to_nonnegative(const PositiveDNF& d, std::size_t n) {
    PositiveDNF out = d.with_arity(n);
    const Term zero = Term::constant(0);
    for (std::size_t i = 0; i < n; ++i) {
        PositiveDNF ge(n, {*make_clause({{zero, Rel::Less, Term::var(i)}}), *make_clause({{Term::var(i), Rel::Equal, zero}})});
        out = conjoin(out, ge);
    }
    return out;
}

Characteristic min_endpoint_chi(const PositiveDNF& d, std::size_t n) {
    const ParamSet ps = d.params();
    if (!ps.empty() && ps.values().back() < 0)
        throw std::invalid_argument("min_endpoint_chi: parameter " + to_string(ps.values().back()) +
                                    " lies below the endpoint 0");
    const ParamSet with_endpoint = ps.unite(ParamSet({Rational(0)}));
    return chi(restrict_to_nonnegative(d, n), n, with_endpoint);
}

bool min_endpoint_equivalent(const PositiveDNF& d1, std::size_t n1, const PositiveDNF& d2, std::size_t n2) {
    const auto c1 = min_endpoint_chi(d1, n1);
    const auto c2 = min_endpoint_chi(d2, n2);
    const ParamSet u = c1.params().unite(c2.params());
    // Both live over parameters >= 0 with the endpoint as the smallest; the
    // bottom gap is empty, so compare the remaining gaps only.
    auto truncate = [&](const Characteristic& c) {
        std::map<GapVector, Integer> out;
        const Characteristic r = refine(c, u);
        for (const auto& [g, coeff] : r.coeffs()) {
            if (g.counts.back() != 0) throw std::logic_error("endpoint set reaches below the endpoint");
            GapVector t{std::vector<std::uint32_t>(g.counts.begin(), g.counts.end() - 1)};
            out[t] += coeff;
        }
        return out;
    };
    return truncate(c1) == truncate(c2);
}

}  // namespace dlo
