#include "dlo/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dlo {

namespace {

std::pair<Characteristic, Characteristic> common(const K0Element& a, const K0Element& b) {
    if (a.params() == b.params()) return {a, b};
    const ParamSet u = a.params().unite(b.params());
    return {refine(a, u), refine(b, u)};
}

}  // namespace

K0Element add(const K0Element& a, const K0Element& b) {
    auto [x, y] = common(a, b);
    for (const auto& [g, c] : y.coeffs()) x.add_term(g, c);
    return x;
}

K0Element neg(const K0Element& a) { return scale(a, -1); }

K0Element sub(const K0Element& a, const K0Element& b) { return add(a, neg(b)); }

K0Element scale(const K0Element& a, const Integer& c) {
    K0Element out(a.params());
    for (const auto& [g, coeff] : a.coeffs()) out.add_term(g, coeff * c);
    return out;
}

std::vector<std::pair<std::uint32_t, Integer>> chain_product(std::uint32_t g, std::uint32_t h) {
    if (g > h) std::swap(g, h);
    std::vector<std::pair<std::uint32_t, Integer>> out;
    for (std::uint32_t i = 0; i <= g; ++i) out.emplace_back(h + i, binomial(h + i, i) * binomial(h, g - i));
    return out;
}

K0Element mul(const K0Element& a, const K0Element& b) {
    auto [x, y] = common(a, b);
    const std::size_t gaps = x.params().gap_count();
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::pair<std::uint32_t, Integer>>> cache;
    auto merged = [&](std::uint32_t g, std::uint32_t h) -> const std::vector<std::pair<std::uint32_t, Integer>>& {
        auto key = std::minmax(g, h);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, chain_product(g, h)).first;
        return it->second;
    };

    K0Element out(x.params());
    GapVector result{std::vector<std::uint32_t>(gaps, 0)};
    for (const auto& [g1, c1] : x.coeffs()) {
        for (const auto& [g2, c2] : y.coeffs()) {
            const Integer base = c1 * c2;
            auto rec = [&](auto&& self, std::size_t gap, const Integer& coeff) -> void {
                if (gap == gaps) {
                    out.add_term(result, coeff);
                    return;
                }
                for (const auto& [len, ways] : merged(g1.counts[gap], g2.counts[gap])) {
                    result.counts[gap] = len;
                    self(self, gap + 1, coeff * ways);
                }
            };
            rec(rec, 0, base);
        }
    }
    return out;
}

bool php_check(const PositiveDNF& d1, const PositiveDNF& d2, std::size_t n) {
    const ParamSet u = d1.params().unite(d2.params());
    const auto a1 = split(d1, n, u);
    const auto a2 = split(d2, n, u);
    const bool subset = std::all_of(a1.begin(), a1.end(), [&](const Atom& a) {
        return std::find(a2.begin(), a2.end(), a) != a2.end();
    });
    if (!subset || a1.size() >= a2.size()) throw std::invalid_argument("php_check: first set is not a proper subset");
    return !(chi_of_atoms(a1, u) == chi_of_atoms(a2, u));
}

namespace {

// Fresh points for `count` new parameters inside gap `gap` of `ps`.
std::vector<Rational> fresh_points(const ParamSet& ps, std::size_t gap, std::size_t count) {
    std::vector<Rational> out;
    const bool has_upper = gap > 0, has_lower = gap < ps.size();
    for (std::size_t j = 1; j <= count; ++j) {
        Rational v;
        if (has_upper && has_lower)
            v = ps[gap] + (ps[gap - 1] - ps[gap]) * Rational(static_cast<long>(j), static_cast<long>(count + 1));
        else if (has_lower)
            v = ps[gap] + static_cast<long>(j);
        else if (has_upper)
            v = ps[gap - 1] - static_cast<long>(j);
        else
            v = static_cast<long>(j);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

}  // namespace

Effectivity is_effective(const K0Element& e, std::size_t budget) {
    const ParamSet& ps = e.params();
    const std::size_t gaps = ps.gap_count();
    std::vector<std::size_t> per_gap(gaps, 0);
    for (std::size_t total = 0; total <= budget; ++total) {
        std::optional<Effectivity> found;
        auto rec = [&](auto&& self, std::size_t gap, std::size_t left) -> void {
            if (found) return;
            if (gap + 1 == gaps) {
                per_gap[gap] = left;
                std::vector<Rational> values = ps.values();
                for (std::size_t i = 0; i < gaps; ++i) {
                    auto pts = fresh_points(ps, i, per_gap[i]);
                    values.insert(values.end(), pts.begin(), pts.end());
                }
                ParamSet target(std::move(values));
                if (refine(e, target).nonnegative()) found = Effectivity{true, target};
                return;
            }
            for (std::size_t c = 0; c <= left; ++c) {
                per_gap[gap] = c;
                self(self, gap + 1, left - c);
            }
        };
        rec(rec, 0, total);
        if (found) return *found;
    }
    return {false, ps};
}

std::string NoInjectionCertificate::describe() const {
    const std::string lo = gap < params.size() ? to_string(params[gap]) : "-inf";
    const std::string hi = gap > 0 ? to_string(params[gap - 1]) : "inf";
    return "(" + lo + "," + hi + ")";
}

std::optional<NoInjectionCertificate> no_injection_certificate(const PositiveDNF& d1, std::size_t n1,
                                                               const PositiveDNF& d2, std::size_t n2) {
    const ParamSet u = d1.params().unite(d2.params());
    const auto c1 = chi(d1, n1, u);
    const auto c2 = chi(d2, n2, u);
    for (std::size_t gap = 0; gap < u.gap_count(); ++gap) {
        const bool first_occupies = std::any_of(c1.coeffs().begin(), c1.coeffs().end(),
                                                [&](const auto& kv) { return kv.first.counts[gap] > 0; });
        const bool second_avoids = std::none_of(c2.coeffs().begin(), c2.coeffs().end(),
                                                [&](const auto& kv) { return kv.first.counts[gap] > 0; });
        if (first_occupies && second_avoids) return NoInjectionCertificate{u, gap};
    }
    return std::nullopt;
}

}  // namespace dlo
