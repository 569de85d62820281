#include "dlo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace dlo::oracle {

Integer weak_order_count(std::size_t n) {
    if (n > 8) throw std::invalid_argument("weak_order_count: n <= 8");
    std::vector<Integer> a(n + 1);
    a[0] = 1;
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
    return a[n];
}

namespace {

std::vector<Rational> grid_values(const ParamSet& params, std::size_t per_gap) {
    std::vector<Rational> out(params.values());
    const std::size_t k = params.size();
    for (std::size_t gap = 0; gap <= k; ++gap) {
        for (std::size_t j = 1; j <= per_gap; ++j) {
            const long jj = static_cast<long>(j);
            Rational v;
            if (k == 0)
                v = jj;
            else if (gap == 0)
                v = params[0] + jj;
            else if (gap == k)
                v = params[k - 1] - jj;
            else
                v = params[gap] + (params[gap - 1] - params[gap]) * Rational(jj, static_cast<long>(per_gap + 1));
            v.canonicalize();
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Order type of a point relative to the parameters: for every coordinate,
// the parameter it equals or the gap it lies in, and its rank among the
// coordinates.
struct OrderType {
    std::vector<std::pair<std::size_t, bool>> place;  // (index, pinned)
    std::vector<std::size_t> rank;
    auto operator<=>(const OrderType&) const = default;
};

}  // namespace

Characteristic chi_by_grid(const std::function<bool(std::span<const Rational>)>& member, std::size_t n,
                           const ParamSet& params) {
    const auto values = grid_values(params, std::max<std::size_t>(n, 1));
    std::map<OrderType, GapVector> seen;
    std::vector<std::size_t> idx(n, 0);
    std::vector<Rational> point(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) point[i] = values[idx[i]];
        if (member(point)) {
            OrderType t;
            std::vector<std::size_t> sorted_idx(idx);
            std::sort(sorted_idx.begin(), sorted_idx.end());
            sorted_idx.erase(std::unique(sorted_idx.begin(), sorted_idx.end()), sorted_idx.end());
            GapVector g = zero_gaps(params.gap_count());
            for (std::size_t v : sorted_idx) {
                const auto pos = params.locate(values[v]);
                if (!pos.pinned) ++g.counts[pos.index];
            }
            for (std::size_t i = 0; i < n; ++i) {
                const auto pos = params.locate(point[i]);
                t.place.emplace_back(pos.index, pos.pinned);
                t.rank.push_back(static_cast<std::size_t>(
                    std::lower_bound(sorted_idx.begin(), sorted_idx.end(), idx[i]) - sorted_idx.begin()));
            }
            seen.emplace(std::move(t), std::move(g));
        }
        std::size_t i = 0;
        while (i < n && ++idx[i] == values.size()) idx[i++] = 0;
        if (i == n) break;
    }
    Characteristic out(params);
    for (const auto& [t, g] : seen) out.add_term(g, 1);
    return out;
}

Characteristic chi_by_grid(const PositiveDNF& d, std::size_t n, const ParamSet& params) {
    return chi_by_grid([&](std::span<const Rational> p) { return d.holds(p); }, n, params);
}

std::size_t count_atoms_bruteforce(std::size_t n, std::size_t k) {
    std::vector<Rational> ps;
    for (std::size_t j = 0; j < k; ++j) ps.emplace_back(static_cast<long>(j));
    const auto c = chi_by_grid([](std::span<const Rational>) { return true; }, n, ParamSet(std::move(ps)));
    Integer total = 0;
    for (const auto& [g, coeff] : c.coeffs()) total += coeff;
    return total.get_ui();
}

std::map<std::uint32_t, Integer> interleavings(std::uint32_t g, std::uint32_t h) {
    const std::uint32_t width = g + h;
    if (width > 20) throw std::invalid_argument("interleavings: chains too long");
    std::set<std::pair<std::uint32_t, std::uint32_t>> patterns;
    for (std::uint32_t a = 0; a < (1u << width); ++a) {
        if (static_cast<std::uint32_t>(std::popcount(a)) != g) continue;
        for (std::uint32_t b = 0; b < (1u << width); ++b) {
            if (static_cast<std::uint32_t>(std::popcount(b)) != h) continue;
            const std::uint32_t u = a | b;
            std::uint32_t ca = 0, cb = 0, rank = 0;
            for (std::uint32_t bit = 0; bit < width; ++bit) {
                if (!(u >> bit & 1)) continue;
                if (a >> bit & 1) ca |= 1u << rank;
                if (b >> bit & 1) cb |= 1u << rank;
                ++rank;
            }
            patterns.emplace(ca, cb);
        }
    }
    std::map<std::uint32_t, Integer> out;
    for (const auto& [ca, cb] : patterns) out[static_cast<std::uint32_t>(std::popcount(ca | cb))] += 1;
    return out;
}

Characteristic atom_product_split(const Atom& a, const Atom& b) {
    if (!(a.params() == b.params())) throw std::invalid_argument("atom_product_split: parameter sets differ");
    const GapVector ga = a.gaps(), gb = b.gaps();
    Characteristic out(a.params());
    GapVector cur = zero_gaps(ga.size());
    auto rec = [&](auto&& self, std::size_t gap, const Integer& coeff) -> void {
        if (gap == ga.size()) {
            out.add_term(cur, coeff);
            return;
        }
        const std::uint32_t g = ga.counts[gap], h = gb.counts[gap];
        const auto options = (g == 0 || h == 0) ? std::map<std::uint32_t, Integer>{{g + h, 1}} : interleavings(g, h);
        for (const auto& [len, ways] : options) {
            cur.counts[gap] = len;
            self(self, gap + 1, coeff * ways);
        }
    };
    rec(rec, 0, Integer(1));
    return out;
}

Integer delannoy(std::size_t m, std::size_t n) {
    if (m > 12 || n > 12) throw std::invalid_argument("delannoy: arguments <= 12");
    std::vector<std::vector<Integer>> d(m + 1, std::vector<Integer>(n + 1, 1));
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
    return d[m][n];
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

PositiveDNF random_definable_set(std::uint64_t seed, std::size_t n, const ParamSet& params, double density) {
    std::mt19937_64 rng(seed);
    std::vector<Clause> clauses;
    for (const auto& atom : enumerate_atoms(n, params))
        if (unit(rng) < density) clauses.push_back(atom.to_dnf().clauses().front());
    return PositiveDNF(n, std::move(clauses));
}

ParsedFormula random_formula(std::mt19937_64& rng, std::size_t arity, const ParamSet& params, std::size_t max_depth) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i + 1));
    std::vector<std::size_t> scope;
    for (std::size_t i = 0; i < arity; ++i) scope.push_back(i);
    std::size_t next = arity;

    auto term = [&]() {
        if (!params.empty() && (scope.empty() || below(rng, 4) == 0))
            return Term::constant(params[below(rng, params.size())]);
        if (scope.empty()) return Term::constant(Rational(static_cast<long>(below(rng, 3))));
        return Term::var(scope[below(rng, scope.size())]);
    };
    auto gen = [&](auto&& self, std::size_t depth, std::size_t size) -> Formula {
        const auto roll = below(rng, 10);
        if (size <= 1 || roll < 3) {
            const Term l = term(), r = term();
            const auto kind = below(rng, 3);
            if (kind == 0) return Formula::atomic(l, Rel::Equal, r);
            return Formula::atomic(l, Rel::Less, r);
        }
        if (roll < 5 && depth < max_depth) {
            const std::size_t v = next++;
            names.push_back("y" + std::to_string(v - arity + 1));
            scope.push_back(v);
            Formula body = self(self, depth + 1, size - 1);
            scope.pop_back();
            return below(rng, 2) ? Formula::exists(v, body) : Formula::forall(v, body);
        }
        if (roll == 5) return Formula::negation(self(self, depth, size - 1));
        const std::size_t left = 1 + below(rng, size - 1);
        Formula a = self(self, depth, left);
        Formula b = self(self, depth, std::max<std::size_t>(size - left, 1));
        switch (below(rng, 3)) {
            case 0: return Formula::conjunction(a, b);
            case 1: return Formula::disjunction(a, b);
            default: return Formula::implication(a, b);
        }
    };
    Formula f = gen(gen, 0, 2 + below(rng, 6));
    return ParsedFormula{f, names, arity};
}

Characteristic random_characteristic(std::mt19937_64& rng, const ParamSet& params, std::uint32_t max_height,
                                     std::size_t terms, long lo, long hi) {
    Characteristic out(params);
    for (std::size_t t = 0; t < terms; ++t) {
        GapVector g = zero_gaps(params.gap_count());
        const auto h = below(rng, max_height + 1);
        for (std::uint64_t j = 0; j < h; ++j) ++g.counts[below(rng, g.size())];
        out.add_term(g, lo + static_cast<long>(below(rng, static_cast<std::uint64_t>(hi - lo + 1))));
    }
    return out;
}

Monomial random_monomial(std::mt19937_64& rng, const ParamSet& params, std::uint32_t max_height) {
    std::vector<std::uint32_t> counts(params.gap_count(), 0);
    const auto h = 1 + below(rng, max_height);
    for (std::uint64_t j = 0; j < h; ++j) ++counts[below(rng, counts.size())];
    return monomial_of(params, GapVector{counts});
}

ParamSet random_params(std::mt19937_64& rng, std::size_t count) {
    std::vector<Rational> values;
    while (values.size() < count) {
        Rational q(static_cast<long>(below(rng, 21)) - 10, static_cast<long>(1 + below(rng, 4)));
        q.canonicalize();
        if (std::find(values.begin(), values.end(), q) == values.end()) values.push_back(q);
    }
    return ParamSet(std::move(values));
}

}  // namespace dlo::oracle
