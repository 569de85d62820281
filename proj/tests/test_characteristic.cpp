#include "doctest.h"
#include "support.hpp"

#include "dlo/characteristic.hpp"
#include "dlo/qe.hpp"

#include <algorithm>

using namespace dlo;

namespace {

ParamSet ps(std::vector<Rational> v) { return ParamSet(std::move(v)); }

PositiveDNF dnf(const char* text, std::size_t n) {
    std::vector<std::string> order;
    const char* names[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < n; ++i) order.push_back(names[i]);
    return qe::eliminate_quantifiers(parse_formula(text, order));
}

Characteristic make(const ParamSet& params, std::vector<std::pair<std::vector<std::uint32_t>, long>> terms) {
    Characteristic c(params);
    for (auto& [g, coeff] : terms) c.add_term(GapVector{g}, coeff);
    return c;
}

PositiveDNF atoms_union(std::size_t n, const std::vector<Atom>& atoms) {
    std::vector<Clause> clauses;
    for (const auto& a : atoms) clauses.push_back(a.to_dnf().clauses().front());
    return PositiveDNF(n, std::move(clauses));
}

}  // namespace

TEST_SUITE("characteristic") {

TEST_CASE("chi of half lines and the empty set") {
    CHECK(chi(dnf("x > 0", 1), 1, ps({0})).same_representation(make(ps({0}), {{{1, 0}, 1}})));
    CHECK(chi(dnf("x > 0", 1), 1, ps({1, 0}))
              .same_representation(make(ps({1, 0}), {{{1, 0, 0}, 1}, {{0, 0, 0}, 1}, {{0, 1, 0}, 1}})));
    CHECK(chi(PositiveDNF::falsity(1), 1, ps({0})).is_zero());
    CHECK(chi(dnf("x > 0", 1), 1).params() == ps({0}));
}

TEST_CASE("chi needs the constants of the set") {
    CHECK_THROWS_AS(chi(dnf("x > 1", 1), 1, ps({0})), std::invalid_argument);
}

TEST_CASE("refining a point keeps it a point") {
    const auto point = Characteristic::constant(1, ps({0}));
    CHECK(refine(point, ps({1, 0})).same_representation(Characteristic::constant(1, ps({1, 0}))));
}

TEST_CASE("refining one free block") {
    const auto c = refine(make(ps({0}), {{{1, 0}, 1}}), ps({1, 0}));
    CHECK(c.same_representation(make(ps({1, 0}), {{{1, 0, 0}, 1}, {{0, 0, 0}, 1}, {{0, 1, 0}, 1}})));
}

TEST_CASE("refining a two-chain") {
    // Above 0 the chain x > y either straddles 1 (with or without a point on
    // it) or sits on one side of it; the configuration with both points on 1
    // does not exist, so the zero color does not occur.
    const auto c = refine(make(ps({0}), {{{2, 0}, 1}}), ps({1, 0}));
    const auto expected =
        make(ps({1, 0}), {{{2, 0, 0}, 1}, {{1, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 1, 0}, 1}, {{0, 2, 0}, 1}});
    CHECK(c.same_representation(expected));
    CHECK(c.same_representation(oracle::refine_oracle(dnf("x > y & y > 0", 2), 2, ps({1, 0}))));
}

TEST_CASE("refinement rejects non-supersets") {
    CHECK_THROWS_AS(refine(make(ps({0}), {{{1, 0}, 1}}), ps({1})), std::invalid_argument);
}

TEST_CASE("equivalence verdicts") {
    const auto r = equivalent(dnf("x > 0", 1), 1, dnf("x > 1", 1), 1);
    CHECK_FALSE(r.equivalent);
    CHECK(r.witness == ps({1, 0}));
    CHECK_FALSE(equivalent(dnf("0 < x & x < 1", 1), 1, dnf("2 < x & x < 3", 1), 1).equivalent);
    CHECK(equivalent(dnf("0 < x & x < 1", 1), 1, dnf("0 < x & x < 1/2 | 1/2 < x & x < 1 | x = 1/2", 1), 1).equivalent);
    CHECK(equivalent(dnf("x > 0", 1), 1, dnf("x > y & y = 0", 2), 2).equivalent);
    CHECK(equivalent(dnf("x = 0 | x = 1", 1), 1, dnf("x = 5 | x = 7", 1), 1).equivalent);
}

TEST_CASE("padding") {
    const auto padded = delta_pad(dnf("x > 0", 1), 1, 2);
    CHECK(padded == dnf("x > 0 & y = x", 2));
    CHECK(delta_pad(dnf("x > 0", 1), 1, 1) == dnf("x > 0", 1));
    CHECK_THROWS_AS(delta_pad(dnf("x > 0", 1), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(delta_pad(dnf("x > 0", 1), 0, 1), std::invalid_argument);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        const auto params = oracle::random_params(rng, oracle::below(rng, 3));
        const std::size_t n = 1 + oracle::below(rng, 2);
        const auto d = oracle::random_definable_set(rng(), n, params, 0.4);
        const auto p = delta_pad(d, n, n + 2);
        CHECK(chi(p, n + 2, params) == chi(d, n, params));
        CHECK(equivalent(d, n, p, n + 2).equivalent);
    }
}

TEST_CASE("minimum endpoint") {
    CHECK(min_endpoint_chi(dnf("x > 0", 1), 1).same_representation(make(ps({0}), {{{1, 0}, 1}})));
    CHECK(min_endpoint_chi(dnf("x = 0", 1), 1).same_representation(Characteristic::constant(1, ps({0}))));
    CHECK(min_endpoint_chi(dnf("x < 1", 1), 1).coeff(GapVector{{0, 1, 0}}) == 1);
    CHECK(min_endpoint_chi(dnf("x < 1", 1), 1).coeff(GapVector{{0, 0, 1}}) == 0);
    CHECK_THROWS_AS(min_endpoint_chi(dnf("x > -1", 1), 1), std::invalid_argument);
    // [0,1) and (0,1] are in bijection in the endpoint order and in Q.
    CHECK(min_endpoint_equivalent(dnf("x < 1", 1), 1, dnf("0 < x & x <= 1", 1), 1));
    CHECK_FALSE(min_endpoint_equivalent(dnf("x < 1", 1), 1, dnf("x > 1", 1), 1));
}

TEST_CASE("endpoint verdicts do not depend on extra parameters") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const auto params = ps({Rational(static_cast<long>(1 + oracle::below(rng, 3))), 0});
        const auto d1 = restrict_to_nonnegative(oracle::random_definable_set(rng(), 1, params, 0.5), 1);
        const auto d2 = restrict_to_nonnegative(oracle::random_definable_set(rng(), 1, params, 0.5), 1);
        const bool base = min_endpoint_equivalent(d1, 1, d2, 1);
        CHECK(base == equivalent(d1, 1, d2, 1).equivalent);
        const auto u = params.unite(ps({Rational(7, 2), Rational(1, 3)}));
        CHECK(base == (refine(min_endpoint_chi(d1, 1), u) == refine(min_endpoint_chi(d2, 1), u)));
        const auto refined = refine(min_endpoint_chi(d1, 1), u);
        for (const auto& [g, c] : refined.coeffs()) CHECK(g.counts.back() == 0);
    }
}

TEST_CASE("additivity on disjoint sets") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
        const auto params = oracle::random_params(rng, oracle::below(rng, 3));
        const std::size_t n = 1 + oracle::below(rng, 2);
        const auto all = enumerate_atoms(n, params);
        std::vector<Atom> a, b;
        for (const auto& atom : all) {
            const auto r = oracle::below(rng, 3);
            if (r == 0) a.push_back(atom);
            if (r == 1) b.push_back(atom);
        }
        const auto da = atoms_union(n, a), db = atoms_union(n, b);
        CHECK(chi(disjoin(da, db), n, params) == chi(da, n, params) + chi(db, n, params));
    }
}

TEST_CASE("refinement agrees with re-splitting") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 100; ++t) {
        const auto small = oracle::random_params(rng, oracle::below(rng, 3));
        const auto big = small.unite(oracle::random_params(rng, 1 + oracle::below(rng, 2)));
        const std::size_t n = 1 + oracle::below(rng, 2);
        const auto d = oracle::random_definable_set(rng(), n, small, 0.5);
        const auto refined = refine(chi(d, n, small), big);
        CHECK(refined.same_representation(chi(d, n, big)));
        CHECK(refined.same_representation(oracle::refine_oracle(d, n, big)));
    }
}

TEST_CASE("refinement is injective") {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 100; ++t) {
        const auto small = oracle::random_params(rng, oracle::below(rng, 3));
        const auto big = small.unite(oracle::random_params(rng, 2));
        const auto c1 = oracle::random_characteristic(rng, small, 3, 3, -2, 2);
        const auto c2 = oracle::below(rng, 3) == 0 ? c1 : oracle::random_characteristic(rng, small, 3, 3, -2, 2);
        CHECK(refine(c1, big).same_representation(refine(c2, big)) == c1.same_representation(c2));
    }
}

TEST_CASE("different top-height totals rule out a bijection") {
    std::mt19937_64 rng(46);
    std::size_t checked = 0;
    for (int t = 0; t < 100; ++t) {
        const auto p1 = oracle::random_params(rng, oracle::below(rng, 3));
        const auto p2 = oracle::random_params(rng, oracle::below(rng, 3));
        const auto d1 = oracle::random_definable_set(rng(), 2, p1, 0.3);
        const auto d2 = oracle::random_definable_set(rng(), 2, p2, 0.3);
        const auto c1 = chi(d1, 2, p1), c2 = chi(d2, 2, p2);
        if (c1.height() != c2.height() || c1.top_height_total() != c2.top_height_total()) {
            ++checked;
            CHECK_FALSE(equivalent(d1, 2, d2, 2).equivalent);
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("equivalence is transitive") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 100; ++t) {
        // Sets built from a shared pool so that equivalent pairs are common.
        const auto params = ps({1, 0});
        std::vector<PositiveDNF> sets;
        for (const char* text : {"x > 0", "x > 1", "0 < x & x < 1", "x = 0 | x > 1", "x > 1 | x < 0",
                                 "x < 0", "x = 1 | x > 0 & x < 1", "x < 1"})
            sets.push_back(dnf(text, 1));
        const auto& a = sets[oracle::below(rng, sets.size())];
        const auto& b = sets[oracle::below(rng, sets.size())];
        const auto& c = sets[oracle::below(rng, sets.size())];
        if (equivalent(a, 1, b, 1).equivalent && equivalent(b, 1, c, 1).equivalent)
            CHECK(equivalent(a, 1, c, 1).equivalent);
        CHECK(equivalent(a, 1, a, 1).equivalent);
        CHECK(equivalent(a, 1, b, 1).equivalent == equivalent(b, 1, a, 1).equivalent);
    }
}

TEST_CASE("leading color") {
    const auto c = make(ps({1, 0}), {{{1, 0, 0}, 4}, {{0, 1, 0}, -1}, {{0, 0, 0}, 2}});
    REQUIRE(c.leading());
    CHECK(c.leading()->first == GapVector{{0, 1, 0}});
    CHECK(c.height() == 1);
    CHECK(c.top_height_total() == 3);
    CHECK_THROWS_AS(Characteristic(ps({0})).add_term(GapVector{{1, 0, 0}}, 1), std::invalid_argument);
}

}  // TEST_SUITE
