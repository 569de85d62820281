#include "doctest.h"
#include "support.hpp"

#include "dlo/grothendieck.hpp"
#include "dlo/qe.hpp"

using namespace dlo;

namespace {

ParamSet ps(std::vector<Rational> v) { return ParamSet(std::move(v)); }

PositiveDNF dnf(const char* text, std::size_t n = 1) {
    std::vector<std::string> order;
    const char* names[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < n; ++i) order.push_back(names[i]);
    return qe::eliminate_quantifiers(parse_formula(text, order));
}

K0Element chain(const Rational& a, std::uint32_t n) { return Characteristic::color(ps({a}), GapVector{{n, 0}}); }

K0Element make(const ParamSet& params, std::vector<std::pair<std::vector<std::uint32_t>, long>> terms) {
    Characteristic c(params);
    for (auto& [g, coeff] : terms) c.add_term(GapVector{g}, coeff);
    return c;
}

}  // namespace

TEST_SUITE("grothendieck") {

TEST_CASE("addition") {
    const auto e = chi(dnf("x > 0"), 1);
    CHECK(e + K0Element() == e);
    CHECK(chi(dnf("x > 1"), 1) + chi(dnf("0 < x & x < 1"), 1) + chi(dnf("x = 1"), 1) == chi(dnf("x > 0"), 1));
    const auto two = Characteristic::constant(1) + Characteristic::constant(1);
    CHECK(two.same_representation(Characteristic::constant(2)));
    CHECK((e - e).is_zero());
}

TEST_CASE("same-gap products") {
    const Rational a = 0;
    CHECK(chain(a, 1) * chain(a, 1) == chain(a, 1) + Integer(2) * chain(a, 2));
    CHECK((chain(a, 2) * chain(a, 3))
              .same_representation(make(ps({0}), {{{3, 0}, 3}, {{4, 0}, 12}, {{5, 0}, 10}})));
    const auto outcome = chain_product(3, 2);
    CHECK(outcome == std::vector<std::pair<std::uint32_t, Integer>>{{3, 3}, {4, 12}, {5, 10}});
}

TEST_CASE("products in different gaps just combine") {
    const auto p3 = ps({2, 1, 0});
    const std::uint32_t n = 2, m = 3;
    const auto mid = Characteristic::color(p3, GapVector{{0, n, 0, 0}});
    const auto low = Characteristic::color(p3, GapVector{{0, 0, m, 0}});
    CHECK((mid * low).same_representation(Characteristic::color(p3, GapVector{{0, n, m, 0}})));
}

TEST_CASE("equality") {
    CHECK_FALSE(chi(dnf("x > 0"), 1) == chi(dnf("x > 1"), 1));
    auto noisy = chi(dnf("x > 0"), 1);
    noisy.add_term(GapVector{{0, 0}}, 0);
    CHECK(eq(noisy, chi(dnf("x > 0"), 1)));
    CHECK(eq(chi(dnf("x > 0"), 1), refine(chi(dnf("x > 0"), 1), ps({5, 0, -5}))));
}

TEST_CASE("ring laws on random elements") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        auto pick = [&] {
            return oracle::random_characteristic(rng, oracle::random_params(rng, oracle::below(rng, 3)), 3, 3, -3, 3);
        };
        const auto a = pick(), b = pick(), c = pick();
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Characteristic::constant(1) == a);
        CHECK((a * K0Element()).is_zero());
    }
}

TEST_CASE("cancellativity") {
    std::mt19937_64 rng(52);
    std::size_t premises = 0;
    for (int t = 0; t < 200; ++t) {
        const auto params = oracle::random_params(rng, oracle::below(rng, 3));
        const auto a = oracle::random_characteristic(rng, params, 3, 3, 0, 2);
        const auto b = oracle::below(rng, 2) ? a : oracle::random_characteristic(rng, params, 3, 3, 0, 2);
        const auto c = oracle::random_characteristic(rng, oracle::random_params(rng, 2), 3, 3, 0, 2);
        if (a + c == b + c) {
            ++premises;
            CHECK(a == b);
        } else {
            CHECK_FALSE(a == b);
        }
    }
    CHECK(premises >= 50);
}

TEST_CASE("products agree with the interleaving oracle") {
    for (std::size_t k = 0; k <= 2; ++k) {
        std::vector<Rational> v;
        for (std::size_t j = 0; j < k; ++j) v.emplace_back(static_cast<long>(j));
        const ParamSet params(v);
        std::vector<GapVector> colors;
        const std::size_t gaps = params.gap_count();
        std::vector<std::uint32_t> counts(gaps, 0);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == gaps) {
                colors.push_back(GapVector{counts});
                return;
            }
            for (std::uint32_t c = 0; c <= (k == 2 ? 2u : 4u); ++c) {
                counts[i] = c;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        for (const auto& g : colors)
            for (const auto& h : colors) {
                const auto product = Characteristic::color(params, g) * Characteristic::color(params, h);
                const auto expected = oracle::atom_product_split(atom_with_gaps(params, g), atom_with_gaps(params, h));
                REQUIRE(product.same_representation(expected));
            }
    }
}

TEST_CASE("merge totals are Delannoy numbers") {
    for (std::uint32_t g = 0; g <= 6; ++g)
        for (std::uint32_t h = 0; h <= 6; ++h) {
            Integer total = 0;
            for (const auto& [len, c] : chain_product(g, h)) total += c;
            CHECK(total == oracle::delannoy(g, h));
        }
    CHECK(oracle::delannoy(2, 3) == 25);
}

TEST_CASE("proper subsets have different classes") {
    CHECK(php_check(dnf("x > 1"), dnf("x > 0"), 1));
    CHECK(php_check(dnf("x = 0"), dnf("x = 0 | x = 1"), 1));
    CHECK_THROWS_AS(php_check(dnf("x > 0"), dnf("x > 0"), 1), std::invalid_argument);
    CHECK_THROWS_AS(php_check(dnf("x > 0"), dnf("x > 1"), 1), std::invalid_argument);
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const auto params = oracle::random_params(rng, oracle::below(rng, 3));
        const std::size_t n = 1 + oracle::below(rng, 2);
        const auto big = oracle::random_definable_set(rng(), n, params, 0.6);
        if (big.clauses().empty()) continue;
        std::vector<Clause> smaller(big.clauses());
        smaller.erase(smaller.begin() + static_cast<long>(oracle::below(rng, smaller.size())));
        CHECK(php_check(PositiveDNF(n, smaller), big, n));
    }
}

TEST_CASE("effectivity search") {
    const auto e = chi(dnf("x > 0"), 1) - Characteristic::constant(1);
    const auto r = is_effective(e, 2);
    REQUIRE(r.effective);
    CHECK(refine(e, r.witness).nonnegative());
    CHECK(refine(e, ps({1, 0})).same_representation(make(ps({1, 0}), {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}})));
    for (std::size_t budget = 0; budget <= 3; ++budget)
        CHECK_FALSE(is_effective(Characteristic::constant(-1), budget).effective);
    const auto d = chi(dnf("x > 0 & x < 1 | x = 3"), 1);
    const auto trivial = is_effective(d, 0);
    CHECK(trivial.effective);
    CHECK(trivial.witness == d.params());
}

TEST_CASE("a certified element is never certified with the opposite sign") {
    std::mt19937_64 rng(54);
    std::size_t found = 0;
    for (int t = 0; t < 60; ++t) {
        const auto e = oracle::random_characteristic(rng, oracle::random_params(rng, oracle::below(rng, 2)), 2, 3, -2, 2);
        if (e.is_zero() || !is_effective(e, 2).effective) continue;
        ++found;
        CHECK_FALSE(is_effective(-e, 2).effective);
    }
    CHECK(found > 5);
}

TEST_CASE("injection obstructions") {
    const auto up = no_injection_certificate(dnf("x > 0"), 1, dnf("x < 0"), 1);
    REQUIRE(up);
    CHECK(up->gap == 0);
    CHECK(up->describe() == "(0,inf)");
    const auto down = no_injection_certificate(dnf("x < 0"), 1, dnf("x > 0"), 1);
    REQUIRE(down);
    CHECK(down->gap == 1);
    CHECK(down->describe() == "(-inf,0)");
    CHECK_FALSE(no_injection_certificate(dnf("x > 1"), 1, dnf("x > 0"), 1));
}

TEST_CASE("the ring is not trivial") {
    CHECK_FALSE(eq(Characteristic::constant(1), K0Element()));
    CHECK_FALSE(eq(Characteristic::constant(1), Characteristic::constant(0)));
}

}  // TEST_SUITE
