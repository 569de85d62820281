#include "doctest.h"
#include "support.hpp"

#include "dlo/qe.hpp"

using namespace dlo;

namespace {

PositiveDNF qf(const char* text, std::size_t arity) { return to_positive_dnf(parse_formula(text).formula, arity); }

}  // namespace

TEST_SUITE("qe") {

TEST_CASE("interval witness collapses to the bound comparison") {
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (0 < y & y < x)")) == qf("0 < x", 1));
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (-5/2 < y & y < x)")) == qf("-5/2 < x", 1));
}

TEST_CASE("no endpoints") {
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. y > x")).is_true());
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. y < x")).is_true());
    CHECK(qe::eliminate_quantifiers(parse_formula("A x. E y. y > x")).is_true());
}

TEST_CASE("contradictory body") {
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (x < y & y < x)")).is_false());
    CHECK(qe::eliminate_quantifiers(parse_formula("A y. y < x")).is_false());
}

TEST_CASE("single clause kernel") {
    // variables: x = 0, y = 1, v = 2
    const auto density = qe::eliminate_exists_clause({testing::lt(0, 2), testing::lt(2, 1)}, 2, 3);
    CHECK(density == PositiveDNF(3, {{testing::lt(0, 1)}}));
    const auto subst = qe::eliminate_exists_clause(*make_clause({testing::eq(0, 2), testing::lt(2, 1)}), 2, 3);
    CHECK(subst == PositiveDNF(3, {{testing::lt(0, 1)}}));
    const auto unbounded = qe::eliminate_exists_clause({testing::lt(0, 2)}, 2, 3);
    CHECK(unbounded.is_true());
}

TEST_CASE("constants as bounds") {
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (1 < y & y < 0)")).is_false());
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (0 < y & y < 1 & y = x)")) == qf("0 < x & x < 1", 1));
    CHECK(qe::eliminate_quantifiers(parse_formula("E y. (y = 2 & x < y)")) == qf("x < 2", 1));
}

TEST_CASE("output is positive and quantifier free") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        const ParamSet ps = oracle::random_params(rng, oracle::below(rng, 3));
        const std::size_t arity = 1 + oracle::below(rng, 2);
        const auto p = oracle::random_formula(rng, arity, ps, 3);
        const auto d = qe::eliminate_quantifiers(p);
        CHECK(d.arity() == arity);
        CHECK(d.max_var() <= arity);
        for (const auto& clause : d.clauses()) {
            CHECK(satisfiable(clause));
            for (const auto& c : clause) CHECK((c.rel == Rel::Less || c.rel == Rel::Equal));
        }
        CHECK(ps.includes(d.params()));
    }
}

TEST_CASE("elimination agrees with finite-witness evaluation") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t) {
        const ParamSet ps = oracle::random_params(rng, oracle::below(rng, 3));
        const std::size_t arity = 1 + oracle::below(rng, 2);
        const auto p = oracle::random_formula(rng, arity, ps, 3);
        const auto d = qe::eliminate_quantifiers(p);
        for (int i = 0; i < 300; ++i) {
            const auto pt = testing::random_point(rng, arity, ps.values());
            REQUIRE(d.holds(pt) == eval_formula(p.formula, pt));
        }
    }
}

TEST_CASE("idempotent on quantifier-free input") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const ParamSet ps = oracle::random_params(rng, 2);
        const auto p = oracle::random_formula(rng, 2, ps, 0);
        const auto once = qe::eliminate_quantifiers(p);
        CHECK(qe::eliminate_quantifiers(to_formula(once), 2) == once);
        CHECK(once == to_positive_dnf(p.formula, 2));
    }
}

}  // TEST_SUITE
