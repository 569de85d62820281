#include "doctest.h"
#include "support.hpp"

#include "dlo/atoms.hpp"

#include <algorithm>
#include <numeric>

using namespace dlo;

namespace {

ParamSet ps(std::vector<Rational> v) { return ParamSet(std::move(v)); }

PositiveDNF dnf(const char* text, std::size_t n) {
    std::vector<std::string> order;
    const char* names[] = {"x", "y", "z", "w"};
    for (std::size_t i = 0; i < n; ++i) order.push_back(names[i]);
    return to_positive_dnf(parse_formula(text, order).formula, n);
}

std::vector<std::string> strings(const std::vector<Atom>& atoms, std::span<const std::string> names) {
    std::vector<std::string> out;
    for (const auto& a : atoms) out.push_back(a.to_string(names));
    std::sort(out.begin(), out.end());
    return out;
}

// The same set with variable i renamed to perm[i].
PositiveDNF permuted(const PositiveDNF& d, const std::vector<std::size_t>& perm) {
    std::vector<Clause> clauses;
    auto move = [&](const Term& t) { return t.is_var() ? Term::var(perm[t.var_index()]) : t; };
    for (const auto& clause : d.clauses()) {
        std::vector<Constraint> cs;
        for (const auto& c : clause) cs.push_back({move(c.lhs), c.rel, move(c.rhs)});
        clauses.push_back(*make_clause(std::move(cs)));
    }
    return PositiveDNF(d.arity(), std::move(clauses));
}

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX{"x"};

}  // namespace

TEST_SUITE("atoms") {

TEST_CASE("atom counts") {
    CHECK(enumerate_atoms(1, {}).size() == 1);
    CHECK(enumerate_atoms(1, ps({0})).size() == 3);
    CHECK(enumerate_atoms(2, ps({1, 0})).size() == 31);
    CHECK(enumerate_atoms(0, ps({1, 0})).size() == 1);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 0; k <= 2; ++k)
            CHECK(enumerate_atoms(n, ps([&] {
                      std::vector<Rational> v;
                      for (std::size_t j = 0; j < k; ++j) v.emplace_back(static_cast<long>(j));
                      return v;
                  }())).size() == oracle::count_atoms_bruteforce(n, k));
}

TEST_CASE("parameterless counts are Fubini numbers") {
    for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_atoms(n, {}).size() == oracle::weak_order_count(n));
    CHECK(oracle::weak_order_count(4) == 75);
}

TEST_CASE("enumeration has no duplicates") {
    const auto atoms = enumerate_atoms(3, ps({1, 0}));
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j) CHECK_FALSE(atoms[i] == atoms[j]);
}

TEST_CASE("split of a half line") {
    const auto atoms = split(dnf("x > 0", 1), 1, ps({1, 0}));
    CHECK(strings(atoms, kX) == std::vector<std::string>{"1 = x > 0", "1 > x > 0", "x > 1 > 0"});
}

TEST_CASE("split of the empty set and of the plane") {
    CHECK(split(PositiveDNF::falsity(2), 2, ps({0})).empty());
    const auto atoms = split(PositiveDNF::truth(2), 2, {});
    CHECK(strings(atoms, kXY) == std::vector<std::string>{"x = y", "x > y", "y > x"});
}

TEST_CASE("split requires the constants of the set") {
    CHECK_THROWS_AS(split(dnf("x > 2", 1), 1, ps({0})), std::invalid_argument);
}

TEST_CASE("sample points") {
    const auto pinned = split(dnf("x = 0", 1), 1, ps({0}));
    REQUIRE(pinned.size() == 1);
    CHECK(pinned[0].sample_point() == std::vector<Rational>{0});

    const auto open = split(dnf("0 < x & x < 1", 1), 1, ps({1, 0}));
    REQUIRE(open.size() == 1);
    CHECK(open[0].sample_point() == std::vector<Rational>{Rational(1, 2)});

    const auto chain = split(dnf("x > y & y > 1", 2), 2, ps({1}));
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].sample_point() == std::vector<Rational>{3, 2});
    CHECK(chain[0].to_dnf().holds(chain[0].sample_point()));
}

TEST_CASE("heights") {
    CHECK(split(dnf("x = 0", 1), 1, ps({0}))[0].height() == 0);
    CHECK(split(dnf("0 < x & x < 1", 1), 1, ps({1, 0}))[0].height() == 1);
    CHECK(split(dnf("x > y & y > 1", 2), 2, ps({1}))[0].height() == 2);
    CHECK(split(dnf("x = y & y > 1", 2), 2, ps({1}))[0].height() == 1);
}

TEST_CASE("colors") {
    CHECK(color_of(split(dnf("x = 0", 1), 1, ps({0}))[0]).gaps == GapVector{{0, 0}});
    CHECK(color_of(split(dnf("0 < x & x < 1", 1), 1, ps({1, 0}))[0]).gaps == GapVector{{0, 1, 0}});
    const auto a = split(dnf("x > y & y > 1", 2), 2, ps({1}));
    const auto b = split(dnf("y > x & x > 1", 2), 2, ps({1}));
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK_FALSE(a[0] == b[0]);
    CHECK(color_of(a[0]) == color_of(b[0]));
    CHECK(color_of(a[0]).gaps == GapVector{{2, 0}});
}

TEST_CASE("chain atoms") {
    const auto two = chain_atom({Rational(0)}, {2});
    CHECK(two.to_string() == "x1 > x2 > 0");
    const auto point = chain_atom({Rational(0)}, {0});
    CHECK(point.height() == 0);
    CHECK(point.arity() == 0);
    const auto interval = chain_atom({Rational(1), Rational(0)}, {0, 1});
    CHECK(interval.to_string(kX) == "1 > x > 0");
    CHECK(color_of(interval).gaps == GapVector{{0, 1, 0}});
    const auto low = chain_atom({Rational(0), ExtendedRational::minus_infinity()}, {1, 2});
    CHECK(low.gaps() == GapVector{{1, 2}});
    CHECK_THROWS_AS(chain_atom({Rational(0)}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(chain_atom({ExtendedRational::minus_infinity(), Rational(0)}, {1, 1}), std::invalid_argument);
}

TEST_CASE("canonical formula") {
    const auto a = split(dnf("x > y & y = z & z > 0 & w = 0", 4), 4, ps({0}));
    REQUIRE(a.size() == 1);
    CHECK(a[0].to_string() == "x1 > x2 = x3 > 0 = x4");
}

TEST_CASE("atoms partition the space") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& params : {ps({}), ps({0}), ps({1, 0})}) {
            const auto atoms = enumerate_atoms(n, params);
            for (const auto& a : atoms) {
                const auto pt = a.sample_point();
                std::size_t hits = 0;
                for (const auto& b : atoms) hits += b.to_dnf().holds(pt) ? 1 : 0;
                REQUIRE(hits == 1);
                REQUIRE(a.to_dnf().holds(pt));
            }
        }
    }
    std::mt19937_64 rng(31);
    const auto atoms = enumerate_atoms(4, ps({1, 0}));
    for (int t = 0; t < 200; ++t) {
        const auto pt = testing::random_point(rng, 4, {1, 0});
        std::size_t hits = 0;
        for (const auto& b : atoms) hits += b.to_dnf().holds(pt) ? 1 : 0;
        REQUIRE(hits == 1);
    }
}

TEST_CASE("color is invariant under renaming variables") {
    std::vector<std::size_t> perm{0, 1, 2};
    const auto atoms = enumerate_atoms(3, ps({0}));
    do {
        for (const auto& a : atoms) {
            const auto moved = split(permuted(a.to_dnf(), perm), 3, ps({0}));
            REQUIRE(moved.size() == 1);
            CHECK(color_of(moved[0]) == color_of(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("height is the sum of gap counts") {
    for (const auto& a : enumerate_atoms(3, ps({2, 1, 0}))) CHECK(a.height() == a.gaps().height());
}

TEST_CASE("atom with given gaps") {
    const auto a = atom_with_gaps(ps({1, 0}), GapVector{{1, 2, 0}});
    CHECK(a.gaps() == GapVector{{1, 2, 0}});
    CHECK(a.arity() == 3);
    CHECK(a.to_dnf().holds(a.sample_point()));
}

}  // TEST_SUITE
