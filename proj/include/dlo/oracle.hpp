#pragma once

// Naive reference implementations. They enumerate concrete points on small
// grids instead of reasoning about atoms, and serve as ground truth.

#include "dlo/atoms.hpp"
#include "dlo/characteristic.hpp"
#include "dlo/formula.hpp"
#include "dlo/genring.hpp"

#include <functional>
#include <map>
#include <random>

namespace dlo::oracle {

/// Ordered set partitions of an n-set (Fubini numbers). n <= 8.
Integer weak_order_count(std::size_t n);

/// Distinct order types of points of Q^n relative to k parameters, found by
/// scanning a grid.
std::size_t count_atoms_bruteforce(std::size_t n, std::size_t k);

/// Ways a descending g-chain and a descending h-chain can sit together in
/// one open interval, keyed by the number of distinct values they use.
std::map<std::uint32_t, Integer> interleavings(std::uint32_t g, std::uint32_t h);

/// Characteristic of A x B over their common parameters, assembled gap by
/// gap from `interleavings`.
Characteristic atom_product_split(const Atom& a, const Atom& b);

/// Characteristic of {x in Q^n : member(x)} over `params`, by scanning a
/// grid with n points in every gap and recording distinct order types.
Characteristic chi_by_grid(const std::function<bool(std::span<const Rational>)>& member, std::size_t n,
                           const ParamSet& params);
Characteristic chi_by_grid(const PositiveDNF& d, std::size_t n, const ParamSet& params);
inline Characteristic refine_oracle(const PositiveDNF& d, std::size_t n, const ParamSet& target) {
    return chi_by_grid(d, n, target);
}

/// Delannoy numbers by the three-term recurrence. m, n <= 12.
Integer delannoy(std::size_t m, std::size_t n);

/// Union of atoms over `params`, each kept independently with probability
/// `density`. Deterministic in `seed`.
PositiveDNF random_definable_set(std::uint64_t seed, std::size_t n, const ParamSet& params, double density);

/// Uniform draw in [0, 1) from the raw engine output.
double unit(std::mt19937_64& rng);
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound);

/// Random formula with `arity` free variables, constants from `params` and
/// quantifier depth at most `max_depth`.
ParsedFormula random_formula(std::mt19937_64& rng, std::size_t arity, const ParamSet& params, std::size_t max_depth);

/// Random characteristic: up to `terms` colors of height <= max_height with
/// coefficients in [lo, hi].
Characteristic random_characteristic(std::mt19937_64& rng, const ParamSet& params, std::uint32_t max_height,
                                     std::size_t terms, long lo, long hi);

/// A random normal-form monomial over `params` (and -inf) of height in
/// [1, max_height].
Monomial random_monomial(std::mt19937_64& rng, const ParamSet& params, std::uint32_t max_height);

/// A random sample of distinct rationals with small numerators and
/// denominators.
ParamSet random_params(std::mt19937_64& rng, std::size_t count);

}  // namespace dlo::oracle
