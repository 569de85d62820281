#pragma once

// Related sets: the atoms of the boolean algebra of subsets of Q^n definable
// with a fixed finite parameter set.

#include "dlo/formula.hpp"
#include "dlo/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dlo {

/// A maximal group of variables forced equal. A pinned block equals its pin
/// and may hold no variables; a free block always holds at least one.
struct Block {
    std::vector<std::size_t> vars;  // sorted
    std::optional<Rational> pin;

    bool free() const { return !pin.has_value(); }
    friend bool operator==(const Block& a, const Block& b) = default;
};

/// A related set over `params` in dimension `arity`: blocks listed in
/// strictly descending order of value. Every parameter is the pin of
/// exactly one block and every variable sits in exactly one block.
class Atom {
public:
    Atom(std::size_t arity, ParamSet params, std::vector<Block> blocks);

    std::size_t arity() const { return arity_; }
    const ParamSet& params() const { return params_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Number of free blocks.
    std::size_t height() const;
    GapVector gaps() const;

    /// A point of Q^n inside this atom.
    std::vector<Rational> sample_point() const;

    /// Canonical defining formula, e.g. `x1 > x2 = x3 > 0 = x4`.
    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;

    /// The defining clause as a DNF with one clause.
    PositiveDNF to_dnf() const;

    friend bool operator==(const Atom& a, const Atom& b) = default;

private:
    std::size_t arity_;
    ParamSet params_;
    std::vector<Block> blocks_;
};

struct Color {
    ParamSet params;
    GapVector gaps;
    friend bool operator==(const Color&, const Color&) = default;
};

/// All atoms over `params` in dimension n, each exactly once.
std::vector<Atom> enumerate_atoms(std::size_t n, const ParamSet& params);

/// Atoms contained in the set defined by `d`. `params` must contain every
/// constant of `d`.
std::vector<Atom> split(const PositiveDNF& d, std::size_t n, const ParamSet& params);

inline std::vector<Rational> sample_point(const Atom& a) { return a.sample_point(); }
inline std::size_t height(const Atom& a) { return a.height(); }
Color color_of(const Atom& a);

/// The chain atom with counts[i] free points directly above params[i].
/// The last parameter may be -inf, in which case the last count sits in the
/// bottom gap of the remaining (rational) parameters.
Atom chain_atom(const std::vector<ExtendedRational>& params, const std::vector<std::uint32_t>& counts);

/// The atom with exactly the given free-block counts per gap (variables
/// numbered top-down, one per block).
Atom atom_with_gaps(const ParamSet& params, const GapVector& gaps);

}  // namespace dlo
