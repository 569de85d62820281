#pragma once

// Global characteristics: counts of atoms per color, their refinement to
// larger parameter sets, and the definable-bijection test they induce.

#include "dlo/atoms.hpp"
#include "dlo/formula.hpp"
#include "dlo/params.hpp"

#include <map>
#include <optional>

namespace dlo {

/// Finitely supported map GapVector -> integer over a parameter set. Zero
/// coefficients are never stored. The ambient dimension is not recorded:
/// padding a set with copies of a coordinate leaves every gap count alone.
///
/// The same type carries elements of the Grothendieck ring (coefficients of
/// any sign); `operator==` is equality of classes, i.e. equality after
/// refining both sides to the union of their parameter sets.
class Characteristic {
public:
    Characteristic() = default;
    explicit Characteristic(ParamSet params) : params_(std::move(params)) {}

    /// c * [point].
    static Characteristic constant(const Integer& c, ParamSet params = {});
    static Characteristic color(ParamSet params, GapVector gaps, const Integer& coeff = 1);

    const ParamSet& params() const { return params_; }
    const std::map<GapVector, Integer>& coeffs() const { return coeffs_; }
    Integer coeff(const GapVector& g) const;

    void add_term(const GapVector& g, const Integer& c);

    bool is_zero() const { return coeffs_.empty(); }
    bool nonnegative() const;
    /// Largest height in the support (0 for the zero element).
    std::uint64_t height() const;
    /// Sum of coefficients at the maximal height.
    Integer top_height_total() const;
    /// The color that leads under `leads`, with its coefficient.
    std::optional<std::pair<GapVector, Integer>> leading() const;

    /// Same parameter set and same coefficient map.
    bool same_representation(const Characteristic& other) const;

private:
    ParamSet params_;
    std::map<GapVector, Integer> coeffs_;
};

bool operator==(const Characteristic& a, const Characteristic& b);

/// Coefficient of color T = number of atoms of split(d) with color T.
Characteristic chi(const PositiveDNF& d, std::size_t n, const ParamSet& params);
/// Over the constants of `d`.
Characteristic chi(const PositiveDNF& d, std::size_t n);
Characteristic chi_of_atoms(const std::vector<Atom>& atoms, const ParamSet& params);

/// Re-expresses `c` over `target`: within each original gap, the descending
/// chain of free blocks is placed order-preservingly into the new sub-gaps
/// and onto the new parameters (at most one block per parameter).
Characteristic refine(const Characteristic& c, const ParamSet& target);

struct Equivalence {
    bool equivalent;
    ParamSet witness;
};

/// Decides whether a definable bijection exists between the two sets by
/// comparing characteristics over the union of their parameters.
Equivalence equivalent(const PositiveDNF& d1, std::size_t n1, const PositiveDNF& d2, std::size_t n2);

/// Conjoins x_i = x_1 for n < i <= m (0-based: x_i = x_0 for n <= i < m).
PositiveDNF delta_pad(const PositiveDNF& d, std::size_t n, std::size_t m);

// Order with a minimum endpoint m, modelled as {q in Q : q >= 0} with m = 0.
// Sets are computed inside all of Q after conjoining x_i >= 0; their
// characteristics then have an empty bottom gap.

/// Characteristic over params(d) + {0}.
Characteristic min_endpoint_chi(const PositiveDNF& d, std::size_t n);

/// Conjoins x_i >= 0 for every variable.
PositiveDNF restrict_to_nonnegative(const PositiveDNF& d, std::size_t n);

/// Equivalence decided inside the endpoint order: characteristics over
/// parameters >= 0 only, bottom gap dropped.
bool min_endpoint_equivalent(const PositiveDNF& d1, std::size_t n1, const PositiveDNF& d2, std::size_t n2);

}  // namespace dlo
