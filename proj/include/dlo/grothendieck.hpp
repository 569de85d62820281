#pragma once

// The semiring of definable-bijection classes and its group completion K0,
// represented by integer-valued characteristics.

#include "dlo/characteristic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dlo {

using K0Element = Characteristic;

K0Element add(const K0Element& a, const K0Element& b);
K0Element neg(const K0Element& a);
K0Element sub(const K0Element& a, const K0Element& b);
K0Element mul(const K0Element& a, const K0Element& b);
K0Element scale(const K0Element& a, const Integer& c);
inline bool eq(const K0Element& a, const K0Element& b) { return a == b; }

inline K0Element operator+(const K0Element& a, const K0Element& b) { return add(a, b); }
inline K0Element operator-(const K0Element& a, const K0Element& b) { return sub(a, b); }
inline K0Element operator-(const K0Element& a) { return neg(a); }
inline K0Element operator*(const K0Element& a, const K0Element& b) { return mul(a, b); }
inline K0Element operator*(const Integer& c, const K0Element& a) { return scale(a, c); }

/// Product of a g-chain and an h-chain sharing one gap: the merged chain
/// lengths and how many interleavings produce each. For g <= h the length
/// h+i occurs C(h+i, i) * C(h, g-i) times, i = 0..g.
std::vector<std::pair<std::uint32_t, Integer>> chain_product(std::uint32_t g, std::uint32_t h);

/// True iff the proper subset d1 of d2 has a different class than d2.
/// Throws std::invalid_argument when d1 is not a proper subset of d2.
bool php_check(const PositiveDNF& d1, const PositiveDNF& d2, std::size_t n);

struct Effectivity {
    bool effective;
    ParamSet witness;  // refinement making every coefficient >= 0
};

/// Searches refinements that add up to `budget` fresh parameters (gap
/// midpoints, or points beyond the extremes) for one where all
/// coefficients are non-negative. A negative answer is only "not within
/// budget".
Effectivity is_effective(const K0Element& e, std::size_t budget);

struct NoInjectionCertificate {
    ParamSet params;
    std::size_t gap;  // gap index over params

    std::string describe() const;
};

/// A gap that d1 occupies with a free block while no point of d2 has a
/// coordinate there. Since every refinement keeps some color of d1 with a
/// free block inside that gap, no definable injection d1 -> d2 exists.
std::optional<NoInjectionCertificate> no_injection_certificate(const PositiveDNF& d1, std::size_t n1,
                                                               const PositiveDNF& d2, std::size_t n2);

}  // namespace dlo
