#pragma once

#include "dlo/formula.hpp"
#include "dlo/oracle.hpp"
#include "dlo/params.hpp"

#include <random>
#include <vector>

namespace testing {

// Random rational near the interesting values: often exactly one of
// `anchors`, otherwise a small fraction.
inline dlo::Rational random_value(std::mt19937_64& rng, const std::vector<dlo::Rational>& anchors) {
    if (!anchors.empty() && dlo::oracle::below(rng, 3) == 0) return anchors[dlo::oracle::below(rng, anchors.size())];
    dlo::Rational q(static_cast<long>(dlo::oracle::below(rng, 41)) - 20, static_cast<long>(1 + dlo::oracle::below(rng, 4)));
    q.canonicalize();
    return q;
}

// Points that repeat coordinates and hit the anchors often enough to
// exercise equalities.
inline std::vector<dlo::Rational> random_point(std::mt19937_64& rng, std::size_t n,
                                               std::vector<dlo::Rational> anchors) {
    std::vector<dlo::Rational> p;
    for (std::size_t i = 0; i < n; ++i) {
        p.push_back(random_value(rng, anchors));
        anchors.push_back(p.back());
    }
    return p;
}

inline dlo::Constraint lt(std::size_t a, std::size_t b) {
    return {dlo::Term::var(a), dlo::Rel::Less, dlo::Term::var(b)};
}
inline dlo::Constraint eq(std::size_t a, std::size_t b) {
    return {dlo::Term::var(a), dlo::Rel::Equal, dlo::Term::var(b)};
}

}  // namespace testing
