#pragma once

// Quantifier elimination for dense linear orders without endpoints.

#include "dlo/formula.hpp"

namespace dlo::qe {

/// Quantifier-free positive DNF equivalent to `f` over (Q,<). Quantifiers
/// are eliminated innermost first; A v. g is handled as !E v. !g.
PositiveDNF eliminate_quantifiers(const Formula& f, std::size_t arity);
PositiveDNF eliminate_quantifiers(const ParsedFormula& f);

/// E v. clause, as a DNF with at most one clause. An equality v = t is
/// substituted; otherwise every lower bound of v is compared with every
/// upper bound.
PositiveDNF eliminate_exists_clause(const Clause& clause, std::size_t v, std::size_t arity);

/// E v. d, clause by clause.
PositiveDNF eliminate_exists(const PositiveDNF& d, std::size_t v);

}  // namespace dlo::qe
