#include "dlo/qe.hpp"

#include <algorithm>

namespace dlo::qe {

namespace {

bool mentions(const Constraint& c, std::size_t v) {
    return (c.lhs.is_var() && c.lhs.var_index() == v) || (c.rhs.is_var() && c.rhs.var_index() == v);
}

Term substitute(const Term& t, std::size_t v, const Term& by) {
    return t.is_var() && t.var_index() == v ? by : t;
}

PositiveDNF single(std::optional<Clause> clause, std::size_t arity) {
    std::vector<Clause> cs;
    if (clause) cs.push_back(std::move(*clause));
    return PositiveDNF(arity, std::move(cs));
}

}  // namespace

PositiveDNF eliminate_exists_clause(const Clause& clause, std::size_t v, std::size_t arity) {
    for (const auto& c : clause) {
        if (c.rel != Rel::Equal || !mentions(c, v)) continue;
        const Term other = c.lhs.is_var() && c.lhs.var_index() == v ? c.rhs : c.lhs;
        std::vector<Constraint> rest;
        for (const auto& d : clause) {
            if (&d == &c) continue;
            rest.push_back({substitute(d.lhs, v, other), d.rel, substitute(d.rhs, v, other)});
        }
        return single(make_clause(std::move(rest)), arity);
    }

    std::vector<Term> lower, upper;
    std::vector<Constraint> rest;
    for (const auto& c : clause) {
        if (!mentions(c, v)) {
            rest.push_back(c);
        } else if (c.rhs.is_var() && c.rhs.var_index() == v) {
            lower.push_back(c.lhs);
        } else {
            upper.push_back(c.rhs);
        }
    }
    for (const auto& l : lower)
        for (const auto& u : upper) rest.push_back({l, Rel::Less, u});
    return single(make_clause(std::move(rest)), arity);
}

PositiveDNF eliminate_exists(const PositiveDNF& d, std::size_t v) {
    PositiveDNF out = PositiveDNF::falsity(d.arity());
    for (const auto& clause : d.clauses()) out = disjoin(out, eliminate_exists_clause(clause, v, d.arity()));
    return out;
}

PositiveDNF eliminate_quantifiers(const Formula& f, std::size_t arity) {
    detail::QuantifierHandler handler;
    handler = [&](const Formula& q, bool positive) -> PositiveDNF {
        const std::size_t v = q.bound_var();
        if (q.kind() == Kind::Exists) {
            PositiveDNF inner = eliminate_exists(detail::positive_dnf(q.child(), arity, handler), v);
            return positive ? inner : negate(inner);
        }
        // A v. g  ==  !E v. !g
        PositiveDNF inner = eliminate_exists(negate(detail::positive_dnf(q.child(), arity, handler)), v);
        return positive ? negate(inner) : inner;
    };
    return detail::positive_dnf(f, arity, handler);
}

PositiveDNF eliminate_quantifiers(const ParsedFormula& f) { return eliminate_quantifiers(f.formula, f.arity); }

}  // namespace dlo::qe
