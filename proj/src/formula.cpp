#include "dlo/formula.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dlo {

// ---------------------------------------------------------------- terms

Term Term::constant(Rational value) {
    value.canonicalize();
    return Term(std::move(value));
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (a.is_var() != b.is_var()) return b.is_var() <=> a.is_var();
    if (a.is_var()) return a.var_index() <=> b.var_index();
    return compare(a.value(), b.value());
}

std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    if (auto c = a.rel <=> b.rel; c != 0) return c;
    return a.rhs <=> b.rhs;
}

std::pair<Truth, Constraint> normalize(Constraint c) {
    if (!c.lhs.is_var() && !c.rhs.is_var()) {
        const int s = cmp(c.lhs.value(), c.rhs.value());
        const bool t = c.rel == Rel::Less ? s < 0 : s == 0;
        return {t ? Truth::True : Truth::False, c};
    }
    if (c.lhs == c.rhs) return {c.rel == Rel::Equal ? Truth::True : Truth::False, c};
    if (c.rel == Rel::Equal && c.rhs < c.lhs) std::swap(c.lhs, c.rhs);
    return {Truth::Open, c};
}

namespace {

struct TermGraph {
    std::vector<Term> terms;
    std::vector<std::size_t> parent;

    std::size_t id(const Term& t) {
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i] == t) return i;
        terms.push_back(t);
        parent.push_back(parent.size());
        return terms.size() - 1;
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
};

}  // namespace

bool satisfiable(const Clause& clause) {
    TermGraph g;
    for (const auto& c : clause) {
        const auto a = g.id(c.lhs), b = g.id(c.rhs);
        if (c.rel == Rel::Equal) g.parent[g.find(a)] = g.find(b);
    }
    const std::size_t n = g.terms.size();
    // Constant carried by each class, if any.
    std::vector<const Rational*> pinned(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        if (g.terms[i].is_var()) continue;
        const auto r = g.find(i);
        if (pinned[r] && *pinned[r] != g.terms[i].value()) return false;
        pinned[r] = &g.terms[i].value();
    }
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& c : clause)
        if (c.rel == Rel::Less) out[g.find(g.id(c.lhs))].push_back(g.find(g.id(c.rhs)));
    std::vector<std::size_t> consts;
    for (std::size_t i = 0; i < n; ++i)
        if (g.find(i) == i && pinned[i]) consts.push_back(i);
    std::sort(consts.begin(), consts.end(),
              [&](std::size_t a, std::size_t b) { return *pinned[a] < *pinned[b]; });
    for (std::size_t i = 1; i < consts.size(); ++i) out[consts[i - 1]].push_back(consts[i]);

    // Cycle detection; a cycle through strict edges is a contradiction.
    std::vector<int> state(n, 0);
    std::function<bool(std::size_t)> cyclic = [&](std::size_t u) {
        state[u] = 1;
        for (auto v : out[u]) {
            if (state[v] == 1) return true;
            if (state[v] == 0 && cyclic(v)) return true;
        }
        state[u] = 2;
        return false;
    };
    for (std::size_t i = 0; i < n; ++i)
        if (g.find(i) == i && state[i] == 0 && cyclic(i)) return false;
    return true;
}

std::optional<Clause> make_clause(std::vector<Constraint> constraints) {
    Clause out;
    out.reserve(constraints.size());
    for (auto& c : constraints) {
        auto [truth, norm] = normalize(std::move(c));
        if (truth == Truth::False) return std::nullopt;
        if (truth == Truth::Open) out.push_back(std::move(norm));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!satisfiable(out)) return std::nullopt;
    return out;
}

namespace {

const Rational& term_value(const Term& t, std::span<const Rational> point) {
    if (!t.is_var()) return t.value();
    if (t.var_index() >= point.size())
        throw std::invalid_argument("no value assigned to variable #" + std::to_string(t.var_index()));
    return point[t.var_index()];
}

}  // namespace

bool holds(const Clause& clause, std::span<const Rational> point) {
    for (const auto& c : clause) {
        const auto& a = term_value(c.lhs, point);
        const auto& b = term_value(c.rhs, point);
        if (c.rel == Rel::Less ? !(a < b) : !(a == b)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- DNF

PositiveDNF::PositiveDNF(std::size_t arity, std::vector<Clause> clauses)
    : arity_(arity), clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    if (is_true()) clauses_ = {Clause{}};
}

PositiveDNF PositiveDNF::truth(std::size_t arity) { return PositiveDNF(arity, {Clause{}}); }

bool PositiveDNF::is_true() const {
    return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

ParamSet PositiveDNF::params() const {
    std::vector<Rational> values;
    for (const auto& clause : clauses_)
        for (const auto& c : clause)
            for (const Term* t : {&c.lhs, &c.rhs})
                if (!t->is_var()) values.push_back(t->value());
    return ParamSet(std::move(values));
}

std::size_t PositiveDNF::max_var() const {
    std::size_t m = 0;
    for (const auto& clause : clauses_)
        for (const auto& c : clause)
            for (const Term* t : {&c.lhs, &c.rhs})
                if (t->is_var()) m = std::max(m, t->var_index() + 1);
    return m;
}

bool PositiveDNF::holds(std::span<const Rational> point) const {
    return std::any_of(clauses_.begin(), clauses_.end(),
                       [&](const Clause& c) { return dlo::holds(c, point); });
}

PositiveDNF PositiveDNF::with_arity(std::size_t arity) const {
    PositiveDNF d = *this;
    d.arity_ = arity;
    return d;
}

PositiveDNF drop_subsumed(const PositiveDNF& d) {
    // Clauses are already distinct, so only proper subsets subsume.
    const auto& cs = d.clauses();
    std::vector<Clause> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const bool subsumed = std::any_of(cs.begin(), cs.end(), [&](const Clause& other) {
            return other.size() < cs[i].size() &&
                   std::includes(cs[i].begin(), cs[i].end(), other.begin(), other.end());
        });
        if (!subsumed) kept.push_back(cs[i]);
    }
    return PositiveDNF(d.arity(), std::move(kept));
}

PositiveDNF disjoin(const PositiveDNF& a, const PositiveDNF& b) {
    std::vector<Clause> all = a.clauses();
    all.insert(all.end(), b.clauses().begin(), b.clauses().end());
    return drop_subsumed(PositiveDNF(std::max(a.arity(), b.arity()), std::move(all)));
}

PositiveDNF conjoin(const PositiveDNF& a, const PositiveDNF& b) {
    std::vector<Clause> all;
    for (const auto& x : a.clauses())
        for (const auto& y : b.clauses()) {
            Clause merged = x;
            merged.insert(merged.end(), y.begin(), y.end());
            if (auto c = make_clause(std::move(merged))) all.push_back(std::move(*c));
        }
    return drop_subsumed(PositiveDNF(std::max(a.arity(), b.arity()), std::move(all)));
}

namespace {

PositiveDNF negated_constraint(const Constraint& c, std::size_t arity) {
    std::vector<std::vector<Constraint>> alts;
    if (c.rel == Rel::Less)
        alts = {{{c.rhs, Rel::Less, c.lhs}}, {{c.lhs, Rel::Equal, c.rhs}}};
    else
        alts = {{{c.lhs, Rel::Less, c.rhs}}, {{c.rhs, Rel::Less, c.lhs}}};
    std::vector<Clause> clauses;
    for (auto& alt : alts)
        if (auto cl = make_clause(std::move(alt))) clauses.push_back(std::move(*cl));
    return PositiveDNF(arity, std::move(clauses));
}

}  // namespace

PositiveDNF negate(const PositiveDNF& d) {
    PositiveDNF acc = PositiveDNF::truth(d.arity());
    for (const auto& clause : d.clauses()) {
        PositiveDNF alternatives = PositiveDNF::falsity(d.arity());
        for (const auto& c : clause) alternatives = disjoin(alternatives, negated_constraint(c, d.arity()));
        acc = conjoin(acc, alternatives);
        if (acc.is_false()) break;
    }
    return acc;
}

// ---------------------------------------------------------------- formulas

struct Formula::Node {
    Kind kind;
    Constraint atom{};
    std::size_t var = 0;
    std::vector<Formula> children;
};

Formula Formula::atomic(Term lhs, Rel rel, Term rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atomic, {std::move(lhs), rel, std::move(rhs)}, 0, {}}));
}
Formula Formula::truth() { return Formula(std::make_shared<const Node>(Node{Kind::True, {}, 0, {}})); }
Formula Formula::falsity() { return Formula(std::make_shared<const Node>(Node{Kind::False, {}, 0, {}})); }
Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, 0, {std::move(f)}}));
}
Formula Formula::conjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, 0, {std::move(a), std::move(b)}}));
}
Formula Formula::disjunction(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, 0, {std::move(a), std::move(b)}}));
}
Formula Formula::implication(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::Implies, {}, 0, {std::move(a), std::move(b)}}));
}
Formula Formula::exists(std::size_t var, Formula body) {
    return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, var, {std::move(body)}}));
}
Formula Formula::forall(std::size_t var, Formula body) {
    return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, var, {std::move(body)}}));
}

Kind Formula::kind() const { return node_->kind; }
const Constraint& Formula::atom() const { return node_->atom; }
std::size_t Formula::bound_var() const { return node_->var; }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }
std::size_t Formula::child_count() const { return node_->children.size(); }

bool Formula::quantifier_free() const { return quantifier_depth() == 0; }

std::size_t Formula::quantifier_depth() const {
    std::size_t d = 0;
    for (const auto& c : node_->children) d = std::max(d, c.quantifier_depth());
    if (kind() == Kind::Exists || kind() == Kind::Forall) ++d;
    return d;
}

void Formula::collect_constants(std::vector<Rational>& out) const {
    if (kind() == Kind::Atomic) {
        if (!atom().lhs.is_var()) out.push_back(atom().lhs.value());
        if (!atom().rhs.is_var()) out.push_back(atom().rhs.value());
    }
    for (const auto& c : node_->children) c.collect_constants(out);
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Atomic) return a.atom() == b.atom();
    if ((a.kind() == Kind::Exists || a.kind() == Kind::Forall) && a.bound_var() != b.bound_var()) return false;
    return a.node_->children == b.node_->children;
}

ParamSet ParsedFormula::params() const {
    std::vector<Rational> values;
    formula.collect_constants(values);
    return ParamSet(std::move(values));
}

// ---------------------------------------------------------------- printing

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

namespace {

std::string term_string(const Term& t, std::span<const std::string> names) {
    if (!t.is_var()) return to_string(t.value());
    if (t.var_index() < names.size()) return names[t.var_index()];
    return "v" + std::to_string(t.var_index());
}

bool is_binary(Kind k) { return k == Kind::And || k == Kind::Or || k == Kind::Implies; }

std::string print(const Formula& f, std::span<const std::string> names) {
    auto wrapped = [&](const Formula& g) {
        const auto s = print(g, names);
        return is_binary(g.kind()) ? "(" + s + ")" : s;
    };
    switch (f.kind()) {
        case Kind::Atomic: return to_string(f.atom(), names);
        case Kind::True: return "true";
        case Kind::False: return "false";
        case Kind::Not: {
            const Kind k = f.child().kind();
            if (k == Kind::Atomic || is_binary(k)) return "!(" + print(f.child(), names) + ")";
            return "!" + print(f.child(), names);
        }
        case Kind::And: return wrapped(f.child(0)) + " & " + wrapped(f.child(1));
        case Kind::Or: return wrapped(f.child(0)) + " | " + wrapped(f.child(1));
        case Kind::Implies: return wrapped(f.child(0)) + " -> " + wrapped(f.child(1));
        case Kind::Exists:
        case Kind::Forall:
            return std::string(f.kind() == Kind::Exists ? "E " : "A ") +
                   term_string(Term::var(f.bound_var()), names) + ". " + wrapped(f.child());
    }
    return {};
}

}  // namespace

std::string to_string(const Constraint& c, std::span<const std::string> names) {
    return term_string(c.lhs, names) + (c.rel == Rel::Less ? " < " : " = ") + term_string(c.rhs, names);
}

std::string to_string(const Formula& f, std::span<const std::string> names) { return print(f, names); }

std::string to_string(const ParsedFormula& f) { return print(f.formula, f.names); }

std::string to_string(const PositiveDNF& d, std::span<const std::string> names) {
    if (d.is_false()) return "false";
    if (d.is_true()) return "true";
    std::string s;
    for (std::size_t i = 0; i < d.clauses().size(); ++i) {
        const auto& clause = d.clauses()[i];
        if (i) s += " | ";
        const bool paren = d.clauses().size() > 1 && clause.size() > 1;
        if (paren) s += "(";
        for (std::size_t j = 0; j < clause.size(); ++j) {
            if (j) s += " & ";
            s += to_string(clause[j], names);
        }
        if (paren) s += ")";
    }
    return s;
}

std::string to_string(const PositiveDNF& d) {
    const auto names = default_names(std::max(d.arity(), d.max_var()));
    return to_string(d, names);
}

// ---------------------------------------------------------------- evaluation

namespace {

class Evaluator {
public:
    Evaluator(const Formula& root, std::span<const Rational> point) {
        root.collect_constants(constants_);
        std::size_t top = point.size();
        max_index(root, top);
        env_.assign(top, std::nullopt);
        for (std::size_t i = 0; i < point.size(); ++i) env_[i] = point[i];
    }

    bool eval(const Formula& f) {
        switch (f.kind()) {
            case Kind::Atomic: return atomic(f.atom());
            case Kind::True: return true;
            case Kind::False: return false;
            case Kind::Not: return !eval(f.child());
            case Kind::And: return eval(f.child(0)) && eval(f.child(1));
            case Kind::Or: return eval(f.child(0)) || eval(f.child(1));
            case Kind::Implies: return !eval(f.child(0)) || eval(f.child(1));
            case Kind::Exists:
            case Kind::Forall: {
                const bool want = f.kind() == Kind::Exists;
                auto saved = env_[f.bound_var()];
                bool result = !want;
                for (const auto& c : candidates()) {
                    env_[f.bound_var()] = c;
                    if (eval(f.child()) == want) {
                        result = want;
                        break;
                    }
                }
                env_[f.bound_var()] = std::move(saved);
                return result;
            }
        }
        return false;
    }

private:
    static void max_index(const Formula& f, std::size_t& top) {
        if (f.kind() == Kind::Atomic) {
            for (const Term* t : {&f.atom().lhs, &f.atom().rhs})
                if (t->is_var()) top = std::max(top, t->var_index() + 1);
        } else if (f.kind() == Kind::Exists || f.kind() == Kind::Forall) {
            top = std::max(top, f.bound_var() + 1);
        }
        for (std::size_t i = 0; i < f.child_count(); ++i) max_index(f.child(i), top);
    }

    const Rational& value(const Term& t) const {
        if (!t.is_var()) return t.value();
        const auto& v = env_[t.var_index()];
        if (!v) throw std::invalid_argument("no value assigned to variable #" + std::to_string(t.var_index()));
        return *v;
    }

    bool atomic(const Constraint& c) const {
        const auto& a = value(c.lhs);
        const auto& b = value(c.rhs);
        return c.rel == Rel::Less ? a < b : a == b;
    }

    std::vector<Rational> candidates() const {
        std::vector<Rational> vals = constants_;
        for (const auto& v : env_)
            if (v) vals.push_back(*v);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.empty()) return {Rational(0)};
        std::vector<Rational> out;
        out.reserve(2 * vals.size() + 1);
        out.push_back(vals.front() - 1);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out.push_back(midpoint(vals[i - 1], vals[i]));
            out.push_back(vals[i]);
        }
        out.push_back(vals.back() + 1);
        return out;
    }

    std::vector<Rational> constants_;
    std::vector<std::optional<Rational>> env_;
};

}  // namespace

bool eval_formula(const Formula& f, std::span<const Rational> point) {
    return Evaluator(f, point).eval(f);
}

bool eval_formula(const ParsedFormula& f, const std::map<std::string, Rational>& point) {
    std::vector<Rational> values(f.arity);
    for (std::size_t i = 0; i < f.arity; ++i) {
        const auto it = point.find(f.names[i]);
        if (it == point.end()) throw std::invalid_argument("no value assigned to variable '" + f.names[i] + "'");
        values[i] = it->second;
    }
    return eval_formula(f.formula, values);
}

// ---------------------------------------------------------------- DNF conversion

PositiveDNF detail::positive_dnf(const Formula& f, std::size_t arity, const QuantifierHandler& on_quantifier) {
    std::function<PositiveDNF(const Formula&, bool)> go = [&](const Formula& g, bool pos) -> PositiveDNF {
        switch (g.kind()) {
            case Kind::Atomic: {
                if (!pos) return negated_constraint(g.atom(), arity);
                std::vector<Clause> clauses;
                if (auto c = make_clause({g.atom()})) clauses.push_back(std::move(*c));
                return PositiveDNF(arity, std::move(clauses));
            }
            case Kind::True: return pos ? PositiveDNF::truth(arity) : PositiveDNF::falsity(arity);
            case Kind::False: return pos ? PositiveDNF::falsity(arity) : PositiveDNF::truth(arity);
            case Kind::Not: return go(g.child(), !pos);
            case Kind::And:
                return pos ? conjoin(go(g.child(0), true), go(g.child(1), true))
                           : disjoin(go(g.child(0), false), go(g.child(1), false));
            case Kind::Or:
                return pos ? disjoin(go(g.child(0), true), go(g.child(1), true))
                           : conjoin(go(g.child(0), false), go(g.child(1), false));
            case Kind::Implies:
                return pos ? disjoin(go(g.child(0), false), go(g.child(1), true))
                           : conjoin(go(g.child(0), true), go(g.child(1), false));
            case Kind::Exists:
            case Kind::Forall: return on_quantifier(g, pos).with_arity(arity);
        }
        return PositiveDNF::falsity(arity);
    };
    return go(f, true);
}

PositiveDNF to_positive_dnf(const Formula& f, std::size_t arity) {
    return detail::positive_dnf(f, arity, [](const Formula&, bool) -> PositiveDNF {
        throw std::invalid_argument("to_positive_dnf requires a quantifier-free formula");
    });
}

Formula to_formula(const PositiveDNF& d) {
    if (d.is_false()) return Formula::falsity();
    std::optional<Formula> out;
    for (const auto& clause : d.clauses()) {
        std::optional<Formula> conj;
        for (const auto& c : clause) {
            auto a = Formula::atomic(c.lhs, c.rel, c.rhs);
            conj = conj ? Formula::conjunction(*conj, a) : a;
        }
        const Formula cf = conj ? *conj : Formula::truth();
        out = out ? Formula::disjunction(*out, cf) : cf;
    }
    return *out;
}

}  // namespace dlo
