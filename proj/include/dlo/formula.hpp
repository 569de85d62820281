#pragma once

// First-order formulas over the signature {<} with exact rational parameters,
// their evaluation over (Q,<), and positive-atomic DNF.

#include "dlo/params.hpp"
#include "dlo/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dlo {

struct Var {
    std::size_t index;
    friend auto operator<=>(const Var&, const Var&) = default;
};

/// A variable or a rational constant. Variables order before constants.
class Term {
public:
    Term() : v_(Var{0}) {}
    static Term var(std::size_t index) { return Term(Var{index}); }
    static Term constant(Rational value);

    bool is_var() const { return std::holds_alternative<Var>(v_); }
    std::size_t var_index() const { return std::get<Var>(v_).index; }
    const Rational& value() const { return std::get<Rational>(v_); }

    friend bool operator==(const Term& a, const Term& b);
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    explicit Term(Var v) : v_(v) {}
    explicit Term(Rational q) : v_(std::move(q)) {}
    std::variant<Var, Rational> v_;
};

enum class Rel { Less, Equal };

/// A positive atomic constraint `lhs rel rhs`. Equalities are stored with
/// lhs <= rhs in term order.
struct Constraint {
    Term lhs;
    Rel rel;
    Term rhs;

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend std::strong_ordering operator<=>(const Constraint& a, const Constraint& b);
};

/// Sorted, duplicate-free conjunction of constraints.
using Clause = std::vector<Constraint>;

enum class Truth { False, True, Open };

/// Normalizes one constraint. Ground or reflexive constraints are decided
/// (`False`/`True`); otherwise the canonical constraint is returned with `Open`.
std::pair<Truth, Constraint> normalize(Constraint c);

/// Builds a clause from arbitrary constraints; nullopt if it is unsatisfiable
/// over a dense order without endpoints.
std::optional<Clause> make_clause(std::vector<Constraint> constraints);

bool satisfiable(const Clause& clause);
bool holds(const Clause& clause, std::span<const Rational> point);

/// A disjunction of positive clauses over variables 0..arity-1.
/// No clauses = false; a single empty clause = true.
class PositiveDNF {
public:
    explicit PositiveDNF(std::size_t arity = 0) : arity_(arity) {}
    PositiveDNF(std::size_t arity, std::vector<Clause> clauses);

    static PositiveDNF truth(std::size_t arity);
    static PositiveDNF falsity(std::size_t arity) { return PositiveDNF(arity); }

    std::size_t arity() const { return arity_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    bool is_false() const { return clauses_.empty(); }
    bool is_true() const;

    /// Rational constants occurring anywhere in the clauses.
    ParamSet params() const;
    /// Highest variable index + 1 occurring in the clauses (0 if none).
    std::size_t max_var() const;

    bool holds(std::span<const Rational> point) const;

    PositiveDNF with_arity(std::size_t arity) const;

    friend bool operator==(const PositiveDNF&, const PositiveDNF&) = default;

private:
    std::size_t arity_;
    std::vector<Clause> clauses_;
};

PositiveDNF disjoin(const PositiveDNF& a, const PositiveDNF& b);
PositiveDNF conjoin(const PositiveDNF& a, const PositiveDNF& b);
PositiveDNF negate(const PositiveDNF& d);
/// Removes clauses that are supersets of another clause.
PositiveDNF drop_subsumed(const PositiveDNF& d);

enum class Kind { Atomic, True, False, Not, And, Or, Implies, Exists, Forall };

/// Immutable syntax tree. Copies share structure.
class Formula {
public:
    static Formula atomic(Term lhs, Rel rel, Term rhs);
    static Formula truth();
    static Formula falsity();
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula exists(std::size_t var, Formula body);
    static Formula forall(std::size_t var, Formula body);

    Kind kind() const;
    const Constraint& atom() const;
    std::size_t bound_var() const;
    const Formula& child(std::size_t i = 0) const;
    std::size_t child_count() const;

    bool quantifier_free() const;
    std::size_t quantifier_depth() const;
    void collect_constants(std::vector<Rational>& out) const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Result of parsing: the tree plus its variable table. Free variables take
/// indices 0..arity-1; every binder gets its own fresh index >= arity.
struct ParsedFormula {
    Formula formula;
    std::vector<std::string> names;
    std::size_t arity = 0;

    ParamSet params() const;
};

ParsedFormula parse_formula(std::string_view text,
                            const std::optional<std::vector<std::string>>& variable_order = std::nullopt);

std::string to_string(const Formula& f, std::span<const std::string> names);
std::string to_string(const ParsedFormula& f);
std::string to_string(const Constraint& c, std::span<const std::string> names);
std::string to_string(const PositiveDNF& d, std::span<const std::string> names);
/// Uses x1..xn for variable names.
std::string to_string(const PositiveDNF& d);
std::vector<std::string> default_names(std::size_t n);

/// Truth of `f` at `point` (indexed by variable). Quantifiers range over a
/// finite witness set: all constants of `f`, all assigned values, midpoints
/// of consecutive such values, and one value beyond each extreme.
bool eval_formula(const Formula& f, std::span<const Rational> point);
bool eval_formula(const ParsedFormula& f, const std::map<std::string, Rational>& point);

/// Positive DNF of a quantifier-free formula. Negated atoms are expanded by
/// trichotomy; unsatisfiable and subsumed clauses are dropped.
PositiveDNF to_positive_dnf(const Formula& f, std::size_t arity);

/// Renders a DNF back into a formula tree.
Formula to_formula(const PositiveDNF& d);

namespace detail {
/// Called for each quantified subformula during DNF conversion; `positive`
/// is false when the subformula occurs under an odd number of negations.
using QuantifierHandler = std::function<PositiveDNF(const Formula&, bool positive)>;
PositiveDNF positive_dnf(const Formula& f, std::size_t arity, const QuantifierHandler& on_quantifier);
}  // namespace detail

}  // namespace dlo
