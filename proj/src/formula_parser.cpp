#include "dlo/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace dlo {

namespace {

enum class Tok {
    Ident, Number, Lt, Le, Gt, Ge, Eq, Neq, And, Or, Not, Arrow, Iff,
    LParen, RParen, Dot, Exists, Forall, True, False, End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_digit = [&](std::size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto emit = [&](Tok k, std::size_t len) {
            out.push_back({k, std::string(s.substr(start, len)), start});
            i = start + len;
        };
        auto next_is = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
        if (std::islower(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                                    std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            const auto word = s.substr(i, j - i);
            emit(word == "true" ? Tok::True : word == "false" ? Tok::False : Tok::Ident, j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && is_digit(i + 1))) {
            std::size_t j = i + 1;
            while (is_digit(j)) ++j;
            if (j < s.size() && s[j] == '/') {
                if (!is_digit(j + 1)) throw ParseError("expected denominator", j + 1);
                ++j;
                while (is_digit(j)) ++j;
            }
            emit(Tok::Number, j - i);
        } else if (next_is("<->")) {
            emit(Tok::Iff, 3);
        } else if (next_is("->")) {
            emit(Tok::Arrow, 2);
        } else if (next_is("<=")) {
            emit(Tok::Le, 2);
        } else if (next_is(">=")) {
            emit(Tok::Ge, 2);
        } else if (next_is("!=")) {
            emit(Tok::Neq, 2);
        } else {
            switch (c) {
                case '<': emit(Tok::Lt, 1); break;
                case '>': emit(Tok::Gt, 1); break;
                case '=': emit(Tok::Eq, 1); break;
                case '&': emit(Tok::And, 1); break;
                case '|': emit(Tok::Or, 1); break;
                case '!': emit(Tok::Not, 1); break;
                case '(': emit(Tok::LParen, 1); break;
                case ')': emit(Tok::RParen, 1); break;
                case '.': emit(Tok::Dot, 1); break;
                case 'E': emit(Tok::Exists, 1); break;
                case 'A': emit(Tok::Forall, 1); break;
                default: throw ParseError(std::string("unknown token '") + c + "'", i);
            }
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// Bound variables get provisional indices above this until the arity is known.
constexpr std::size_t kBoundBase = std::size_t{1} << 40;

class Parser {
public:
    Parser(std::string_view text, const std::optional<std::vector<std::string>>& order)
        : toks_(lex(text)), fixed_order_(order.has_value()) {
        if (order) {
            for (const auto& name : *order) {
                if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
                    throw ParseError("invalid variable name '" + name + "' in variable order", 0);
                if (free_index_.count(name)) throw ParseError("variable '" + name + "' listed twice", 0);
                free_index_[name] = free_names_.size();
                free_names_.push_back(name);
            }
        }
        for (const auto& t : toks_)
            if (t.kind == Tok::Ident) identifiers_.insert(t.text);
    }

    ParsedFormula run() {
        Formula f = formula();
        expect(Tok::End, "end of input");
        ParsedFormula out{Formula::truth(), {}, free_names_.size()};
        out.names = free_names_;
        std::unordered_set<std::string> taken(free_names_.begin(), free_names_.end());
        for (const auto& name : bound_names_) {
            std::string fresh = name;
            for (int k = 1; taken.count(fresh) || (fresh != name && identifiers_.count(fresh)); ++k)
                fresh = name + "_" + std::to_string(k);
            taken.insert(fresh);
            out.names.push_back(fresh);
        }
        out.formula = rebase(f, out.arity);
        return out;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + what +
                                 (peek().kind == Tok::End ? " but input ended" : " near '" + peek().text + "'"),
                             peek().pos);
        return toks_[pos_++];
    }

    Formula formula() {
        Formula f = implication();
        while (accept(Tok::Iff)) {
            Formula g = implication();
            f = Formula::conjunction(Formula::implication(f, g), Formula::implication(g, f));
        }
        return f;
    }
    Formula implication() {
        Formula f = disjunction();
        if (accept(Tok::Arrow)) return Formula::implication(f, implication());
        return f;
    }
    Formula disjunction() {
        Formula f = conjunction();
        while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
        return f;
    }
    Formula conjunction() {
        Formula f = unary();
        while (accept(Tok::And)) f = Formula::conjunction(f, unary());
        return f;
    }
    Formula unary() {
        if (accept(Tok::Not)) return Formula::negation(unary());
        if (peek().kind == Tok::Exists || peek().kind == Tok::Forall) {
            const bool exists = toks_[pos_++].kind == Tok::Exists;
            const std::string name = expect(Tok::Ident, "variable after quantifier").text;
            expect(Tok::Dot, "'.'");
            const std::size_t id = kBoundBase + bound_names_.size();
            bound_names_.push_back(name);
            scopes_.push_back({name, id});
            Formula body = unary();
            scopes_.pop_back();
            return exists ? Formula::exists(id, body) : Formula::forall(id, body);
        }
        if (accept(Tok::LParen)) {
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (accept(Tok::True)) return Formula::truth();
        if (accept(Tok::False)) return Formula::falsity();
        return atom();
    }
    Formula atom() {
        Term lhs = term();
        const Token op = toks_[pos_];
        switch (op.kind) {
            case Tok::Lt: case Tok::Le: case Tok::Gt: case Tok::Ge: case Tok::Eq: case Tok::Neq: ++pos_; break;
            default: throw ParseError("expected comparison operator near '" + op.text + "'", op.pos);
        }
        Term rhs = term();
        switch (op.kind) {
            case Tok::Lt: return Formula::atomic(lhs, Rel::Less, rhs);
            case Tok::Gt: return Formula::atomic(rhs, Rel::Less, lhs);
            case Tok::Eq: return Formula::atomic(lhs, Rel::Equal, rhs);
            case Tok::Neq: return Formula::negation(Formula::atomic(lhs, Rel::Equal, rhs));
            case Tok::Le:
                return Formula::disjunction(Formula::atomic(lhs, Rel::Less, rhs), Formula::atomic(lhs, Rel::Equal, rhs));
            default:
                return Formula::disjunction(Formula::atomic(rhs, Rel::Less, lhs), Formula::atomic(lhs, Rel::Equal, rhs));
        }
    }
    Term term() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            ++pos_;
            try {
                return Term::constant(parse_rational(t.text));
            } catch (const ParseError& e) {
                throw ParseError("malformed rational '" + t.text + "'", t.pos);
            }
        }
        if (t.kind == Tok::Ident) {
            ++pos_;
            for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
                if (it->first == t.text) return Term::var(it->second);
            auto found = free_index_.find(t.text);
            if (found != free_index_.end()) return Term::var(found->second);
            if (fixed_order_) throw ParseError("variable '" + t.text + "' is not in the variable order", t.pos);
            free_index_[t.text] = free_names_.size();
            free_names_.push_back(t.text);
            return Term::var(free_names_.size() - 1);
        }
        throw ParseError(t.kind == Tok::End ? "expected term but input ended" : "expected term near '" + t.text + "'",
                         t.pos);
    }

    static Term rebase_term(const Term& t, std::size_t arity) {
        if (t.is_var() && t.var_index() >= kBoundBase) return Term::var(t.var_index() - kBoundBase + arity);
        return t;
    }
    static Formula rebase(const Formula& f, std::size_t arity) {
        switch (f.kind()) {
            case Kind::Atomic:
                return Formula::atomic(rebase_term(f.atom().lhs, arity), f.atom().rel, rebase_term(f.atom().rhs, arity));
            case Kind::True:
            case Kind::False: return f;
            case Kind::Not: return Formula::negation(rebase(f.child(), arity));
            case Kind::And: return Formula::conjunction(rebase(f.child(0), arity), rebase(f.child(1), arity));
            case Kind::Or: return Formula::disjunction(rebase(f.child(0), arity), rebase(f.child(1), arity));
            case Kind::Implies: return Formula::implication(rebase(f.child(0), arity), rebase(f.child(1), arity));
            case Kind::Exists: return Formula::exists(f.bound_var() - kBoundBase + arity, rebase(f.child(), arity));
            case Kind::Forall: return Formula::forall(f.bound_var() - kBoundBase + arity, rebase(f.child(), arity));
        }
        return f;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool fixed_order_;
    std::unordered_map<std::string, std::size_t> free_index_;
    std::vector<std::string> free_names_;
    std::vector<std::string> bound_names_;
    std::vector<std::pair<std::string, std::size_t>> scopes_;
    std::unordered_set<std::string> identifiers_;
};

}  // namespace

ParsedFormula parse_formula(std::string_view text, const std::optional<std::vector<std::string>>& variable_order) {
    return Parser(text, variable_order).run();
}

}  // namespace dlo
