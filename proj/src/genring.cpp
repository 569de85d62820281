#include "dlo/genring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dlo {

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.index <=> b.index;
}

GenPoly::GenPoly(const Integer& c) { add_term({}, c); }

GenPoly::GenPoly(const Generator& g) {
    if (g.index == 0) throw std::invalid_argument("generator index must be positive");
    add_term({{g, 1}}, 1);
}

GenPoly GenPoly::monomial(const Monomial& m, const Integer& c) {
    GenPoly p;
    p.add_term(m, c);
    return p;
}

void GenPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool GenPoly::is_normal_form() const {
    for (const auto& [m, c] : terms_) {
        const Generator* prev = nullptr;
        for (const auto& [g, e] : m) {
            if (e != 1 || (prev && prev->base == g.base)) return false;
            prev = &g;
        }
    }
    return true;
}

ParamSet GenPoly::params() const {
    std::vector<Rational> values;
    for (const auto& [m, c] : terms_)
        for (const auto& [g, e] : m)
            if (!g.base.is_minus_infinity()) values.push_back(g.base.value());
    return ParamSet(std::move(values));
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GenPoly& GenPoly::operator*=(const GenPoly& o) {
    GenPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(monomial_product(m1, m2), c1 * c2);
    *this = std::move(out);
    return *this;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [g, e] : b) out[g] += e;
    return out;
}

std::uint64_t degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (const auto& [g, e] : m) d += std::uint64_t{g.index} * e;
    return d;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::map<ExtendedRational, std::uint64_t> base_degrees(const Monomial& m) {
    std::map<ExtendedRational, std::uint64_t> out;
    for (const auto& [g, e] : m) out[g.base] += std::uint64_t{g.index} * e;
    return out;
}

bool prints_before(const Monomial& a, const Monomial& b) {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da > db;
    const auto ba = base_degrees(a), bb = base_degrees(b);
    auto ia = ba.begin(), ib = bb.begin();
    while (ia != ba.end() || ib != bb.end()) {
        if (ib == bb.end() || (ia != ba.end() && ia->first < ib->first)) return true;
        if (ia == ba.end() || ib->first < ia->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return a < b;
}

std::string monomial_text(const Monomial& m) {
    std::string out;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += to_string(it->first);
        if (it->second != 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

}  // namespace

std::string to_string(const Generator& g) {
    return "X(" + to_string(g.base) + ";" + std::to_string(g.index) + ")";
}

std::string to_string(const GenPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Integer>*> order;
    for (const auto& t : p.terms()) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return prints_before(x->first, y->first); });
    std::string out;
    for (const auto* t : order) {
        const bool negative = t->second < 0;
        const Integer magnitude = abs(t->second);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t->first.empty()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + "*";
            out += monomial_text(t->first);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    GenPoly run() {
        GenPoly p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::uint64_t natural() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        if (pos_ - start > 9) {
            pos_ = start;
            fail("number too large");
        }
        return std::stoull(std::string(text_.substr(start, pos_ - start)));
    }

    GenPoly expr() {
        GenPoly p = term();
        while (true) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    GenPoly term() {
        GenPoly p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    GenPoly factor() {
        if (accept('-')) return -factor();
        GenPoly base = primary();
        if (accept('^')) {
            const auto e = natural();
            GenPoly out(Integer(1));
            for (std::uint64_t i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    GenPoly primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GenPoly p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return GenPoly(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == 'X') {
            ++pos_;
            expect('(');
            skip();
            const std::size_t start = pos_;
            const std::size_t semi = text_.find(';', pos_);
            if (semi == std::string_view::npos) fail("expected ';'");
            std::string_view base_text = text_.substr(start, semi - start);
            while (!base_text.empty() && std::isspace(static_cast<unsigned char>(base_text.back())))
                base_text.remove_suffix(1);
            ExtendedRational base;
            try {
                base = parse_extended_rational(base_text);
            } catch (const ParseError& e) {
                throw ParseError("malformed generator base", start + e.position());
            }
            pos_ = semi + 1;
            const auto index = natural();
            if (index == 0) fail("generator index must be positive");
            expect(')');
            return GenPoly(Generator{base, static_cast<std::uint32_t>(index)});
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GenPoly parse_genpoly(std::string_view text) { return PolyParser(text).run(); }

// ---------------------------------------------------------------------------
// Reduction modulo I

namespace {

// Product of chains of the given lengths above a single base, as a linear
// combination of chain lengths.
std::map<std::uint32_t, Integer> merge_chains(std::vector<std::uint32_t> lengths, std::mt19937_64* rng) {
    if (rng) std::shuffle(lengths.begin(), lengths.end(), *rng);
    std::map<std::uint32_t, Integer> acc{{lengths.front(), 1}};
    for (std::size_t j = 1; j < lengths.size(); ++j) {
        std::map<std::uint32_t, Integer> next;
        for (const auto& [k, c] : acc)
            for (const auto& [len, ways] : chain_product(k, lengths[j])) next[len] += c * ways;
        acc = std::move(next);
    }
    return acc;
}

GenPoly reduce_monomial(const Monomial& m, std::mt19937_64* rng) {
    std::map<ExtendedRational, std::vector<std::uint32_t>> by_base;
    for (const auto& [g, e] : m)
        for (std::uint32_t i = 0; i < e; ++i) by_base[g.base].push_back(g.index);
    GenPoly out(Integer(1));
    for (auto& [base, lengths] : by_base) {
        GenPoly factor;
        for (const auto& [len, c] : merge_chains(std::move(lengths), rng))
            factor.add_term({{Generator{base, len}, 1}}, c);
        out *= factor;
    }
    return out;
}

}  // namespace

GenPoly reduce_mod_I(const GenPoly& p, std::mt19937_64* rng) {
    GenPoly out;
    for (const auto& [m, c] : p.terms()) {
        GenPoly r = reduce_monomial(m, rng);
        for (const auto& [rm, rc] : r.terms()) out.add_term(rm, rc * c);
    }
    return out;
}

GenPoly ideal_generator(const ExtendedRational& a, std::uint32_t k, std::uint32_t l) {
    if (k == 0 || l == 0) throw std::invalid_argument("generator index must be positive");
    if (k < l) std::swap(k, l);
    GenPoly p = GenPoly(Generator{a, k}) * GenPoly(Generator{a, l});
    for (const auto& [len, c] : chain_product(l, k)) p.add_term({{Generator{a, len}, 1}}, -c);
    return p;
}

namespace {

GenPoly falling_product(const ExtendedRational& a, std::uint32_t l) {
    GenPoly p(Integer(1));
    for (std::uint32_t i = 0; i < l; ++i) p *= GenPoly(Generator{a, 1}) - GenPoly(Integer(i));
    return p;
}

}  // namespace

GenPoly iprime_generator(const ExtendedRational& a, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("generator index must be positive");
    return GenPoly(factorial(k)) * GenPoly(Generator{a, k}) - falling_product(a, k);
}

// ---------------------------------------------------------------------------
// zeta and its inverse

K0Element zeta(const GenPoly& p, const ParamSet& params) {
    std::map<Generator, K0Element> images;
    auto image = [&](const Generator& g) -> const K0Element& {
        auto it = images.find(g);
        if (it != images.end()) return it->second;
        K0Element chain;
        if (g.base.is_minus_infinity()) {
            chain = Characteristic::color(ParamSet{}, GapVector{{g.index}});
        } else {
            if (!params.contains(g.base.value()))
                throw std::invalid_argument("zeta: parameter " + to_string(g.base) + " not in " + to_string(params));
            chain = Characteristic::color(ParamSet({g.base.value()}), GapVector{{g.index, 0}});
        }
        return images.emplace(g, refine(chain, params)).first->second;
    };
    K0Element out(params);
    for (const auto& [m, c] : p.terms()) {
        K0Element term = Characteristic::constant(c, params);
        for (const auto& [g, e] : m)
            for (std::uint32_t i = 0; i < e; ++i) term = mul(term, image(g));
        out = add(out, term);
    }
    return out;
}

Monomial monomial_of(const ParamSet& params, const GapVector& gaps) {
    if (gaps.size() != params.gap_count()) throw std::invalid_argument("monomial_of: gap vector length mismatch");
    Monomial m;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps.counts[i] > 0) m[Generator{params.gap_floor(i), gaps.counts[i]}] = 1;
    return m;
}

GenPoly zeta_inv(const K0Element& e) {
    constexpr std::size_t kMaxSteps = 1'000'000;
    GenPoly out;
    K0Element rest = e;
    for (std::size_t step = 0; !rest.is_zero(); ++step) {
        if (step == kMaxSteps) throw std::logic_error("zeta_inv: iteration cap reached");
        const auto [color, coeff] = *rest.leading();
        const Monomial m = monomial_of(rest.params(), color);
        const GenPoly term = GenPoly::monomial(m, coeff);
        rest = sub(rest, zeta(term, rest.params()));
        if (rest.coeff(color) != 0)
            throw std::logic_error("zeta_inv: leading color " + to_string(color) + " did not cancel");
        out += term;
    }
    return out;
}

GenPoly substitute_base(const GenPoly& p, const ExtendedRational& from, const ExtendedRational& to) {
    GenPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial moved;
        for (const auto& [g, e] : m) moved[g.base == from ? Generator{to, g.index} : g] += e;
        out.add_term(moved, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Falling-factorial substitution

namespace {

RationalPoly trimmed(std::vector<Rational> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return RationalPoly{std::move(c)};
}

}  // namespace

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return trimmed(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return trimmed(std::move(c));
}

RationalPoly falling_binomial(std::uint32_t j) {
    RationalPoly p{{Rational(1)}};
    for (std::uint32_t i = 0; i < j; ++i) p = p * RationalPoly{{Rational(-static_cast<long>(i)), Rational(1)}};
    const Rational scale(factorial(j));
    for (auto& c : p.coeffs) {
        c /= scale;
        c.canonicalize();
    }
    return p;
}

std::string to_string(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = p.coeffs.size(); d-- > 0;) {
        const Rational& c = p.coeffs[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (d == 0 || magnitude != 1) out += to_string(magnitude) + (d == 0 ? "" : "*");
        if (d >= 1) out += "x";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

RationalPoly substitute_falling(const GenPoly& p) {
    std::optional<ExtendedRational> base;
    std::map<std::uint32_t, RationalPoly> cache;
    RationalPoly out;
    for (const auto& [m, c] : p.terms()) {
        RationalPoly term{{Rational(c)}};
        for (const auto& [g, e] : m) {
            if (base && !(*base == g.base))
                throw std::invalid_argument("substitute_falling: generators with different bases");
            base = g.base;
            auto it = cache.find(g.index);
            if (it == cache.end()) it = cache.emplace(g.index, falling_binomial(g.index)).first;
            for (std::uint32_t i = 0; i < e; ++i) term = term * it->second;
        }
        out = out + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identities between chain classes

K0Element chain_between(const Rational& b, const Rational& a, std::uint32_t n) {
    if (!(a < b)) throw std::invalid_argument("chain_between: requires a < b");
    return Characteristic::color(ParamSet({b, a}), GapVector{{0, n, 0}});
}

namespace {

K0Element chain_or_one(const Rational& b, const Rational& a, std::uint32_t n) {
    return n == 0 ? Characteristic::constant(1, ParamSet({b, a})) : chain_between(b, a, n);
}

}  // namespace

IdentityCheck verify_convolution(std::uint32_t n, const Rational& a, const Rational& c, const Rational& b) {
    if (!(a < c && c < b)) throw std::invalid_argument("verify_convolution: requires a < c < b");
    const K0Element lhs = chain_or_one(b, a, n);
    K0Element rhs(ParamSet({b, c, a}));
    for (std::uint32_t i = 0; i <= n; ++i) rhs = rhs + chain_or_one(b, c, i) * chain_or_one(c, a, n - i);
    for (std::uint32_t i = 0; i + 1 <= n; ++i) rhs = rhs + chain_or_one(b, c, i) * chain_or_one(c, a, n - 1 - i);
    return {lhs == rhs, to_string(zeta_inv(lhs)), to_string(zeta_inv(rhs))};
}

IdentityCheck verify_factorial(std::uint32_t n, const Rational& a, const Rational& b) {
    if (n == 0) throw std::invalid_argument("verify_factorial: requires n >= 1");
    const K0Element lhs = scale(chain_between(b, a, n), factorial(n));
    const K0Element one = chain_between(b, a, 1);
    K0Element rhs = Characteristic::constant(1, one.params());
    for (std::uint32_t i = 0; i < n; ++i) rhs = rhs * (one - Characteristic::constant(i, one.params()));
    return {lhs == rhs, to_string(zeta_inv(lhs)), to_string(zeta_inv(rhs))};
}

GenPoly iprime_congruence(std::uint32_t k, std::uint32_t l, const ExtendedRational& a) {
    if (l == 0 || l > k) throw std::invalid_argument("iprime_congruence: requires 1 <= l <= k");
    GenPoly p = GenPoly(Generator{a, k}) * falling_product(a, l);
    GenPoly sum;
    for (std::uint32_t i = 0; i <= l; ++i)
        sum.add_term({{Generator{a, k + i}, 1}}, binomial(k + i, i) * binomial(k, l - i));
    return p - GenPoly(factorial(l)) * sum;
}

bool verify_iprime_congruence(std::uint32_t k, std::uint32_t l, const ExtendedRational& a) {
    const GenPoly d = iprime_congruence(k, l, a);
    if (!substitute_falling(d).is_zero()) return false;
    const GenPoly diff = d - GenPoly(factorial(l)) * ideal_generator(a, k, l);
    return diff == -(GenPoly(Generator{a, k}) * iprime_generator(a, l));
}

Integer corollary_multiple(std::uint32_t k, std::uint32_t l) {
    const ExtendedRational a(Rational(0));
    const Integer m = factorial(l);
    if (!substitute_falling(GenPoly(m) * ideal_generator(a, k, l)).is_zero())
        throw std::logic_error("corollary_multiple: multiple does not vanish under substitution");
    if (!verify_iprime_congruence(k, l, a))
        throw std::logic_error("corollary_multiple: congruence check failed");
    return m;
}

}  // namespace dlo
