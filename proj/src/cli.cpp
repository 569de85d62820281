#include "dlo/cli.hpp"

#include "dlo/characteristic.hpp"
#include "dlo/genring.hpp"
#include "dlo/grothendieck.hpp"
#include "dlo/io.hpp"
#include "dlo/oracle.hpp"
#include "dlo/qe.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace dlo::cli {

namespace {

struct Common {
    bool json = false;
    std::string params;
    std::string vars;
    std::uint64_t seed = 1;
    std::size_t budget = 3;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty item in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

ParamSet parse_params(const std::string& text) {
    std::vector<Rational> values;
    if (!text.empty())
        for (const auto& item : split_list(text)) values.push_back(parse_rational(item));
    return ParamSet(std::move(values));
}

std::optional<std::vector<std::string>> parse_vars(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return split_list(text);
}

struct Definable {
    ParsedFormula parsed;
    PositiveDNF dnf;
    std::size_t arity() const { return parsed.arity; }
    std::vector<std::string> free_names() const {
        return {parsed.names.begin(), parsed.names.begin() + static_cast<std::ptrdiff_t>(parsed.arity)};
    }
};

Definable definable(const std::string& text, const Common& c) {
    ParsedFormula p = parse_formula(text, parse_vars(c.vars));
    PositiveDNF d = qe::eliminate_quantifiers(p);
    return {std::move(p), std::move(d)};
}

// Expressions over K0: chi(<formula>), X(a;n), integers, + - * and
// parentheses.
class K0Parser {
public:
    K0Parser(std::string_view text, const Common& common) : text_(text), common_(common) {}

    K0Element run() {
        K0Element e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
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

    bool accept_word(std::string_view w) {
        skip();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    // Text up to the parenthesis closing one already consumed.
    std::string_view balanced() {
        const std::size_t start = pos_;
        int depth = 1;
        for (; pos_ < text_.size(); ++pos_) {
            if (text_[pos_] == '(') ++depth;
            if (text_[pos_] == ')' && --depth == 0) return text_.substr(start, pos_++ - start);
        }
        fail("unbalanced parentheses");
    }

    K0Element expr() {
        K0Element e = term();
        while (true) {
            if (accept('+'))
                e = e + term();
            else if (accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    K0Element term() {
        K0Element e = factor();
        while (accept('*')) e = e * factor();
        return e;
    }

    K0Element factor() {
        if (accept('-')) return -factor();
        if (accept('(')) {
            K0Element e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        const std::size_t start = pos_;
        if (accept_word("chi(")) {
            const std::string body(balanced());
            try {
                const Definable d = definable(body, common_);
                return chi(d.dnf, d.arity(), d.parsed.params());
            } catch (const ParseError& e) {
                throw ParseError(std::string("in chi(...): ") + e.what(), start + 4 + e.position());
            }
        }
        if (accept_word("X(")) {
            pos_ = start;
            skip();
            const std::size_t gen_start = pos_;
            accept_word("X(");
            balanced();
            GenPoly g;
            try {
                g = parse_genpoly(text_.substr(gen_start, pos_ - gen_start));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), gen_start + e.position());
            }
            return zeta(g, g.params());
        }
        skip();
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected chi(...), X(a;n), an integer or '('");
        return Characteristic::constant(Integer(std::string(text_.substr(digits, pos_ - digits))));
    }

    std::string_view text_;
    const Common& common_;
    std::size_t pos_ = 0;
};

K0Element k0_expr(const std::string& text, const Common& c) {
    K0Element e = K0Parser(text, c).run();
    const ParamSet extra = parse_params(c.params);
    if (!extra.empty()) e = refine(e, e.params().unite(extra));
    return e;
}

void print(std::ostream& out, const Common& c, const Json& j, const std::string& text) {
    if (c.json)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
}

Json k0_json(const K0Element& e) {
    Json j = characteristic_to_json(e);
    j["normal_form"] = to_string(zeta_inv(e));
    return j;
}

std::string k0_text(const K0Element& e) { return to_string(e) + "\n" + to_string(zeta_inv(e)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Definable sets in dense linear orders and their Grothendieck ring", "dlo-cli"};
    app.require_subcommand(1);
    Common c;
    std::function<int()> action;

    auto common = [&](CLI::App* sub, bool with_params, bool with_vars) {
        sub->add_flag("--json", c.json, "Emit JSON");
        if (with_params) sub->add_option("--params", c.params, "Comma-separated rational parameters, e.g. \"1,0\"");
        if (with_vars) sub->add_option("--vars", c.vars, "Comma-separated free variable order, e.g. \"x,y\"");
    };

    std::string formula, f1, f2, expr, lhs, rhs, poly, chi_json;
    std::size_t n = 1, k = 1, l = 1, count = 200, max = 6;
    std::string a = "0", b = "1", cc = "1/2";
    double density = 0.5;

    // parse
    auto* parse = app.add_subcommand("parse", "Parse a formula and print it back");
    common(parse, false, true);
    parse->add_option("formula,--formula", formula, "Formula")->required();
    parse->callback([&] {
        action = [&] {
            const ParsedFormula p = parse_formula(formula, parse_vars(c.vars));
            const auto names = std::vector<std::string>(p.names.begin(), p.names.begin() + static_cast<long>(p.arity));
            Json j{{"formula", to_string(p)},
                   {"vars", names},
                   {"params", params_to_json(p.params())},
                   {"quantifier_depth", p.formula.quantifier_depth()}};
            print(out, c, j, to_string(p));
            return kHolds;
        };
    });

    // qe
    auto* qe_cmd = app.add_subcommand("qe", "Eliminate quantifiers");
    common(qe_cmd, false, true);
    qe_cmd->add_option("formula,--formula", formula, "Formula")->required();
    qe_cmd->callback([&] {
        action = [&] {
            const Definable d = definable(formula, c);
            const auto names = d.free_names();
            const std::string text = to_string(d.dnf, names);
            print(out, c, Json{{"dnf", text}, {"clauses", d.dnf.clauses().size()}, {"vars", names}}, text);
            return kHolds;
        };
    });

    // split
    auto* split_cmd = app.add_subcommand("split", "List the atoms of a definable set");
    common(split_cmd, true, true);
    split_cmd->add_option("formula,--formula", formula, "Formula")->required();
    split_cmd->callback([&] {
        action = [&] {
            const Definable d = definable(formula, c);
            const ParamSet ps = d.parsed.params().unite(parse_params(c.params));
            const auto names = d.free_names();
            const auto atoms = split(d.dnf, d.arity(), ps);
            Json j{{"params", params_to_json(ps)}, {"atoms", Json::array()}};
            std::string text;
            for (const auto& atom : atoms) {
                j["atoms"].push_back(atom_to_json(atom, names));
                text += atom.to_string(names) + "  " + to_string(atom.gaps()) + "\n";
            }
            text += std::to_string(atoms.size()) + " atoms over " + to_string(ps);
            print(out, c, j, text);
            return kHolds;
        };
    });

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "Global characteristic of a definable set");
    common(chi_cmd, true, true);
    chi_cmd->add_option("formula,--formula", formula, "Formula")->required();
    chi_cmd->callback([&] {
        action = [&] {
            const Definable d = definable(formula, c);
            const ParamSet ps = d.parsed.params().unite(parse_params(c.params));
            const Characteristic ch = chi(d.dnf, d.arity(), ps);
            print(out, c, characteristic_to_json(ch), to_string(ch));
            return kHolds;
        };
    });

    // equiv
    auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether a definable bijection exists");
    common(equiv_cmd, false, true);
    equiv_cmd->add_option("--f1", f1, "First formula")->required();
    equiv_cmd->add_option("--f2", f2, "Second formula")->required();
    equiv_cmd->callback([&] {
        action = [&] {
            const Definable d1 = definable(f1, c), d2 = definable(f2, c);
            const auto r = equivalent(d1.dnf, d1.arity(), d2.dnf, d2.arity());
            std::string witness = "[";
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                witness += (i ? "," : "") + to_string(r.witness[i]);
            witness += "]";
            const std::string verdict = r.equivalent ? "equivalent" : "not equivalent";
            print(out, c, Json{{"equivalent", r.equivalent}, {"witness", params_to_json(r.witness)}},
                  verdict + "\nwitness params: " + witness);
            return r.equivalent ? kHolds : kFails;
        };
    });

    // k0
    auto* k0 = app.add_subcommand("k0", "Arithmetic in the Grothendieck ring");
    k0->require_subcommand(1);
    auto binary = [&](const char* name, const char* help, bool is_mul) {
        auto* sub = k0->add_subcommand(name, help);
        common(sub, true, true);
        sub->add_option("--lhs", lhs, "Left operand")->required();
        sub->add_option("--rhs", rhs, "Right operand")->required();
        sub->callback([&, is_mul] {
            action = [&, is_mul] {
                const K0Element x = k0_expr(lhs, c), y = k0_expr(rhs, c);
                const K0Element r = is_mul ? x * y : x + y;
                print(out, c, k0_json(r), k0_text(r));
                return kHolds;
            };
        });
    };
    binary("add", "Sum of two classes", false);
    binary("mul", "Product of two classes", true);
    auto* neg_cmd = k0->add_subcommand("neg", "Additive inverse");
    common(neg_cmd, true, true);
    neg_cmd->add_option("--expr", expr, "Expression")->required();
    neg_cmd->callback([&] {
        action = [&] {
            const K0Element r = -k0_expr(expr, c);
            print(out, c, k0_json(r), k0_text(r));
            return kHolds;
        };
    });
    auto* nf_cmd = k0->add_subcommand("normalform", "Normal-form generator polynomial of a class");
    common(nf_cmd, true, true);
    nf_cmd->add_option("--expr", expr, "Expression")->required();
    nf_cmd->callback([&] {
        action = [&] {
            const GenPoly p = zeta_inv(k0_expr(expr, c));
            print(out, c, genpoly_to_json(p), to_string(p));
            return kHolds;
        };
    });
    auto* eff_cmd = k0->add_subcommand("effective", "Search refinements making all coefficients non-negative");
    common(eff_cmd, true, true);
    eff_cmd->add_option("--expr", expr, "Expression")->required();
    eff_cmd->add_option("--budget", c.budget, "Maximum number of fresh parameters");
    eff_cmd->callback([&] {
        action = [&] {
            const K0Element e = k0_expr(expr, c);
            const auto r = is_effective(e, c.budget);
            Json j{{"effective", r.effective}, {"budget", c.budget}};
            std::string text = r.effective ? "effective" : "not effective within budget " + std::to_string(c.budget);
            if (r.effective) {
                j["witness"] = characteristic_to_json(refine(e, r.witness));
                text += "\n" + to_string(refine(e, r.witness));
            }
            print(out, c, j, text);
            return r.effective ? kHolds : kFails;
        };
    });

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "Class of a generator polynomial");
    common(zeta_cmd, true, false);
    zeta_cmd->add_option("poly,--poly", poly, "Polynomial, e.g. \"X(0;1) - X(1;1) - 1\"")->required();
    zeta_cmd->callback([&] {
        action = [&] {
            const GenPoly p = parse_genpoly(poly);
            const K0Element e = zeta(p, p.params().unite(parse_params(c.params)));
            print(out, c, characteristic_to_json(e), to_string(e));
            return kHolds;
        };
    });

    // zeta-inv
    auto* zinv_cmd = app.add_subcommand("zeta-inv", "Normal form of a class given as JSON or as an expression");
    common(zinv_cmd, true, true);
    auto* from_json = zinv_cmd->add_option("--chi", chi_json, "Characteristic JSON");
    zinv_cmd->add_option("--expr", expr, "Expression")->excludes(from_json);
    zinv_cmd->callback([&] {
        action = [&] {
            if (chi_json.empty() && expr.empty()) throw CLI::RequiredError("--chi or --expr");
            const K0Element e = chi_json.empty() ? k0_expr(expr, c) : characteristic_from_json(Json::parse(chi_json));
            const GenPoly p = zeta_inv(e);
            print(out, c, genpoly_to_json(p), to_string(p));
            return kHolds;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check identities and theorems on instances");
    verify->require_subcommand(1);

    auto* conv = verify->add_subcommand("convolution", "nf(b,a) split at an interior point c");
    common(conv, false, false);
    conv->add_option("--n", n)->required();
    conv->add_option("--a", a)->required();
    conv->add_option("--c", cc)->required();
    conv->add_option("--b", b)->required();
    conv->callback([&] {
        action = [&] {
            const auto r = verify_convolution(static_cast<std::uint32_t>(n), parse_rational(a), parse_rational(cc),
                                              parse_rational(b));
            const std::string identity = "nf(b,a) = sum_{i<=n} if(b,c)*(n-i)f(c,a) + sum_{i<n} if(b,c)*(n-1-i)f(c,a)"
                                         " with n=" + std::to_string(n) + ", a=" + a + ", c=" + cc + ", b=" + b;
            print(out, c, Json{{"identity", identity}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}},
                  identity + "\nlhs: " + r.lhs + "\nrhs: " + r.rhs + "\n" + (r.holds ? "holds" : "FAILS"));
            return r.holds ? kHolds : kFails;
        };
    });

    auto* fact = verify->add_subcommand("factorial", "n! nf(b,a) = prod_{i<n} (1f(b,a) - i)");
    common(fact, false, false);
    fact->add_option("--n", n)->required();
    fact->add_option("--a", a)->required();
    fact->add_option("--b", b)->required();
    fact->callback([&] {
        action = [&] {
            const auto r = verify_factorial(static_cast<std::uint32_t>(n), parse_rational(a), parse_rational(b));
            const std::string identity = "n! nf(b,a) = prod_{i<n} (1f(b,a) - i) with n=" + std::to_string(n) +
                                         ", a=" + a + ", b=" + b;
            print(out, c, Json{{"identity", identity}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}},
                  identity + "\nlhs: " + r.lhs + "\nrhs: " + r.rhs + "\n" + (r.holds ? "holds" : "FAILS"));
            return r.holds ? kHolds : kFails;
        };
    });

    auto* iprime = verify->add_subcommand("iprime", "Factorial-relation congruence for X_k X_l");
    common(iprime, false, false);
    iprime->add_option("--k", k)->required();
    iprime->add_option("--l", l)->required();
    iprime->add_option("--a", a, "Base (rational or -inf)");
    iprime->callback([&] {
        action = [&] {
            const auto ku = static_cast<std::uint32_t>(k), lu = static_cast<std::uint32_t>(l);
            const ExtendedRational base = parse_extended_rational(a);
            const GenPoly d = iprime_congruence(ku, lu, base);
            const bool holds = verify_iprime_congruence(ku, lu, base);
            const Integer mult = factorial(lu);
            const std::string sub = to_string(substitute_falling(d));
            print(out, c,
                  Json{{"congruence", to_string(d)}, {"substituted", sub}, {"multiplier", integer_to_json(mult)},
                       {"holds", holds}},
                  "congruence: " + to_string(d) + "\nafter substitution: " + sub + "\nmultiplier: " +
                      mult.get_str() + "\n" + (holds ? "holds" : "FAILS"));
            return holds ? kHolds : kFails;
        };
    });

    auto* php = verify->add_subcommand("php", "A proper subset has a different class");
    common(php, false, true);
    php->add_option("--f1", f1, "Subset")->required();
    php->add_option("--f2", f2, "Superset")->required();
    php->callback([&] {
        action = [&] {
            const Definable d1 = definable(f1, c), d2 = definable(f2, c);
            if (d1.arity() != d2.arity()) throw std::invalid_argument("php: formulas have different dimensions");
            const bool differ = php_check(d1.dnf, d2.dnf, d1.arity());
            print(out, c, Json{{"classes_differ", differ}}, differ ? "classes differ" : "classes EQUAL");
            return differ ? kHolds : kFails;
        };
    });

    auto* cc1 = verify->add_subcommand("cc1", "Injection obstructions in both directions");
    common(cc1, false, true);
    cc1->add_option("--f1", f1)->required();
    cc1->add_option("--f2", f2)->required();
    cc1->callback([&] {
        action = [&] {
            const Definable d1 = definable(f1, c), d2 = definable(f2, c);
            const auto forward = no_injection_certificate(d1.dnf, d1.arity(), d2.dnf, d2.arity());
            const auto backward = no_injection_certificate(d2.dnf, d2.arity(), d1.dnf, d1.arity());
            auto show = [](const std::optional<NoInjectionCertificate>& cert) -> Json {
                if (!cert) return nullptr;
                return Json{{"params", params_to_json(cert->params)}, {"gap", cert->gap}, {"interval", cert->describe()}};
            };
            const bool both = forward && backward;
            std::string text = "f1 -> f2: " + (forward ? "no injection, gap " + forward->describe() : "inconclusive");
            text += "\nf2 -> f1: " + (backward ? "no injection, gap " + backward->describe() : "inconclusive");
            text += both ? "\nneither set injects into the other" : "\nno two-sided obstruction";
            print(out, c, Json{{"forward", show(forward)}, {"backward", show(backward)}, {"both", both}}, text);
            return both ? kHolds : kFails;
        };
    });

    auto* canc = verify->add_subcommand("cancellativity", "a + c = b + c implies a = b on random triples");
    common(canc, false, false);
    canc->add_option("--seed", c.seed);
    canc->add_option("--count", count);
    canc->callback([&] {
        action = [&] {
            std::mt19937_64 rng(c.seed);
            std::size_t premises = 0, violations = 0;
            for (std::size_t t = 0; t < count; ++t) {
                const ParamSet ps = oracle::random_params(rng, oracle::below(rng, 3));
                const auto x = oracle::random_characteristic(rng, ps, 3, 3, 0, 2);
                const auto y = oracle::below(rng, 2) ? x : oracle::random_characteristic(rng, ps, 3, 3, 0, 2);
                const auto z = oracle::random_characteristic(rng, oracle::random_params(rng, 2), 3, 3, 0, 2);
                if (x + z == y + z) {
                    ++premises;
                    if (!(x == y)) ++violations;
                }
            }
            print(out, c, Json{{"triples", count}, {"premises", premises}, {"violations", violations}},
                  std::to_string(count) + " triples, " + std::to_string(premises) + " with a+c=b+c, " +
                      std::to_string(violations) + " violations");
            return violations == 0 ? kHolds : kFails;
        };
    });

    auto* del = verify->add_subcommand("delannoy", "Same-gap product coefficients against interleavings");
    common(del, false, false);
    del->add_option("--max", max, "Largest chain length");
    del->callback([&] {
        action = [&] {
            if (max > 6) throw std::invalid_argument("delannoy: --max is at most 6");
            std::size_t mismatches = 0;
            Json rows = Json::array();
            for (std::uint32_t g = 1; g <= max; ++g)
                for (std::uint32_t h = g; h <= max; ++h) {
                    Integer total = 0;
                    std::map<std::uint32_t, Integer> formula_side;
                    for (const auto& [len, coeff] : chain_product(g, h)) {
                        total += coeff;
                        formula_side[len] = coeff;
                    }
                    const bool ok = total == oracle::delannoy(g, h) && formula_side == oracle::interleavings(g, h);
                    if (!ok) ++mismatches;
                    rows.push_back({{"g", g}, {"h", h}, {"total", integer_to_json(total)}, {"ok", ok}});
                }
            print(out, c, Json{{"pairs", rows}, {"mismatches", mismatches}},
                  std::to_string(rows.size()) + " pairs checked, " + std::to_string(mismatches) + " mismatches");
            return mismatches == 0 ? kHolds : kFails;
        };
    });

    // random-set
    auto* rnd = app.add_subcommand("random-set", "Seeded random union of atoms");
    common(rnd, true, false);
    rnd->add_option("--n", n, "Dimension");
    rnd->add_option("--density", density, "Probability of keeping each atom")->check(CLI::Range(0.0, 1.0));
    rnd->add_option("--seed", c.seed);
    rnd->callback([&] {
        action = [&] {
            const ParamSet ps = parse_params(c.params);
            const PositiveDNF d = oracle::random_definable_set(c.seed, n, ps, density);
            const std::string text = to_string(d);
            print(out, c, Json{{"dnf", text}, {"atoms", d.clauses().size()}, {"chi", characteristic_to_json(chi(d, n, ps))}},
                  text);
            return kHolds;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return action ? action() : kUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kHolds : kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << "\n";
        return kFails;
    }
}

}  // namespace dlo::cli
