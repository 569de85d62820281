#include "dlo/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlo {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Json params_to_json(const ParamSet& p) {
    Json out = Json::array();
    for (const auto& v : p.values()) out.push_back(to_string(v));
    return out;
}

ParamSet params_from_json(const Json& j) {
    std::vector<Rational> values;
    for (const auto& v : j) values.push_back(parse_rational(v.get<std::string>()));
    return ParamSet(std::move(values));
}

Json characteristic_to_json(const Characteristic& c) {
    std::vector<std::pair<GapVector, Integer>> colors(c.coeffs().begin(), c.coeffs().end());
    std::sort(colors.begin(), colors.end(), [](const auto& a, const auto& b) { return leads(a.first, b.first); });
    Json out;
    out["params"] = params_to_json(c.params());
    out["colors"] = Json::array();
    for (const auto& [g, coeff] : colors) out["colors"].push_back({{"gaps", g.counts}, {"coeff", integer_to_json(coeff)}});
    return out;
}

Characteristic characteristic_from_json(const Json& j) {
    Characteristic c(params_from_json(j.at("params")));
    for (const auto& color : j.at("colors"))
        c.add_term(GapVector{color.at("gaps").get<std::vector<std::uint32_t>>()}, integer_from_json(color.at("coeff")));
    return c;
}

Json atom_to_json(const Atom& a, std::span<const std::string> names) {
    Json sample = Json::array();
    for (const auto& v : a.sample_point()) sample.push_back(to_string(v));
    return {{"formula", a.to_string(names)},
            {"gaps", a.gaps().counts},
            {"height", a.height()},
            {"sample", sample}};
}

Json genpoly_to_json(const GenPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json factors = Json::array();
        for (const auto& [g, e] : m) factors.push_back({{"base", to_string(g.base)}, {"index", g.index}, {"exp", e}});
        terms.push_back({{"coeff", integer_to_json(c)}, {"factors", factors}});
    }
    return {{"text", to_string(p)}, {"terms", terms}};
}

std::string to_string(const Characteristic& c) {
    std::vector<std::pair<GapVector, Integer>> colors(c.coeffs().begin(), c.coeffs().end());
    std::sort(colors.begin(), colors.end(), [](const auto& a, const auto& b) { return leads(a.first, b.first); });
    std::string out = "{";
    for (const auto& [g, coeff] : colors) {
        if (out.size() > 1) out += ", ";
        out += to_string(g) + ":" + coeff.get_str();
    }
    return out + "} over " + to_string(c.params());
}

}  // namespace dlo
