#include "knotups/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace knotups {

using nlohmann::json;

namespace {

json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

BigInt integer_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>()).num();
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing field '") + name + "' in " + j.dump());
    }
    return j.at(name);
}

}  // namespace

json to_json(const Rational& r) { return {{"num", integer_json(r.num())}, {"den", integer_json(r.den())}}; }

json to_json(const ExtRational& r) {
    if (r.is_pos_inf()) return "inf";
    if (r.is_neg_inf()) return "-inf";
    return to_json(r.value());
}

json to_json(const PLFunction& f) {
    json pts = json::array();
    for (const auto& b : f.breakpoints()) pts.push_back({{"t", to_json(b.t)}, {"v", to_json(b.value)}});
    return {{"breakpoints", std::move(pts)}};
}

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (auto [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", c}});
    return {{"terms", std::move(terms)}};
}

json to_json(const BifilteredComplex& c) {
    json gens = json::array();
    for (const auto& g : c.generators()) {
        gens.push_back({{"name", g.label}, {"maslov", g.maslov}, {"alg", g.alg}, {"alex", g.alex}});
    }
    json diff = json::array();
    for (const auto& a : c.arrows()) {
        diff.push_back({{"source", a.source}, {"target", a.target}, {"u_power", a.exponent}});
    }
    return {{"generators", std::move(gens)}, {"differential", std::move(diff)}};
}

json to_json(const JumpReport& j) {
    return {{"t", to_json(j.t)}, {"is_jump", j.is_jump}, {"upsilon2", to_json(j.upsilon2)}};
}

Rational rational_from_json(const json& j) {
    return Rational(integer_from_json(field(j, "num")), integer_from_json(field(j, "den")));
}

PLFunction plfunction_from_json(const json& j) {
    const json& pts = field(j, "breakpoints");
    if (!pts.is_array()) throw std::invalid_argument("'breakpoints' must be an array");
    std::vector<Breakpoint> samples;
    for (const auto& p : pts) samples.push_back({rational_from_json(field(p, "t")), rational_from_json(field(p, "v"))});
    return PLFunction::from_samples(std::move(samples));
}

BifilteredComplex complex_from_json(const json& j) {
    std::vector<Generator> gens;
    try {
        for (const auto& g : field(j, "generators")) {
            gens.push_back({field(g, "name").get<std::string>(), field(g, "maslov").get<std::int64_t>(),
                            field(g, "alg").get<std::int64_t>(), field(g, "alex").get<std::int64_t>()});
        }
        std::vector<Arrow> arrows;
        for (const auto& a : field(j, "differential")) {
            arrows.push_back({field(a, "source").get<std::size_t>(), field(a, "target").get<std::size_t>(),
                              field(a, "u_power").get<std::int64_t>()});
        }
        return BifilteredComplex(std::move(gens), std::move(arrows));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
    }
}

}  // namespace knotups
