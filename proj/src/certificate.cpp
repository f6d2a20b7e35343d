#include "knotups/certificate.hpp"

#include <algorithm>

#include "knotups/upsilon.hpp"

namespace knotups {

std::optional<ExtRational> certify_sum(const ExtRational& base, std::span<const SummandBounds> others) {
    if (!base.is_finite()) return std::nullopt;
    for (const auto& j : others) {
        if (!(std::min(j.lower, j.mirror_lower) > base)) return std::nullopt;
    }
    return base;
}

SummandBounds bounds_for_multiple(const SummandBounds& k, std::int64_t n) {
    if (n == 0) {
        ExtRational inf = ExtRational::pos_inf();
        return {inf, inf, inf, inf};
    }
    if (n == 1) return k;
    SummandBounds out{k.lower, k.mirror_lower, std::nullopt, std::nullopt};
    if (k.exact && k.mirror_exact) {
        if (*k.exact < *k.mirror_exact) out.exact = k.exact;
        if (*k.mirror_exact < *k.exact) out.mirror_exact = k.mirror_exact;
    }
    // Upsilon^2 = +inf is also the most any value can be.
    if (out.lower.is_pos_inf()) out.exact = out.lower;
    if (out.mirror_lower.is_pos_inf()) out.mirror_exact = out.mirror_lower;
    return out;
}

namespace {

SummandBounds summand_bounds(const KnotExpr& e, const Rational& s, std::vector<std::string>& steps) {
    if (const auto* m = std::get_if<MultipleNode>(&e.node)) {
        SummandBounds inner = summand_bounds(*m->inner, s, steps);
        SummandBounds out = bounds_for_multiple(inner, m->count);
        steps.push_back(to_string(e) + ": multiple of " + to_string(*m->inner) +
                        (out.exact ? ", value " + out.exact->str() : ", value >= " + out.lower.str()) +
                        (out.mirror_exact ? ", mirror " + out.mirror_exact->str()
                                          : ", mirror >= " + out.mirror_lower.str()));
        return out;
    }
    if (std::holds_alternative<SumNode>(e.node)) {
        throw std::invalid_argument("nested connected sums are not supported by the certificate route");
    }
    BifilteredComplex c = realize(e);
    ExtRational value = UpsilonEngine(c).upsilon2(s, s);
    ExtRational mirror = UpsilonEngine(dual(c)).upsilon2(s, s);
    steps.push_back(to_string(e) + ": value " + value.str() + ", mirror " + mirror.str());
    return {value, mirror, value, mirror};
}

}  // namespace

Certificate certify_upsilon2(const KnotExpr& e, const Rational& s) {
    Certificate cert;
    std::vector<KnotExprPtr> terms;
    if (const auto* sum = std::get_if<SumNode>(&e.node)) {
        terms = sum->terms;
    } else {
        terms.push_back(std::make_shared<KnotExpr>(e));
    }

    std::vector<SummandBounds> bounds;
    for (const auto& t : terms) bounds.push_back(summand_bounds(*t, s, cert.steps));

    for (std::size_t b = 0; b < bounds.size(); ++b) {
        if (!bounds[b].exact || !bounds[b].exact->is_finite()) continue;
        std::vector<SummandBounds> others;
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            if (i != b) others.push_back(bounds[i]);
        }
        if (auto v = certify_sum(*bounds[b].exact, others)) {
            cert.steps.push_back("sum lemma with base " + to_string(*terms[b]) + " gives " + v->str());
            cert.value = v;
            return cert;
        }
    }
    // Subadditivity: every summand at +inf forces +inf.
    if (std::all_of(bounds.begin(), bounds.end(), [](const SummandBounds& x) { return x.lower.is_pos_inf(); })) {
        cert.steps.push_back("all summands are +inf; subadditivity gives +inf");
        cert.value = ExtRational::pos_inf();
        return cert;
    }
    cert.steps.push_back("no lemma applies");
    return cert;
}

}  // namespace knotups
