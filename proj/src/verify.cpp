#include "knotups/verify.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "knotups/certificate.hpp"
#include "knotups/complex.hpp"
#include "knotups/knot_expr.hpp"
#include "knotups/staircase.hpp"
#include "knotups/upsilon.hpp"

namespace knotups {

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
    int mismatches = 0;

    void fail(const std::string& what) {
        passed = false;
        if (mismatches++ < 3) detail << " MISMATCH " << what << ";";
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

std::string torus_name(std::int64_t p, std::int64_t q) {
    return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

BifilteredComplex torus(std::int64_t p, std::int64_t q) { return from_staircase(build_staircase(p, q)); }

Rational frac(std::int64_t num, std::int64_t den) { return Rational(BigInt(num), BigInt(den)); }

// Upsilon of T(a, b) for any coprime positive a, b; T(1, n) is the unknot.
PLFunction upsilon_torus_any(std::int64_t a, std::int64_t b) {
    if (a > b) std::swap(a, b);
    if (a == 1) return PLFunction();
    return upsilon_staircase(a, b);
}

// Jump values of the engine's complex in the open interval (lo, hi).
std::vector<Rational> jumps_between(const UpsilonEngine& eng, const Rational& lo, const Rational& hi) {
    std::vector<Rational> out;
    for (const auto& r : eng.jump_values(hi)) {
        if (r.is_jump && r.t > lo && r.t < hi) out.push_back(r.t);
    }
    return out;
}

std::string list_str(const std::vector<Rational>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + "}";
}

void check_alexander(Outcome& out) {
    int pairs = 0;
    for (std::int64_t p = 2; p <= 30; ++p) {
        for (std::int64_t q = p + 1; q <= 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            out.expect(alexander_torus(p, q) == alexander_oracle(p, q), torus_name(p, q));
        }
    }
    out.detail << pairs << " coprime pairs agree with the quotient formula";
}

void check_t34(Outcome& out) {
    auto steps = staircase_steps(3, 4);
    out.expect(steps == std::vector<std::int64_t>{1, 2, 2, 1}, "steps");
    PLFunction expected = PLFunction::from_samples(
        {{0, 0}, {frac(2, 3), -2}, {frac(4, 3), -2}, {2, 0}});
    out.expect(upsilon_staircase(3, 4) == expected, "staircase Upsilon");
    out.expect(upsilon_pl(torus(3, 4)) == expected, "complex Upsilon");
    out.detail << "steps [1,2,2,1], Upsilon " << expected;
}

void check_fast_path(Outcome& out) {
    int pairs = 0;
    for (std::int64_t p = 2; p <= 16; ++p) {
        for (std::int64_t q = p + 1; q <= 16; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            out.expect(upsilon_staircase(p, q) == upsilon_pl(torus(p, q)), torus_name(p, q));
        }
    }
    out.detail << pairs << " torus knots: envelope = definitional engine";
}

void check_recursion(Outcome& out) {
    int pairs = 0;
    for (std::int64_t p = 2; p <= 20; ++p) {
        for (std::int64_t q = p + 1; q <= 20; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            PLFunction rhs = upsilon_torus_any(p, q - p) + upsilon_torus_any(p, p + 1);
            out.expect(upsilon_staircase(p, q) == rhs, torus_name(p, q));
        }
    }
    out.detail << pairs << " torus knots satisfy Y(p,q) = Y(p,q-p) + Y(p,p+1)";
}

void check_prop_first_jump(Outcome& out) {
    int knots = 0;
    for (std::int64_t p : {3, 5, 7}) {
        for (std::int64_t q = p + 1; q <= 13; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++knots;
            UpsilonEngine eng(torus(p, q));
            Rational s = frac(2, p);
            ExtRational expected(frac(-2 * (p - 1), p));
            bool found = false;
            for (const auto& r : eng.jump_values(s)) {
                if (r.t < s) {
                    out.expect(!r.is_jump, torus_name(p, q) + " jump at " + r.t.str());
                } else {
                    found = r.is_jump && r.upsilon2 == expected;
                }
            }
            out.expect(found, torus_name(p, q) + " at 2/p");
            out.expect(eng.upsilon2(s, s) == expected, torus_name(p, q) + " Upsilon2(2/p)");
        }
    }
    out.detail << knots << " torus knots: 2/p is the first jump, Upsilon2 = -2(p-1)/p";
}

void check_prop_p_p1(Outcome& out) {
    for (std::int64_t p : {3, 5, 7, 9, 11}) {
        UpsilonEngine eng(torus(p, p + 1));
        Rational s = frac(4, p);
        ExtRational value = eng.upsilon2(s, s);
        out.expect(value == ExtRational(frac(-4 * (p - 2), p)), torus_name(p, p + 1) + " got " + value.str());
        auto inner = jumps_between(eng, frac(2, p), s);
        out.expect(inner.empty(), torus_name(p, p + 1) + " jumps " + list_str(inner));
        out.detail << torus_name(p, p + 1) << ":" << value << " ";
    }
}

void check_prop_small_k(Outcome& out) {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 2}, {7, 2}, {7, 3}, {9, 2}, {11, 3}}) {
        UpsilonEngine eng(torus(p, p + k));
        Rational s = frac(4, p);
        ExtRational value = eng.upsilon2(s, s);
        out.expect(value == ExtRational(frac(-4 * (p - k - 1), p)), torus_name(p, p + k) + " got " + value.str());
        auto inner = jumps_between(eng, frac(2, p), s);
        out.expect(inner.empty(), torus_name(p, p + k) + " jumps " + list_str(inner));
        out.detail << torus_name(p, p + k) << ":" << value << " ";
    }
}

void check_prop_large_k(Outcome& out) {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 3}, {7, 4}, {7, 5}, {9, 5}, {9, 7}}) {
        UpsilonEngine eng(torus(p, p + k));
        Rational s = frac(4, p);
        ExtRational value = eng.upsilon2(s, s);
        out.expect(value == ExtRational(frac(-4 * (k - 1), p)), torus_name(p, p + k) + " got " + value.str());
        auto jumps = jumps_between(eng, Rational(0), s);
        std::vector<Rational> expected{frac(2, p), frac(2, k)};
        std::sort(expected.begin(), expected.end());
        out.expect(jumps == expected, torus_name(p, p + k) + " jumps " + list_str(jumps));
        out.detail << torus_name(p, p + k) << ":" << value << " " << list_str(jumps) << " ";
    }
}

void check_prop_no_jump(Outcome& out) {
    int knots = 0;
    for (std::int64_t p = 2; p <= 9; ++p) {
        for (std::int64_t q = p + 1; q < 2 * p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++knots;
            UpsilonEngine eng(torus(p, q));
            Rational s = frac(4, q);
            for (const auto& r : eng.jump_values(s)) {
                if (r.t == s) out.expect(!r.is_jump, torus_name(p, q) + " jumps at 4/q");
            }
            out.expect(eng.upsilon2(s, s).is_pos_inf(), torus_name(p, q) + " Upsilon2(4/q) finite");
        }
    }
    out.detail << knots << " torus knots with p<q<2p: 4/q is not a jump value";
}

void check_mirror_trivial(Outcome& out) {
    int knots = 0;
    std::size_t params = 0;
    for (std::int64_t p = 2; p <= 11; ++p) {
        for (std::int64_t q = p + 1; q <= 11; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++knots;
            UpsilonEngine eng(dual(torus(p, q)));
            for (const auto& t : eng.critical_parameters()) {
                ++params;
                out.expect(eng.upsilon2(t, t).is_pos_inf(), "-" + torus_name(p, q) + " at " + t.str());
            }
        }
    }
    out.detail << knots << " mirrored torus knots, " << params << " critical parameters, all +inf";
}

ExtRational prop_value_at_4_over_p(std::int64_t p, std::int64_t k) {
    return 2 * k < p ? ExtRational(frac(-4 * (p - k - 1), p)) : ExtRational(frac(-4 * (k - 1), p));
}

void check_theorem_two(Outcome& out) {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 2}, {5, 3}, {7, 2}, {7, 4}}) {
        Rational s = frac(4, p);
        auto expr = make_sum({make_torus(k, p), make_torus(p, p + 1)});
        BifilteredComplex sum = realize(*expr);
        ExtRational direct = UpsilonEngine(sum).upsilon2(s, s);
        ExtRational target(frac(-4 * (p - 2), p));
        out.expect(direct == target, to_string(*expr) + " direct " + direct.str());
        Certificate cert = certify_upsilon2(*expr, s);
        out.expect(cert.value && *cert.value == direct, to_string(*expr) + " certificate");
        ExtRational other = UpsilonEngine(torus(p, p + k)).upsilon2(s, s);
        out.expect(other == prop_value_at_4_over_p(p, k), torus_name(p, p + k) + " got " + other.str());
        out.expect(other != direct, torus_name(p, p + k) + " not distinguished");
        out.detail << to_string(*expr) << ":" << direct << " vs " << torus_name(p, p + k) << ":" << other << " ";
    }
}

void check_theorem_one(Outcome& out) {
    for (std::int64_t p : {5, 7}) {
        auto expr = make_sum({make_torus(p, p + 1), make_torus(2, p), make_mirror(make_torus(p, p + 2))});
        BifilteredComplex kp = realize(*expr);
        UpsilonEngine eng(kp);
        Rational s = frac(4, p);
        ExtRational target(frac(-4 * (p - 2), p));
        out.expect(eng.upsilon().is_zero(), "K_" + std::to_string(p) + " Upsilon not zero");
        ExtRational direct = eng.upsilon2(s, s);
        out.expect(direct == target, "K_" + std::to_string(p) + " direct " + direct.str());
        Certificate cert = certify_upsilon2(*expr, s);
        out.expect(cert.value && *cert.value == target, "K_" + std::to_string(p) + " certificate");
        out.detail << "K_" << p << " (" << kp.size() << " generators): Upsilon=0, Upsilon2(4/" << p
                   << ")=" << direct << " ";
    }
    // Multiples lemma against a direct tensor square.
    Rational s = frac(4, 5);
    ExtRational twice = UpsilonEngine(tensor(torus(5, 6), torus(5, 6))).upsilon2(s, s);
    Certificate cert = certify_upsilon2(*make_multiple(2, make_torus(5, 6)), s);
    out.expect(cert.value && *cert.value == twice && twice == ExtRational(frac(-12, 5)), "2*T(5,6)");
    out.detail << "2*T(5,6):" << twice;
}

void check_properties(Outcome& out) {
    std::vector<std::pair<std::string, BifilteredComplex>> pool;
    for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{
             {2, 3}, {2, 5}, {3, 4}, {3, 5}, {2, 7}, {3, 7}, {4, 5}, {5, 6}}) {
        pool.emplace_back(torus_name(p, q), torus(p, q));
        pool.emplace_back("-" + torus_name(p, q), dual(torus(p, q)));
    }

    std::mt19937 rng(20241016);
    int pairs = 0;
    std::size_t params = 0;
    for (; pairs < 12; ++pairs) {
        const auto& [na, a] = pool[rng() % pool.size()];
        const auto& [nb, b] = pool[rng() % pool.size()];
        BifilteredComplex ab = tensor(a, b);
        UpsilonEngine ea(a), eb(b), eab(ab);

        out.expect(eab.upsilon() == ea.upsilon() + eb.upsilon(), "additivity " + na + "#" + nb);

        auto value_at = [](const UpsilonEngine& e, const Rational& t) {
            return e.is_critical(t) ? e.upsilon2(t, t) : ExtRational::pos_inf();
        };
        for (const auto& r : eab.jump_values()) {
            ++params;
            ExtRational bound = std::min(value_at(ea, r.t), value_at(eb, r.t));
            out.expect(r.upsilon2 >= bound, "subadditivity " + na + "#" + nb + " at " + r.t.str());
        }
    }

    int mirrors = 0;
    for (const auto& [name, c] : pool) {
        ++mirrors;
        out.expect(upsilon_pl(dual(c)) == -upsilon_pl(c), "mirror " + name);
    }

    int shifts = 0;
    for (const auto& [name, c] : std::vector<std::pair<std::string, BifilteredComplex>>{
             {"T(3,4)", torus(3, 4)}, {"T(5,7)", torus(5, 7)}, {"T(2,3)#T(3,4)", tensor(torus(2, 3), torus(3, 4))}}) {
        UpsilonEngine base(c);
        for (std::int64_t da = -1; da <= 1; ++da) {
            for (std::int64_t db = -1; db <= 1; ++db) {
                ++shifts;
                UpsilonEngine shifted(shift_filtration(c, da, db));
                for (const auto& t : base.critical_parameters()) {
                    Rational expected_shift = (Rational(1) - t / Rational(2)) * Rational(da) + t / Rational(2) * Rational(db);
                    out.expect(shifted.gamma(t) == base.gamma(t) + expected_shift, "gamma shift " + name);
                    out.expect(shifted.upsilon2(t, t) == base.upsilon2(t, t), "Upsilon2 shift " + name);
                }
            }
        }
    }
    out.detail << pairs << " random pairs over " << params << " critical parameters (subadditivity, additivity), "
               << mirrors << " mirrors, " << shifts << " shifted complexes";
}

struct CheckSpec {
    int id;
    const char* title;
    double budget;
    bool heavy;
    void (*run)(Outcome&);
};

const std::vector<CheckSpec>& checks() {
    static const std::vector<CheckSpec> all{
        {1, "Alexander polynomial from semigroup runs", 1, false, check_alexander},
        {2, "T(3,4) staircase and Upsilon", 1, false, check_t34},
        {3, "staircase envelope matches the definitional engine", 30, false, check_fast_path},
        {4, "torus knot Upsilon recursion", 10, false, check_recursion},
        {5, "first jump of T(p,q) at 2/p", 30, false, check_prop_first_jump},
        {6, "T(p,p+1) at 4/p", 30, false, check_prop_p_p1},
        {7, "T(p,p+k), k<p/2, at 4/p", 30, false, check_prop_small_k},
        {8, "T(p,p+k), k>p/2, at 4/p and jump set", 30, false, check_prop_large_k},
        {9, "4/q is not a jump value when p<q<2p", 30, false, check_prop_no_jump},
        {10, "mirrored torus knots have trivial Upsilon2", 10, false, check_mirror_trivial},
        {11, "T(k,p)#T(p,p+1) vs T(p,p+k)", 120, true, check_theorem_two},
        {12, "K_p = T(p,p+1)#T(2,p)#-T(p,p+2)", 300, true, check_theorem_one},
        {13, "property suites", 120, true, check_properties},
    };
    return all;
}

}  // namespace

std::vector<CheckResult> run_reproduction_suite(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    for (const auto& check : checks()) {
        CheckResult r;
        r.id = check.id;
        r.title = check.title;
        r.budget_seconds = check.budget;
        if (options.fast && check.heavy) {
            r.skipped = true;
            r.passed = true;
            r.detail = "skipped (--fast)";
        } else {
            Outcome out;
            auto start = std::chrono::steady_clock::now();
            try {
                check.run(out);
            } catch (const std::exception& e) {
                out.fail(std::string("exception: ") + e.what());
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            r.passed = out.passed;
            r.detail = out.detail.str();
            if (r.seconds > r.budget_seconds) {
                r.passed = false;
                r.detail += " (over time budget)";
            }
        }
        if (options.on_result) options.on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_result(const CheckResult& r) {
    std::ostringstream os;
    os << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] "
       << r.title << ": " << r.detail;
    std::string s = os.str();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace knotups
