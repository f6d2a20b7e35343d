#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "knotups/json_io.hpp"
#include "knotups/knot_expr.hpp"
#include "knotups/staircase.hpp"
#include "knotups/upsilon.hpp"
#include "knotups/verify.hpp"

using namespace knotups;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::size_t g_max_generators = kDefaultGeneratorLimit;

KnotExprPtr parse_reporting(const std::string& text) {
    std::vector<std::string> warnings;
    KnotExprPtr e = parse_expr(text, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return e;
}

BifilteredComplex realize_checked(const KnotExpr& e) { return realize(e, g_max_generators); }

int cmd_alexander(const std::string& text, bool as_json) {
    KnotExprPtr e = parse_reporting(text);
    LaurentPoly poly;
    if (std::holds_alternative<UnknotNode>(e->node)) {
        poly.add_term(0, 1);
    } else if (const auto* t = std::get_if<TorusNode>(&e->node)) {
        poly = alexander_torus(t->p, t->q);
    } else {
        throw std::invalid_argument("alexander accepts a single torus knot or U, got " + to_string(*e));
    }
    if (as_json) {
        std::cout << to_json(poly).dump() << "\n";
    } else {
        std::cout << poly.str() << "\n";
    }
    return kOk;
}

int cmd_upsilon(const std::string& text, bool as_json) {
    PLFunction f = upsilon_pl(realize_checked(*parse_reporting(text)));
    if (as_json) {
        std::cout << to_json(f).dump() << "\n";
    } else {
        for (const auto& b : f.breakpoints()) std::cout << b.t << "\t" << b.value << "\n";
    }
    return kOk;
}

int cmd_upsilon2(const std::string& text, const std::string& t_text, const std::string& s_text, bool as_json) {
    Rational t = Rational::parse(t_text);
    Rational s = s_text.empty() ? t : Rational::parse(s_text);
    ExtRational v = upsilon2(realize_checked(*parse_reporting(text)), t, s);
    if (as_json) {
        std::cout << to_json(v).dump() << "\n";
    } else {
        std::cout << v << "\n";
    }
    return kOk;
}

int cmd_jumps(const std::string& text, const std::string& max_t_text, bool all, bool as_json) {
    Rational max_t = max_t_text.empty() ? Rational(2) : Rational::parse(max_t_text);
    UpsilonEngine eng(realize_checked(*parse_reporting(text)));
    std::vector<JumpReport> reports;
    for (auto& r : eng.jump_values(max_t)) {
        if (all || r.is_jump) reports.push_back(std::move(r));
    }
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << out.dump() << "\n";
        return kOk;
    }
    std::cout << "t\tjump\tupsilon2\n";
    for (const auto& r : reports) std::cout << r.t << "\t" << (r.is_jump ? "yes" : "no") << "\t" << r.upsilon2 << "\n";
    return kOk;
}

int cmd_verify(bool fast) {
    VerifyOptions opts;
    opts.fast = fast;
    opts.on_result = [](const CheckResult& r) { std::cout << format_result(r) << std::endl; };
    bool ok = true;
    for (const auto& r : run_reproduction_suite(opts)) ok = ok && r.passed;
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? kOk : kMismatch;
}

int cmd_dump(const std::string& text) {
    std::cout << to_json(realize_checked(*parse_reporting(text))).dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Upsilon and secondary Upsilon of torus knots, their sums and mirrors"};
    app.require_subcommand(1);
    app.add_option("--max-generators", g_max_generators, "refuse complexes larger than this")
        ->capture_default_str();

    std::string expr, t_text, s_text, max_t_text;
    bool as_json = false, all = false, fast = false;

    auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a torus knot");
    alex->add_option("EXPR", expr)->required();
    alex->add_flag("--json", as_json);

    auto* ups = app.add_subcommand("upsilon", "breakpoints of Upsilon on [0,2]");
    ups->add_option("EXPR", expr)->required();
    ups->add_flag("--json", as_json);

    auto* ups2 = app.add_subcommand("upsilon2", "secondary Upsilon at (t, s); s defaults to t");
    ups2->add_option("EXPR", expr)->required();
    ups2->add_option("--t", t_text, "parameter t as a or a/b")->required();
    ups2->add_option("--s", s_text, "threshold s as a or a/b");
    ups2->add_flag("--json", as_json);

    auto* jumps = app.add_subcommand("jumps", "jump values of Upsilon2 in (0, max-t]");
    jumps->add_option("EXPR", expr)->required();
    jumps->add_option("--max-t", max_t_text, "upper end of the range (default 2)");
    jumps->add_flag("--all", all, "also list critical parameters that are not jumps");
    jumps->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify-paper", "run the reproduction suite");
    verify->add_flag("--fast", fast, "skip the tensor product checks");

    auto* dump = app.add_subcommand("dump-complex", "print the knot complex as JSON");
    dump->add_option("EXPR", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*alex) return cmd_alexander(expr, as_json);
        if (*ups) return cmd_upsilon(expr, as_json);
        if (*ups2) return cmd_upsilon2(expr, t_text, s_text, as_json);
        if (*jumps) return cmd_jumps(expr, max_t_text, all, as_json);
        if (*verify) return cmd_verify(fast);
        if (*dump) return cmd_dump(expr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
