#include "knotups/knot_expr.hpp"

#include <cctype>
#include <limits>

namespace knotups {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

KnotExprPtr make_unknot() { return std::make_shared<KnotExpr>(KnotExpr{UnknotNode{}}); }

KnotExprPtr make_torus(std::int64_t p, std::int64_t q) {
    if (q < p) std::swap(p, q);
    check_torus_params(p, q);
    return std::make_shared<KnotExpr>(KnotExpr{TorusNode{p, q}});
}

KnotExprPtr make_mirror(KnotExprPtr inner) {
    if (const auto* m = std::get_if<MirrorNode>(&inner->node)) return m->inner;
    return std::make_shared<KnotExpr>(KnotExpr{MirrorNode{std::move(inner)}});
}

KnotExprPtr make_sum(std::vector<KnotExprPtr> terms) {
    if (terms.empty()) return make_unknot();
    if (terms.size() == 1) return terms.front();
    return std::make_shared<KnotExpr>(KnotExpr{SumNode{std::move(terms)}});
}

KnotExprPtr make_multiple(std::int64_t n, KnotExprPtr inner) {
    if (n < 0) return make_multiple(-n, make_mirror(std::move(inner)));
    return std::make_shared<KnotExpr>(KnotExpr{MultipleNode{n, std::move(inner)}});
}

bool operator==(const KnotExpr& a, const KnotExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, UnknotNode>) {
                return true;
            } else if constexpr (std::is_same_v<T, TorusNode>) {
                return lhs.p == rhs.p && lhs.q == rhs.q;
            } else if constexpr (std::is_same_v<T, MirrorNode>) {
                return *lhs.inner == *rhs.inner;
            } else if constexpr (std::is_same_v<T, MultipleNode>) {
                return lhs.count == rhs.count && *lhs.inner == *rhs.inner;
            } else {
                if (lhs.terms.size() != rhs.terms.size()) return false;
                for (std::size_t i = 0; i < lhs.terms.size(); ++i) {
                    if (!(*lhs.terms[i] == *rhs.terms[i])) return false;
                }
                return true;
            }
        },
        a.node);
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::vector<std::string>* warnings) : text_(text), warnings_(warnings) {}

    KnotExprPtr parse() {
        std::vector<KnotExprPtr> terms{term()};
        while (accept('#')) terms.push_back(term());
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return make_sum(std::move(terms));
    }

private:
    KnotExprPtr term() {
        bool mirrored = accept('-');
        std::int64_t count = 1;
        bool has_count = false;
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            count = integer();
            expect('*');
            has_count = true;
        }
        KnotExprPtr base;
        skip_space();
        std::size_t start = pos_;
        if (accept('U')) {
            base = make_unknot();
        } else if (accept('T')) {
            expect('(');
            std::int64_t p = integer();
            expect(',');
            std::int64_t q = integer();
            expect(')');
            if (q < p && warnings_ != nullptr) {
                warnings_->push_back("T(" + std::to_string(p) + "," + std::to_string(q) + ") reordered to T(" +
                                     std::to_string(q) + "," + std::to_string(p) + ")");
            }
            try {
                base = make_torus(p, q);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), start);
            }
        } else {
            fail("expected 'T(' or 'U'");
        }
        if (has_count) return make_multiple(mirrored ? -count : count, base);
        return mirrored ? make_mirror(base) : base;
    }

    std::int64_t integer() {
        skip_space();
        std::size_t start = pos_;
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return value;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::vector<std::string>* warnings_;
    std::size_t pos_ = 0;
};

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
    return a * b;
}

}  // namespace

KnotExprPtr parse_expr(std::string_view text, std::vector<std::string>* warnings) {
    return Parser(text, warnings).parse();
}

std::string to_string(const KnotExpr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UnknotNode>) {
                return "U";
            } else if constexpr (std::is_same_v<T, TorusNode>) {
                return "T(" + std::to_string(n.p) + "," + std::to_string(n.q) + ")";
            } else if constexpr (std::is_same_v<T, MirrorNode>) {
                return "-" + to_string(*n.inner);
            } else if constexpr (std::is_same_v<T, MultipleNode>) {
                if (const auto* m = std::get_if<MirrorNode>(&n.inner->node)) {
                    return "-" + std::to_string(n.count) + "*" + to_string(*m->inner);
                }
                return std::to_string(n.count) + "*" + to_string(*n.inner);
            } else {
                std::string out;
                for (const auto& t : n.terms) {
                    if (!out.empty()) out += " # ";
                    out += to_string(*t);
                }
                return out;
            }
        },
        e.node);
}

std::size_t realized_size(const KnotExpr& e) {
    return std::visit(
        [](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UnknotNode>) {
                return 1;
            } else if constexpr (std::is_same_v<T, TorusNode>) {
                return 2 * semigroup_runs(n.p, n.q).runs.size() + 1;
            } else if constexpr (std::is_same_v<T, MirrorNode>) {
                return realized_size(*n.inner);
            } else if constexpr (std::is_same_v<T, MultipleNode>) {
                std::size_t base = realized_size(*n.inner);
                std::size_t total = 1;
                for (std::int64_t i = 0; i < n.count && total != std::numeric_limits<std::size_t>::max(); ++i) {
                    total = saturating_mul(total, base);
                }
                return total;
            } else {
                std::size_t total = 1;
                for (const auto& t : n.terms) total = saturating_mul(total, realized_size(*t));
                return total;
            }
        },
        e.node);
}

BifilteredComplex realize(const KnotExpr& e, std::size_t generator_limit) {
    std::size_t size = realized_size(e);
    if (size > generator_limit) {
        throw std::length_error("expression would build " + std::to_string(size) + " generators (limit " +
                                std::to_string(generator_limit) + ")");
    }
    return std::visit(
        [&](const auto& n) -> BifilteredComplex {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, UnknotNode>) {
                return unknot_complex();
            } else if constexpr (std::is_same_v<T, TorusNode>) {
                return from_staircase(build_staircase(n.p, n.q));
            } else if constexpr (std::is_same_v<T, MirrorNode>) {
                return dual(realize(*n.inner, generator_limit));
            } else if constexpr (std::is_same_v<T, MultipleNode>) {
                BifilteredComplex acc = unknot_complex();
                if (n.count == 0) return acc;
                BifilteredComplex base = realize(*n.inner, generator_limit);
                acc = base;
                for (std::int64_t i = 1; i < n.count; ++i) acc = tensor(acc, base);
                return acc;
            } else {
                BifilteredComplex acc = realize(*n.terms.front(), generator_limit);
                for (std::size_t i = 1; i < n.terms.size(); ++i) {
                    acc = tensor(acc, realize(*n.terms[i], generator_limit));
                }
                return acc;
            }
        },
        e.node);
}

}  // namespace knotups
