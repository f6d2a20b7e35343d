#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotups/complex.hpp"

namespace knotups {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

struct UnknotNode {};
struct TorusNode {
    std::int64_t p;
    std::int64_t q;
};
struct MirrorNode {
    KnotExprPtr inner;
};
struct SumNode {
    std::vector<KnotExprPtr> terms;
};
struct MultipleNode {
    std::int64_t count;  // always >= 0
    KnotExprPtr inner;
};

struct KnotExpr {
    std::variant<UnknotNode, TorusNode, MirrorNode, SumNode, MultipleNode> node;
};

KnotExprPtr make_unknot();
// Validates coprimality; swaps q < p into order.
KnotExprPtr make_torus(std::int64_t p, std::int64_t q);
KnotExprPtr make_mirror(KnotExprPtr inner);
KnotExprPtr make_sum(std::vector<KnotExprPtr> terms);
// Negative counts become count |n| of the mirror.
KnotExprPtr make_multiple(std::int64_t n, KnotExprPtr inner);

bool operator==(const KnotExpr& a, const KnotExpr& b);

//   EXPR := TERM ('#' TERM)*
//   TERM := ['-'] [INT '*'] ('T(' INT ',' INT ')' | 'U')
// Whitespace is ignored. A torus knot written as T(q,p) with q > p is
// reordered and a warning is appended to `warnings` when given.
KnotExprPtr parse_expr(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string to_string(const KnotExpr& e);

// Number of generators realize() would build.
std::size_t realized_size(const KnotExpr& e);

inline constexpr std::size_t kDefaultGeneratorLimit = 20000;

// Builds the knot complex; throws std::length_error beyond `generator_limit`.
BifilteredComplex realize(const KnotExpr& e, std::size_t generator_limit = kDefaultGeneratorLimit);

}  // namespace knotups
