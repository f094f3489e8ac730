#ifndef POLYCAUCHY_GF_EXPR_HPP
#define POLYCAUCHY_GF_EXPR_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <polycauchy/power_series.hpp>
#include <polycauchy/rational.hpp>

namespace polycauchy
{

// Byte offsets [start, end) into the parsed input.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const SourceSpan &, const SourceSpan &) = default;
};

enum class TokenKind {
    integer,
    var_t,
    var_x,
    log1p,
    exp,
    lif,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    semicolon,
    end,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    SourceSpan span;
    std::string text;
};

class GfError : public std::runtime_error
{
public:
    enum class Kind {
        unknown_character,
        malformed_number,
        unknown_identifier,
        unexpected_token,
        unbalanced_paren,
        non_integer_exponent,
        index_out_of_range,
        nesting_too_deep,
        division_valuation,
        non_unit_recip,
        exp_of_nonzero_constant,
        nonzero_constant_argument,
        order_too_large,
    };

    GfError(Kind kind, SourceSpan span, const std::string &message, std::vector<std::string> expected = {});

    Kind kind() const { return kind_; }
    SourceSpan span() const { return span_; }
    // Token descriptions acceptable at the error position (unexpected_token).
    const std::vector<std::string> &expected() const { return expected_; }

private:
    Kind kind_;
    SourceSpan span_;
    std::vector<std::string> expected_;
};

std::string_view gf_error_kind_name(GfError::Kind kind);

std::vector<Token> tokenize(std::string_view input);

struct GfExpr;
using GfExprPtr = std::shared_ptr<const GfExpr>;

struct GfExpr {
    enum class Kind { rational, var_t, var_x, add, sub, mul, div, pow_int, log1p, exp, lif };

    Kind kind;
    SourceSpan span;
    ExactRational value; // rational
    long index = 0;      // pow_int exponent, lif index
    GfExprPtr lhs;       // binary left operand, or the argument of unary nodes
    GfExprPtr rhs;
};

// Same tree shape and literals; spans are ignored.
bool structurally_equal(const GfExpr &a, const GfExpr &b);

GfExprPtr parse(std::span<const Token> tokens);
GfExprPtr parse(std::string_view input);

// Text that parses back to a structurally equal tree.
std::string render(const GfExpr &e);

constexpr std::size_t max_series_order = 64;

// Expands e through t^order over Q[x]. Division raises the internal
// working order so the result is known through t^order whenever the
// expression has a power series expansion there.
PolySeries eval_series(const GfExpr &e, std::size_t order);
PolySeries eval_series(std::string_view input, std::size_t order);

// The message, the input and a caret line under the error span.
std::string caret_diagnostic(std::string_view input, const GfError &error);

} // namespace polycauchy

#endif
