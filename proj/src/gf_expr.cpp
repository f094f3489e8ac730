#include <polycauchy/gf_expr.hpp>

#include <algorithm>
#include <cctype>
#include <limits>

#include <polycauchy/combinatorics.hpp>

namespace polycauchy
{

namespace
{

constexpr long max_lif_index = 64;
constexpr long max_exponent = 256;
constexpr int max_depth = 200;
constexpr std::size_t max_working_extra = 128;

std::size_t utf8_length(unsigned char lead)
{
    if (lead >= 0xF0) {
        return 4;
    }
    if (lead >= 0xE0) {
        return 3;
    }
    if (lead >= 0xC0) {
        return 2;
    }
    return 1;
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

std::string_view token_kind_name(TokenKind kind)
{
    switch (kind) {
    case TokenKind::integer:
        return "integer";
    case TokenKind::var_t:
        return "t";
    case TokenKind::var_x:
        return "x";
    case TokenKind::log1p:
        return "log1p";
    case TokenKind::exp:
        return "exp";
    case TokenKind::lif:
        return "lif";
    case TokenKind::plus:
        return "+";
    case TokenKind::minus:
        return "-";
    case TokenKind::star:
        return "*";
    case TokenKind::slash:
        return "/";
    case TokenKind::caret:
        return "^";
    case TokenKind::lparen:
        return "(";
    case TokenKind::rparen:
        return ")";
    case TokenKind::semicolon:
        return ";";
    case TokenKind::end:
        return "end of input";
    }
    return "?";
}

GfError::GfError(Kind kind, SourceSpan span, const std::string &message, std::vector<std::string> expected)
    : std::runtime_error(message), kind_(kind), span_(span), expected_(std::move(expected))
{
}

std::string_view gf_error_kind_name(GfError::Kind kind)
{
    using K = GfError::Kind;
    switch (kind) {
    case K::unknown_character:
        return "UnknownCharacter";
    case K::malformed_number:
        return "MalformedNumber";
    case K::unknown_identifier:
        return "UnknownIdentifier";
    case K::unexpected_token:
        return "UnexpectedToken";
    case K::unbalanced_paren:
        return "UnbalancedParen";
    case K::non_integer_exponent:
        return "NonIntegerExponent";
    case K::index_out_of_range:
        return "IndexOutOfRange";
    case K::nesting_too_deep:
        return "NestingTooDeep";
    case K::division_valuation:
        return "DivisionValuation";
    case K::non_unit_recip:
        return "NonUnitRecip";
    case K::exp_of_nonzero_constant:
        return "ExpOfNonzeroConstant";
    case K::nonzero_constant_argument:
        return "NonzeroConstantArgument";
    case K::order_too_large:
        return "OrderTooLarge";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Lexer

std::vector<Token> tokenize(std::string_view input)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    auto single = [&](TokenKind kind, std::size_t len) {
        tokens.push_back({kind, {i, i + len}, std::string(input.substr(i, len))});
        i += len;
    };
    while (i < input.size()) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) {
                ++j;
            }
            if (j < input.size() && (ident_char(input[j]) || input[j] == '.')) {
                std::size_t k = j;
                while (k < input.size() && (ident_char(input[k]) || input[k] == '.')) {
                    ++k;
                }
                throw GfError(GfError::Kind::malformed_number, {i, k},
                              "malformed number '" + std::string(input.substr(i, k - i)) + "'");
            }
            tokens.push_back({TokenKind::integer, {i, j}, std::string(input.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < input.size() && ident_char(input[j])) {
                ++j;
            }
            const std::string_view word = input.substr(i, j - i);
            TokenKind kind;
            if (word == "t") {
                kind = TokenKind::var_t;
            } else if (word == "x") {
                kind = TokenKind::var_x;
            } else if (word == "log1p") {
                kind = TokenKind::log1p;
            } else if (word == "exp") {
                kind = TokenKind::exp;
            } else if (word == "lif") {
                kind = TokenKind::lif;
            } else {
                throw GfError(GfError::Kind::unknown_identifier, {i, j}, "unknown identifier '" + std::string(word) + "'");
            }
            tokens.push_back({kind, {i, j}, std::string(word)});
            i = j;
            continue;
        }
        switch (c) {
        case '+':
            single(TokenKind::plus, 1);
            continue;
        case '-':
            single(TokenKind::minus, 1);
            continue;
        case '*':
            single(TokenKind::star, 1);
            continue;
        case '/':
            single(TokenKind::slash, 1);
            continue;
        case '^':
            single(TokenKind::caret, 1);
            continue;
        case '(':
            single(TokenKind::lparen, 1);
            continue;
        case ')':
            single(TokenKind::rparen, 1);
            continue;
        case ';':
            single(TokenKind::semicolon, 1);
            continue;
        default:
            break;
        }
        // U+2212 MINUS SIGN
        if (input.substr(i, 3) == "\xE2\x88\x92") {
            single(TokenKind::minus, 3);
            continue;
        }
        const std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), input.size() - i);
        throw GfError(GfError::Kind::unknown_character, {i, i + len},
                      "unknown character '" + std::string(input.substr(i, len)) + "'");
    }
    tokens.push_back({TokenKind::end, {input.size(), input.size()}, ""});
    return tokens;
}

// ---------------------------------------------------------------------------
// Parser

namespace
{

GfExprPtr make_node(GfExpr::Kind kind, SourceSpan span, GfExprPtr lhs = nullptr, GfExprPtr rhs = nullptr,
                    long index = 0)
{
    auto node = std::make_shared<GfExpr>();
    node->kind = kind;
    node->span = span;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    node->index = index;
    return node;
}

GfExprPtr make_literal(const ExactRational &value, SourceSpan span)
{
    auto node = std::make_shared<GfExpr>();
    node->kind = GfExpr::Kind::rational;
    node->span = span;
    node->value = value;
    return node;
}

SourceSpan join(SourceSpan a, SourceSpan b)
{
    return {std::min(a.start, b.start), std::max(a.end, b.end)};
}

const std::vector<std::string> atom_starts{"integer", "t", "x", "(", "log1p", "exp", "lif", "-"};

class Parser
{
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens)
    {
        if (tokens_.empty() || tokens_.back().kind != TokenKind::end) {
            throw std::invalid_argument("token stream must end with an end token");
        }
    }

    GfExprPtr parse_all()
    {
        auto e = parse_expr();
        const Token &tok = peek();
        if (tok.kind == TokenKind::rparen) {
            throw GfError(GfError::Kind::unbalanced_paren, tok.span, "unmatched ')'");
        }
        if (tok.kind != TokenKind::end) {
            throw unexpected(tok, {"+", "-", "*", "/", "end of input"});
        }
        return e;
    }

private:
    const Token &peek() const { return tokens_[std::min(pos_, tokens_.size() - 1)]; }

    const Token &advance()
    {
        const Token &tok = peek();
        if (pos_ + 1 < tokens_.size()) {
            ++pos_;
        }
        return tok;
    }

    static GfError unexpected(const Token &tok, std::vector<std::string> expected)
    {
        std::string msg = "unexpected " + std::string(tok.kind == TokenKind::end ? "end of input" : "token '" + tok.text + "'")
                          + "; expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            msg += (i ? ", " : "") + expected[i];
        }
        return GfError(GfError::Kind::unexpected_token, tok.span, msg, std::move(expected));
    }

    const Token &expect(TokenKind kind)
    {
        const Token &tok = peek();
        if (tok.kind != kind) {
            throw unexpected(tok, {std::string(token_kind_name(kind))});
        }
        return advance();
    }

    // Closes a group opened at `open`.
    SourceSpan close_paren(const Token &open, std::vector<std::string> expected)
    {
        const Token &tok = peek();
        if (tok.kind == TokenKind::end) {
            throw GfError(GfError::Kind::unbalanced_paren, open.span, "'(' is never closed");
        }
        if (tok.kind != TokenKind::rparen) {
            expected.insert(expected.begin(), ")");
            throw unexpected(tok, std::move(expected));
        }
        return advance().span;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser &p) : parser(p)
        {
            if (++parser.depth_ > max_depth) {
                throw GfError(GfError::Kind::nesting_too_deep, parser.peek().span, "expression nests too deeply");
            }
        }
        ~DepthGuard() { --parser.depth_; }
        Parser &parser;
    };

    GfExprPtr parse_expr()
    {
        auto lhs = parse_term();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const auto kind = advance().kind == TokenKind::plus ? GfExpr::Kind::add : GfExpr::Kind::sub;
            auto rhs = parse_term();
            const SourceSpan span = join(lhs->span, rhs->span);
            lhs = make_node(kind, span, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    GfExprPtr parse_term()
    {
        auto lhs = parse_factor();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            const bool is_div = advance().kind == TokenKind::slash;
            auto rhs = parse_factor();
            const SourceSpan span = join(lhs->span, rhs->span);
            if (is_div && lhs->kind == GfExpr::Kind::rational && rhs->kind == GfExpr::Kind::rational
                && !rhs->value.is_zero()) {
                lhs = make_literal(lhs->value / rhs->value, span);
                continue;
            }
            lhs = make_node(is_div ? GfExpr::Kind::div : GfExpr::Kind::mul, span, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    GfExprPtr parse_factor()
    {
        DepthGuard guard(*this);
        if (peek().kind == TokenKind::minus) {
            const SourceSpan minus = advance().span;
            auto operand = parse_factor();
            const SourceSpan span = join(minus, operand->span);
            if (operand->kind == GfExpr::Kind::rational) {
                return make_literal(-operand->value, span);
            }
            return make_node(GfExpr::Kind::mul, span, make_literal(ExactRational(-1), minus), std::move(operand));
        }
        auto base = parse_atom();
        if (peek().kind != TokenKind::caret) {
            return base;
        }
        advance();
        const auto [exponent, end] = parse_exponent();
        const SourceSpan span{base->span.start, end.end};
        return make_node(GfExpr::Kind::pow_int, span, std::move(base), nullptr, exponent);
    }

    // Reads an optionally signed integer literal bounded by `limit`.
    std::pair<long, SourceSpan> signed_integer(GfError::Kind not_integer, long limit, const char *what)
    {
        SourceSpan span = peek().span;
        bool negative = false;
        if (peek().kind == TokenKind::minus) {
            negative = true;
            advance();
        }
        const Token &tok = peek();
        if (tok.kind != TokenKind::integer) {
            if (not_integer == GfError::Kind::non_integer_exponent) {
                throw GfError(not_integer, tok.span, std::string(what) + " must be an integer literal");
            }
            throw unexpected(tok, {"integer"});
        }
        advance();
        span = join(span, tok.span);
        const BigInt value(tok.text, 10);
        if (abs(value) > limit) {
            throw GfError(GfError::Kind::index_out_of_range, span,
                          std::string(what) + " must satisfy |value| <= " + std::to_string(limit));
        }
        const long v = value.get_si();
        return {negative ? -v : v, span};
    }

    std::pair<long, SourceSpan> parse_exponent()
    {
        if (peek().kind == TokenKind::lparen) {
            const Token &open = advance();
            auto [value, span] = signed_integer(GfError::Kind::non_integer_exponent, max_exponent, "exponent");
            const Token &tok = peek();
            if (tok.kind != TokenKind::rparen) {
                if (tok.kind == TokenKind::end) {
                    throw GfError(GfError::Kind::unbalanced_paren, open.span, "'(' is never closed");
                }
                throw GfError(GfError::Kind::non_integer_exponent, tok.span, "exponent must be an integer literal");
            }
            return {value, join(open.span, advance().span)};
        }
        return signed_integer(GfError::Kind::non_integer_exponent, max_exponent, "exponent");
    }

    GfExprPtr parse_atom()
    {
        const Token &tok = peek();
        switch (tok.kind) {
        case TokenKind::integer: {
            advance();
            return make_literal(ExactRational(BigInt(tok.text, 10)), tok.span);
        }
        case TokenKind::var_t:
            advance();
            return make_node(GfExpr::Kind::var_t, tok.span);
        case TokenKind::var_x:
            advance();
            return make_node(GfExpr::Kind::var_x, tok.span);
        case TokenKind::lparen: {
            const Token &open = advance();
            auto inner = parse_expr();
            close_paren(open, {"+", "-", "*", "/"});
            return inner;
        }
        case TokenKind::log1p:
        case TokenKind::exp: {
            const Token &name = advance();
            const Token &open = expect(TokenKind::lparen);
            auto arg = parse_expr();
            const SourceSpan close = close_paren(open, {"+", "-", "*", "/"});
            return make_node(name.kind == TokenKind::log1p ? GfExpr::Kind::log1p : GfExpr::Kind::exp,
                             join(name.span, close), std::move(arg));
        }
        case TokenKind::lif: {
            const Token &name = advance();
            const Token &open = expect(TokenKind::lparen);
            const long index = signed_integer(GfError::Kind::unexpected_token, max_lif_index, "lif index").first;
            expect(TokenKind::semicolon);
            auto arg = parse_expr();
            const SourceSpan close = close_paren(open, {"+", "-", "*", "/"});
            return make_node(GfExpr::Kind::lif, join(name.span, close), std::move(arg), nullptr, index);
        }
        case TokenKind::rparen:
            throw GfError(GfError::Kind::unbalanced_paren, tok.span, "unmatched ')'");
        default:
            throw unexpected(tok, atom_starts);
        }
    }

    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

} // namespace

bool structurally_equal(const GfExpr &a, const GfExpr &b)
{
    if (a.kind != b.kind || a.index != b.index || a.value != b.value) {
        return false;
    }
    auto same = [](const GfExprPtr &x, const GfExprPtr &y) {
        if (!x || !y) {
            return !x && !y;
        }
        return structurally_equal(*x, *y);
    };
    return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

GfExprPtr parse(std::span<const Token> tokens)
{
    return Parser(tokens).parse_all();
}

GfExprPtr parse(std::string_view input)
{
    const auto tokens = tokenize(input);
    return parse(tokens);
}

// ---------------------------------------------------------------------------
// Rendering

namespace
{

int precedence(const GfExpr &e)
{
    switch (e.kind) {
    case GfExpr::Kind::add:
    case GfExpr::Kind::sub:
        return 1;
    case GfExpr::Kind::mul:
    case GfExpr::Kind::div:
        return 2;
    case GfExpr::Kind::pow_int:
        return 3;
    default:
        return 4;
    }
}

std::string render_literal(const ExactRational &v)
{
    if (v.is_integer()) {
        return v.to_string();
    }
    return "(" + v.to_string() + ")";
}

std::string wrap(const GfExpr &e, bool parens)
{
    return parens ? "(" + render(e) + ")" : render(e);
}

} // namespace

std::string render(const GfExpr &e)
{
    using K = GfExpr::Kind;
    switch (e.kind) {
    case K::rational:
        return render_literal(e.value);
    case K::var_t:
        return "t";
    case K::var_x:
        return "x";
    case K::add:
    case K::sub:
    case K::mul:
    case K::div: {
        const int p = precedence(e);
        const char *op = e.kind == K::add ? " + " : e.kind == K::sub ? " - " : e.kind == K::mul ? "*" : "/";
        return wrap(*e.lhs, precedence(*e.lhs) < p) + op + wrap(*e.rhs, precedence(*e.rhs) <= p);
    }
    case K::pow_int: {
        const GfExpr &base = *e.lhs;
        const bool atomic = precedence(base) == 4 && !(base.kind == K::rational && base.value.sign() < 0);
        return wrap(base, !atomic) + "^" + std::to_string(e.index);
    }
    case K::log1p:
        return "log1p(" + render(*e.lhs) + ")";
    case K::exp:
        return "exp(" + render(*e.lhs) + ")";
    case K::lif:
        return "lif(" + std::to_string(e.index) + "; " + render(*e.lhs) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace
{

// The divisor vanishes through the working order; a larger order may help.
struct NeedsMoreOrder {
    SourceSpan span;
};

PolySeries eval_node(const GfExpr &e, std::size_t order)
{
    using K = GfExpr::Kind;
    switch (e.kind) {
    case K::rational:
        return PolySeries::constant(Polynomial(e.value), order);
    case K::var_t:
        return PolySeries::variable(order);
    case K::var_x:
        return PolySeries::constant(Polynomial::x(), order);
    case K::add:
        return eval_node(*e.lhs, order) + eval_node(*e.rhs, order);
    case K::sub:
        return eval_node(*e.lhs, order) - eval_node(*e.rhs, order);
    case K::mul:
        return eval_node(*e.lhs, order) * eval_node(*e.rhs, order);
    case K::div: {
        const auto num = eval_node(*e.lhs, order);
        const auto den = eval_node(*e.rhs, order);
        try {
            return div_with_valuation(num, den);
        } catch (const SeriesError &err) {
            switch (err.kind()) {
            case SeriesError::Kind::zero_divisor:
                throw NeedsMoreOrder{e.rhs->span};
            case SeriesError::Kind::non_unit:
                throw GfError(GfError::Kind::non_unit_recip, e.rhs->span, err.what());
            default:
                throw GfError(GfError::Kind::division_valuation, e.span, err.what());
            }
        }
    }
    case K::pow_int: {
        const auto base = eval_node(*e.lhs, order);
        if (e.index < 0) {
            if (base[0].is_zero()) {
                if (!base.valuation()) {
                    throw NeedsMoreOrder{e.lhs->span};
                }
                throw GfError(GfError::Kind::division_valuation, e.span,
                              "negative power of a series with zero constant term");
            }
            if (!CoefficientRing<Polynomial>::is_unit(base[0])) {
                throw GfError(GfError::Kind::non_unit_recip, e.lhs->span,
                              "constant term " + base[0].to_string() + " is not invertible");
            }
        }
        return pow_int(base, e.index);
    }
    case K::log1p:
    case K::exp:
    case K::lif: {
        const auto arg = eval_node(*e.lhs, order);
        if (!arg[0].is_zero()) {
            if (e.kind == K::exp) {
                throw GfError(GfError::Kind::exp_of_nonzero_constant, e.lhs->span,
                              "exp argument has constant term " + arg[0].to_string());
            }
            throw GfError(GfError::Kind::nonzero_constant_argument, e.lhs->span,
                          "argument has constant term " + arg[0].to_string());
        }
        const std::size_t n = arg.order_bound();
        const ScalarSeries outer = e.kind == K::log1p ? log1p_series(n)
                                   : e.kind == K::exp ? exp_series(n)
                                                      : lif_series(e.index, n);
        return compose(lift(outer), arg);
    }
    }
    throw std::logic_error("unknown node kind");
}

} // namespace

PolySeries eval_series(const GfExpr &e, std::size_t order)
{
    if (order > max_series_order) {
        throw GfError(GfError::Kind::order_too_large, e.span,
                      "order " + std::to_string(order) + " exceeds the cap " + std::to_string(max_series_order));
    }
    std::size_t working = order;
    for (;;) {
        std::optional<PolySeries> result;
        std::optional<SourceSpan> vanishing;
        try {
            result = eval_node(e, working);
        } catch (const NeedsMoreOrder &more) {
            vanishing = more.span;
        }
        if (result && result->order_bound() >= order) {
            return result->truncated(order);
        }
        if (working >= order + max_working_extra) {
            if (vanishing) {
                throw GfError(GfError::Kind::division_valuation, *vanishing,
                              "divisor vanishes through t^" + std::to_string(working));
            }
            return *result;
        }
        const std::size_t missing = result ? order - result->order_bound() : std::max<std::size_t>(working, 4);
        working = std::min(working + missing, order + max_working_extra);
    }
}

PolySeries eval_series(std::string_view input, std::size_t order)
{
    return eval_series(*parse(input), order);
}

std::string caret_diagnostic(std::string_view input, const GfError &error)
{
    auto columns = [&](std::size_t from, std::size_t to) {
        std::size_t n = 0;
        for (std::size_t i = from; i < to && i < input.size(); ++i) {
            if ((static_cast<unsigned char>(input[i]) & 0xC0) != 0x80) {
                ++n;
            }
        }
        return n;
    };
    const SourceSpan span = error.span();
    std::string out = "error: " + std::string(error.what()) + "\n  " + std::string(input) + "\n  ";
    out += std::string(columns(0, span.start), ' ');
    out += std::string(std::max<std::size_t>(1, columns(span.start, span.end)), '^');
    return out + "\n";
}

} // namespace polycauchy
