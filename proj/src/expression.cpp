#include "lpk/expression.hpp"

#include <cctype>
#include <string>

namespace lpk {

namespace {

bool is_operator(char c) {
    return c == '+' || c == '-' || c == '*' || c == '.' || c == '/' || c == '(' || c == ')';
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

class ExpressionParser {
public:
    ExpressionParser(const Quiver& q, std::string_view text) : q_(q), text_(text) {}

    RawExpression parse() {
        RawExpression e = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(1, pos_ + 1, message); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor() {
        char c = peek();
        return c != '\0' && (c == '(' || !is_operator(c));
    }

    RawExpression expr() {
        RawExpression out;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        RawExpression t = term();
        out += negate ? t.negated() : t;
        while (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
            t = term();
            out += negate ? t.negated() : t;
        }
        return out;
    }

    RawExpression term() {
        RawExpression out = factor();
        for (;;) {
            if (peek() == '.') {
                ++pos_;
                out = out * factor();
            } else if (starts_factor()) {
                out = out * factor();
            } else {
                return out;
            }
        }
    }

    RawExpression factor() {
        RawExpression out = primary();
        while (peek() == '*') {
            ++pos_;
            out = out.star();
        }
        return out;
    }

    std::string_view identifier() {
        skip_space();
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && !is_operator(text_[pos_]))
            ++pos_;
        return text_.substr(begin, pos_ - begin);
    }

    RawExpression primary() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of expression");
        if (c == '(') {
            ++pos_;
            RawExpression inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (is_operator(c)) fail("unexpected '" + std::string(1, c) + "'");

        const std::size_t begin = pos_;
        std::string_view id = identifier();
        if (id == "e" && pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            std::string_view v = identifier();
            auto idx = q_.vertex_index(v);
            if (!idx) {
                pos_ = begin;
                fail("unknown vertex '" + std::string(v) + "'");
            }
            if (peek() != ')') fail("expected ')' after vertex id");
            ++pos_;
            return RawExpression::letter(Letter::vertex(*idx));
        }
        if (auto a = q_.arrow_index(id)) return RawExpression::letter(Letter::arrow(*a));
        if (all_digits(id)) {
            Scalar value{mpz_class{std::string(id)}};
            if (peek() == '/') {
                ++pos_;
                skip_space();
                std::string_view den = identifier();
                if (!all_digits(den)) fail("expected denominator");
                mpz_class d(std::string{den});
                if (d == 0) fail("zero denominator");
                value /= Scalar(d);
            }
            return RawExpression::scalar(value);
        }
        pos_ = begin;
        fail("unknown arrow '" + std::string(id) + "'");
    }

    const Quiver& q_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RawExpression parse_expression(const Quiver& q, std::string_view text) { return ExpressionParser(q, text).parse(); }

}  // namespace lpk
