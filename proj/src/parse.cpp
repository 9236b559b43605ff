#include "singulant/parse.hpp"

#include <cctype>

#include "singulant/error.hpp"

namespace singulant {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      message_(what), line_(line), column_(column)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring, std::span<const std::string> names)
        : text_(text), ring_(ring), names_(names)
    {
    }

    Polynomial expression()
    {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            advance();
            Polynomial t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
    }

    std::vector<Polynomial> list(char open, char close)
    {
        expect(open);
        std::vector<Polynomial> out;
        skip_ws();
        if (peek() == close) {
            advance();
            return out;
        }
        for (;;) {
            out.push_back(expression());
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(close);
            return out;
        }
    }

    PolyMatrix matrix()
    {
        expect('[');
        std::vector<std::vector<Polynomial>> rows;
        skip_ws();
        if (peek() == ']') {
            advance();
            return PolyMatrix(ring_, 0, 0);
        }
        for (;;) {
            skip_ws();
            std::size_t line = line_, col = col_;
            rows.push_back(list('[', ']'));
            if (rows.size() > 1 && rows.back().size() != rows.front().size())
                throw ParseError("matrix rows have different lengths", line, col);
            skip_ws();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(']');
            return PolyMatrix::from_rows(ring_, rows);
        }
    }

    void finish()
    {
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected character '") + peek() + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

private:
    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                advance();
                acc = acc * factor();
            } else if (c == '/') {
                advance();
                std::size_t line = line_, col = col_;
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("division only by a nonzero constant", line, col);
                acc = acc.scaled(ring_->field().inv(d.constant_term()));
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a non-negative integer exponent");
            b = b.pow(static_cast<unsigned>(std::stoul(digits())));
        }
        return b;
    }

    Polynomial base()
    {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, ring_->field().normalize(Scalar(mpz_class(digits()))));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t line = line_, col = col_;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                name += peek();
                advance();
            }
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name)
                    return Polynomial::variable(ring_, i);
            throw ParseError("unknown variable '" + name + "'", line, col);
        }
        if (c == '(') {
            advance();
            Polynomial e = expression();
            expect(')');
            return e;
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string digits()
    {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            s += peek();
            advance();
        }
        return s;
    }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    std::string_view text_;
    RingPtr ring_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::span<const std::string> names)
{
    Parser p(text, ring, names);
    Polynomial f = p.expression();
    p.finish();
    return f;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::span<const std::string> names)
{
    Parser p(text, ring, names);
    auto out = p.list('(', ')');
    p.finish();
    return out;
}

PolyMatrix parse_matrix(std::string_view text, const RingPtr& ring, std::span<const std::string> names)
{
    Parser p(text, ring, names);
    auto m = p.matrix();
    p.finish();
    return m;
}

}  // namespace singulant
