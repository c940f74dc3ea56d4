#include "fibtc/parser.hpp"

#include <cctype>

namespace fibtc {

ParseError::ParseError(const std::string& message, std::size_t position)
    : AlgebraError(message + " at position " + std::to_string(position)), position_(position)
{
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const SignaturePtr& sig) : text_(text), sig_(sig) {}

    Polynomial parse_all()
    {
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    int peek()
    {
        skip_space();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_factor()
    {
        int c = peek();
        return c == '(' || (c >= 0 && std::isalnum(c));
    }

    Polynomial expr()
    {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        while (accept('^'))
            base = pow(base, unsigned_integer().convert_to<std::uint64_t>());
        return base;
    }

    Integer unsigned_integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial primary()
    {
        int c = peek();
        if (c < 0)
            throw ParseError("unexpected end of expression", pos_);
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(c))
            return Polynomial::constant(sig_, unsigned_integer());
        if (std::isalpha(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!sig_->index_of(name))
                throw ParseError("unknown generator '" + name + "'", start);
            return Polynomial::variable(sig_, name);
        }
        throw ParseError(std::string("unexpected '") + static_cast<char>(c) + "'", pos_);
    }

    std::string_view text_;
    const SignaturePtr& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const SignaturePtr& sig)
{
    return Parser(text, sig).parse_all();
}

}  // namespace fibtc
