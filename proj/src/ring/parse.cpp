#include <cctype>

#include "bv/ring.hpp"

namespace bv {
namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RationalExpr run() {
        RationalExpr e = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool starts_primary() {
        skip();
        if (i_ >= s_.size()) return false;
        unsigned char c = static_cast<unsigned char>(s_[i_]);
        return std::isalnum(c) || c == '(' || c == '_';
    }

    RationalExpr expr() {
        RationalExpr a = term();
        while (true) {
            if (peek('+')) {
                ++i_;
                a += term();
            } else if (peek('-')) {
                ++i_;
                a -= term();
            } else {
                return a;
            }
        }
    }

    RationalExpr term() {
        RationalExpr a = unary();
        while (true) {
            if (peek('*')) {
                ++i_;
                a *= unary();
            } else if (peek('/')) {
                ++i_;
                RationalExpr b = unary();
                if (b.is_zero()) fail("division by zero");
                a = a / b;
            } else if (starts_primary()) {
                a *= power();
            } else {
                return a;
            }
        }
    }

    RationalExpr unary() {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        return power();
    }

    RationalExpr power() {
        RationalExpr b = primary();
        if (peek('^')) {
            ++i_;
            skip();
            bool neg = false;
            if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
            if (peek('(')) {
                ++i_;
                skip();
                if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = (s_[i_++] == '-') != neg;
                long k = integer();
                if (!peek(')')) fail("expected ')'");
                ++i_;
                return b.pow(static_cast<int>(neg ? -k : k));
            }
            long k = integer();
            if (neg && b.is_zero()) fail("zero to a negative power");
            return b.pow(static_cast<int>(neg ? -k : k));
        }
        return b;
    }

    long integer() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected integer");
        return std::stol(s_.substr(st, i_ - st));
    }

    RationalExpr primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            RationalExpr e = expr();
            if (!peek(')')) fail("expected ')'");
            ++i_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return RationalExpr(Scalar(mpq_class(mpz_class(s_.substr(st, i_ - st)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = i_;
            while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return RationalExpr::variable(s_.substr(st, i_ - st));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

RationalExpr parse_expr(const std::string& text) { return Parser(text).run(); }

}  // namespace bv
