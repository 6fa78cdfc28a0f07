#pragma once

// Recursive-descent parser shared by the scalar and polynomial text formats.
//
//   expr    := ['+'|'-'] term { ('+'|'-') term }
//   term    := factor { ('*'|'/') factor }
//   factor  := primary [ '^' integer ]
//   primary := integer | identifier | '(' expr ')'
//
// Ops supplies: Value from_integer(BigInt), Value identifier(string_view),
// Value divide(Value, Value), Value power(Value, unsigned).

#include "bsv/errors.hpp"
#include "bsv/scalars.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

namespace bsv::detail {

template <class Value, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, Ops& ops, std::size_t line = 0, std::size_t column_offset = 0)
        : text_(text), ops_(ops), line_(line), column_offset_(column_offset) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, line_ == 0 ? 1 : line_, column_offset_ + pos_ + 1);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Value acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Value term() {
        Value acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t const at = pos_;
                Value d = factor();
                try {
                    acc = ops_.divide(acc, d);
                } catch (DivisionByZero const&) {
                    pos_ = at;
                    fail("division by zero");
                } catch (Error const& e) {
                    pos_ = at;
                    fail(e.what());
                }
            } else {
                return acc;
            }
        }
    }

    Value factor() {
        Value base = primary();
        if (accept('^')) {
            skip_ws();
            std::size_t const start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected non-negative integer exponent");
            if (pos_ - start > 6)
                fail("exponent too large");
            unsigned const e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            return ops_.power(base, e);
        }
        return base;
    }

    Value primary() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char const c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')'))
                fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t const start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return ops_.from_integer(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t const start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view const name = text_.substr(start, pos_ - start);
            try {
                return ops_.identifier(name);
            } catch (ParseError const&) {
                throw;
            } catch (Error const& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Ops& ops_;
    std::size_t line_;
    std::size_t column_offset_;
    std::size_t pos_ = 0;
};

} // namespace bsv::detail
