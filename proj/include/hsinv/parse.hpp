/// Recursive-descent parser for polynomial expressions.
///
/// Grammar (ASCII, whitespace insensitive):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nonneg-integer)?
///   base   := literal | variable | '(' expr ')' | '-' base
///   literal := integer ('/' integer)?
/// Implicit multiplication is a syntax error.
#pragma once

#include <cctype>
#include <string>

#include "poly.hpp"

namespace hsinv {

class parse_error : public error {
public:
    parse_error(const std::string& msg, size_t pos)
        : error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

namespace detail {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    MPoly run() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    RingPtr ring_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    MPoly expr() {
        bool neg = false;
        if (peek() == '-') { ++pos_; neg = true; }
        MPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos_; acc += term(); }
            else if (c == '-') { ++pos_; acc -= term(); }
            else break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos_; acc *= factor(); }
            else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
                throw parse_error("implicit multiplication is not allowed, use '*'", pos_);
            else break;
        }
        return acc;
    }

    MPoly factor() {
        MPoly b = base();
        if (peek() == '^') {
            size_t caret = pos_;
            ++pos_;
            if (peek() == '-') throw parse_error("negative exponent", pos_);
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error("expected integer exponent after '^'", caret + 1);
            unsigned long e = read_uint();
            if (e > 64) throw parse_error("exponent too large", caret + 1);
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    MPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return p;
        }
        if (c == '-') { ++pos_; return -base(); }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        throw parse_error(pos_ >= text_.size() ? "unexpected end of input"
                                               : std::string("unexpected character '") + c + "'",
                          pos_);
    }

    unsigned long read_uint() {
        skip_ws();
        size_t start = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) throw parse_error("expected integer", start);
        return std::stoul(digits);
    }

    MPoly literal() {
        size_t start = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ < text_.size() && text_[pos_] == '.')
            throw parse_error("decimal literals are not accepted, use p/q", pos_);
        std::string lit = digits;
        size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected denominator", pos_);
            std::string den;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                den += text_[pos_++];
            lit += "/" + den;
        } else {
            pos_ = save;
        }
        try {
            return MPoly::constant(ring_, Rat::parse(lit));
        } catch (const error& e) {
            throw parse_error(e.what(), start);
        }
    }

    MPoly variable() {
        size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        int idx = ring_->index_of(name);
        if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
        return MPoly::variable(ring_, static_cast<size_t>(idx));
    }
};

}  // namespace detail

inline MPoly parse_poly(const std::string& text, RingPtr ring) {
    return detail::Parser(text, std::move(ring)).run();
}

// Variable names in order of first appearance; used when the caller did
// not specify a ring explicitly.
inline std::vector<std::string> scan_variables(const std::string& text) {
    std::vector<std::string> vars;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name += text[i++];
            if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
        } else {
            ++i;
        }
    }
    return vars;
}

}  // namespace hsinv
