#pragma once

#include <cctype>
#include <string>

#include "gradloci/polynomial.hpp"

namespace gradloci {

// Recursive-descent parser for the textual polynomial grammar:
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ['^' integer]
//   atom    := rational | name | '(' expr ')'
//   rational:= integer ['/' integer]
//   name    := ident ['[' integer (',' integer)* ']']
//
// Names must be declared in the ring; "c[5,3]"-style indexed names are
// matched verbatim against the declared symbol strings.
class PolyParser {
public:
    PolyParser(std::string text, RingPtr ring) : s_(std::move(text)), ring_(std::move(ring)) {}

    PolyQ parse() {
        PolyQ p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at position " + std::to_string(pos_) + ": " + msg +
                         " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::string read_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return s_.substr(start, pos_ - start);
    }

    PolyQ parse_expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        PolyQ acc = parse_term();
        if (neg) acc = poly_neg(acc);
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                PolyQ t = parse_term();
                acc = (c == '+') ? poly_add(acc, t) : poly_sub(acc, t);
            } else {
                return acc;
            }
        }
    }

    PolyQ parse_term() {
        PolyQ acc = parse_factor();
        while (eat('*')) acc = poly_mul(acc, parse_factor());
        return acc;
    }

    PolyQ parse_factor() {
        PolyQ base = parse_atom();
        if (eat('^')) {
            if (peek() == '-') fail("negative exponent");
            std::string e = read_integer();
            long exp = std::stol(e);
            return poly_pow(base, exp);
        }
        return base;
    }

    PolyQ parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQ p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_integer();
            if (peek() == '/') {
                ++pos_;
                std::string den = read_integer();
                Rational q = rat_parse(num + "/" + den);
                return polyq_const(ring_, q);
            }
            return polyq_const(ring_, rat_parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        fail("expected atom");
    }

    PolyQ parse_name() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '[') {
            size_t close = s_.find(']', pos_);
            if (close == std::string::npos) fail("unterminated indexed name");
            name += s_.substr(pos_, close - pos_ + 1);
            pos_ = close + 1;
        }
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown name '" + name + "' in ring " + ring_->describe());
        return polyq_var(ring_, *idx);
    }

    std::string s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

inline PolyQ parse_poly(const std::string& text, const RingPtr& ring) {
    return PolyParser(text, ring).parse();
}

inline std::vector<PolyQ> parse_polys(const std::vector<std::string>& texts, const RingPtr& ring) {
    std::vector<PolyQ> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_poly(t, ring));
    return out;
}

}  // namespace gradloci
