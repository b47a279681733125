#include "segrecalc/parse.hpp"

#include <cctype>

#include "segrecalc/errors.hpp"

namespace segrecalc {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring, TermOrder order)
        : text_(text), ring_(std::move(ring)), order_(order) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    Poly expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        bool ended_with_paren = false;
        Poly acc = factor(ended_with_paren);
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor(ended_with_paren);
            } else if (ended_with_paren && starts_primary(c)) {
                // implicit multiplication, allowed only after ')'
                acc = acc * factor(ended_with_paren);
            } else {
                return acc;
            }
        }
    }

    Poly factor(bool& ended_with_paren) {
        Poly base = primary(ended_with_paren);
        if (peek() == '^') {
            ++pos_;
            unsigned e = natural("exponent");
            ended_with_paren = false;
            Poly acc = Poly::constant(ring_, 1, order_);
            for (unsigned i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly primary(bool& ended_with_paren) {
        ended_with_paren = false;
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            ++pos_;
            ended_with_paren = true;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer_poly();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable_poly();
        throw parse_error("expected a number, variable or '('", pos_);
    }

    Poly integer_poly() {
        const PrimeField& F = ring_->field();
        std::uint32_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            // digit-wise reduction keeps arbitrarily long literals exact mod p
            value = F.add(F.mul(value, 10 % F.modulus()),
                          static_cast<std::uint32_t>(text_[pos_] - '0') % F.modulus());
            ++pos_;
        }
        return Poly::constant(ring_, static_cast<long long>(value), order_);
    }

    unsigned natural(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error(std::string("expected ") + what, pos_);
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 60000) throw parse_error(std::string(what) + " too large", pos_);
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    Poly variable_poly() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        int idx = ring_->var_index(name);
        if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
        return Poly::variable(ring_, idx, order_);
    }

    const std::string& text_;
    RingPtr ring_;
    TermOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, RingPtr ring, TermOrder order) {
    return Parser(text, std::move(ring), order).run();
}

}  // namespace segrecalc
