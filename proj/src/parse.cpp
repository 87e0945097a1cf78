#include "pcy/parse.hpp"

#include "pcy/errors.hpp"

namespace pcy {

namespace {

class Parser {
public:
    Parser(std::string_view text, RingPtr ring)
        : text_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !isdigit(text_[pos_]))
            fail("expected an unsigned integer");
        unsigned long v = 0;
        while (pos_ < text_.size() && isdigit(text_[pos_])) {
            unsigned long digit = static_cast<unsigned long>(text_[pos_] - '0');
            if (v > (~0ul - digit) / 10)
                fail("integer literal too large");
            v = v * 10 + digit;
            ++pos_;
        }
        return v;
    }

    static bool isdigit(char c) { return c >= '0' && c <= '9'; }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (accept('*'))
            acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        // '^' binds tighter than unary '-', so a leading minus negates the
        // whole factor that follows: -x0^2 is -(x0^2).
        if (accept('-'))
            return -parse_factor();
        Poly base = parse_base();
        if (accept('^')) {
            unsigned long e = parse_uint();
            Poly acc = Poly::constant(ring_, Rational(1));
            for (unsigned long i = 0; i < e; ++i)
                acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = parse_expr();
            skip_ws();
            if (!accept(')'))
                fail("expected ')'");
            return p;
        }
        if (c == 'x') {
            std::size_t at = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !isdigit(text_[pos_])) {
                pos_ = at;
                fail("expected a variable index after 'x'");
            }
            unsigned long idx = parse_uint();
            if (idx >= static_cast<unsigned long>(ring_->num_vars())) {
                pos_ = at;
                fail("variable index " + std::to_string(idx) +
                     " out of range for " + std::to_string(ring_->num_vars()) +
                     " variables");
            }
            return Poly::variable(ring_, static_cast<int>(idx));
        }
        if (c == 'z') {
            if (ring_->field()->root_order() == 1)
                fail("'z' is not available when the root order is 1");
            ++pos_;
            return Poly::constant(ring_, CycloScalar::zeta(ring_->field()));
        }
        if (isdigit(c)) {
            unsigned long num = parse_uint();
            if (accept('/')) {
                std::size_t at = pos_;
                unsigned long den = parse_uint();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                Rational r{Integer(num), Integer(den)};
                r.canonicalize();
                return Poly::constant(ring_, r);
            }
            return Poly::constant(ring_, Rational(Integer(num)));
        }
        fail("unexpected character");
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace pcy
