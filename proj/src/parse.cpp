#include "rq/parse.hpp"

#include <cctype>

#include "rq/errors.hpp"

namespace rq {

namespace {

class Parser {
public:
    Parser(const std::string& s, Field f) : s_(s), f_(f) {}

    TriForm parse() {
        TriForm r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    TriForm expr() {
        skip();
        // leading sign is a no-op in characteristic two
        if (peek('-') || peek('+')) ++pos_;
        TriForm r = term();
        while (peek('+') || peek('-')) {
            ++pos_;
            r += term();
        }
        return r;
    }

    TriForm term() {
        TriForm r = power();
        while (peek('*') || peek('/')) {
            char op = s_[pos_++];
            size_t at = pos_;
            TriForm rhs = power();
            if (op == '*') {
                r = r * rhs;
            } else {
                if (!rhs.is_constant()) {
                    pos_ = at;
                    fail("division by a non-scalar form");
                }
                if (rhs.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                r = r.scale(rhs.constant_term().inv());
            }
        }
        return r;
    }

    unsigned integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + unsigned(s_[pos_++] - '0');
            if (v > 1000000) fail("exponent too large");
        }
        return unsigned(v);
    }

    TriForm power() {
        TriForm b = atom();
        while (peek('^')) {
            ++pos_;
            b = b.pow(integer());
        }
        return b;
    }

    TriForm atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TriForm r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int last = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) last = s_[pos_++] - '0';
            return TriForm::constant(f_, uint64_t(last & 1));
        }
        ++pos_;
        switch (c) {
            case 't': return TriForm::constant(ScalarK::t(f_));
            case 'g': return TriForm::constant(f_, f_->gen());
            case 'x': return TriForm::var(f_, X);
            case 'y': return TriForm::var(f_, Y);
            case 'z': return TriForm::var(f_, Z);
        }
        --pos_;
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    Field f_;
    size_t pos_ = 0;
};

}  // namespace

TriForm parse_form(const std::string& text, Field f) { return Parser(text, f).parse(); }

ScalarK parse_element(const std::string& text, Field f) {
    TriForm r = parse_form(text, f);
    if (!r.is_constant()) throw SyntaxError("syntax error at position 0: expected a scalar, got a form");
    return r.constant_term();
}

FormFq parse_form_fq(const std::string& text, Field f) {
    auto r = to_fq(parse_form(text, f));
    if (!r) throw SyntaxError("syntax error at position 0: form has coefficients involving t");
    return *r;
}

std::string form_to_string(const TriForm& f) { return poly_to_string(f, "xyz"); }
std::string form_to_string(const FormFq& f) { return poly_to_string(f, "xyz"); }

}  // namespace rq
