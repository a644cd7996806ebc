#include "genmat/parser.hpp"

#include <cctype>
#include <string>

#include "genmat/errors.hpp"

namespace genmat {

namespace {

class Parser {
public:
    Parser(std::string_view text, int m, std::optional<int> n)
        : text_(text), m_(m), n_(n) {}

    TracePolynomial run() {
        TracePolynomial p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::uint64_t nat() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > 1'000'000'000ULL) fail("number too large");
            ++pos_;
        }
        return v;
    }

    TracePolynomial expr() {
        TracePolynomial p = term();
        while (true) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                return p;
        }
    }

    TracePolynomial term() {
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        TracePolynomial p = factor();
        while (eat('*')) p = p * factor();
        return negative ? -p : p;
    }

    TracePolynomial factor() {
        TracePolynomial a = atom();
        if (eat('^')) {
            const std::size_t at = pos_;
            const std::uint64_t k = nat();
            if (k > 64) throw ParseError("exponent too large", at);
            return a.pow(static_cast<int>(k));
        }
        return a;
    }

    TracePolynomial atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_atom();
        if (c == 'X') {
            ++pos_;
            const std::uint64_t idx = nat();
            if (idx < 1 || idx > static_cast<std::uint64_t>(m_))
                throw ParseError("unknown generator X" + std::to_string(idx) +
                                     " (m = " + std::to_string(m_) + ")",
                                 at);
            return TracePolynomial::variable(m_, static_cast<int>(idx));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return call_atom();
        if (c == '[') {
            ++pos_;
            TracePolynomial lhs = expr();
            expect(',');
            TracePolynomial rhs = expr();
            expect(']');
            return lhs * rhs - rhs * lhs;
        }
        if (c == '(') {
            ++pos_;
            TracePolynomial inner = expr();
            expect(')');
            return inner;
        }
        fail("expected a rational, X<i>, tr(...), det(...), [...], or (...)");
    }

    TracePolynomial rational_atom() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected denominator digits");
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        Rational value;
        try {
            value = parse_rational(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start);
        }
        return TracePolynomial::constant(m_, value);
    }

    TracePolynomial call_atom() {
        skip_ws();
        const std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];
        if (name != "tr" && name != "det")
            throw ParseError("unknown name '" + name + "'", at);
        expect('(');
        TracePolynomial inner = expr();
        expect(')');
        if (name == "tr") {
            try {
                return trace_of(inner, n_);
            } catch (const PreconditionError&) {
                throw ParseError("tr of a term with a constant part needs n", at);
            }
        }
        if (!n_) throw ParseError("det(...) needs the matrix size n", at);
        return det_of(inner, *n_);
    }

    std::string_view text_;
    int m_;
    std::optional<int> n_;
    std::size_t pos_ = 0;
};

}  // namespace

TracePolynomial parse_expression(std::string_view text, int m, std::optional<int> n) {
    if (m < 0) throw PreconditionError("generator count must be nonnegative");
    return Parser(text, m, n).run();
}

}  // namespace genmat
