#include "genmat/rational.hpp"

#include <cctype>

#include "genmat/errors.hpp"

namespace genmat {

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what, start);
        return std::string(text.substr(start, pos - start));
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer num(digits("numerator digits"));
    Integer den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = Integer(digits("denominator digits"));
        if (den == 0) throw ParseError("zero denominator", pos - 1);
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
    if (negative) num = -num;
    // Division canonicalizes; the mpq two-argument constructor does not
    // reduce and mishandles negative denominators.
    return Rational(num) / Rational(den);
}

}  // namespace genmat
