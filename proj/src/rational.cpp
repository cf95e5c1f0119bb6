#include "olines/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace olines {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
    };
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };
    mpz_class num(digits());
    mpz_class den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
    }
    if (pos != text.size()) fail("trailing characters");
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
}

}  // namespace olines
