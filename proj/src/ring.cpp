#include "hecke/ring.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace hecke {

namespace {

// "a+bi" / "a+bw" with explicit signs; shorthands "3", "i", "-i", "2i",
// "-1+2i" accepted.  No whitespace.
struct ParsedElt {
    std::int64_t a = 0, b = 0;
};

ParsedElt parse_text(const std::string& text, char letter) {
    const char* s = text.c_str();
    const char* p = s;
    auto fail = [&]() -> ParsedElt {
        throw std::invalid_argument("hecke: cannot parse element '" + text + "'");
    };
    auto read_term = [&](std::int64_t& re, std::int64_t& im) {
        int sign = 1;
        if (*p == '+' || *p == '-') {
            sign = (*p == '-') ? -1 : 1;
            ++p;
        }
        bool have_digits = std::isdigit((unsigned char)*p);
        std::int64_t v = 0;
        if (have_digits) {
            char* end = nullptr;
            errno = 0;
            v = std::strtoll(p, &end, 10);
            if (errno) fail();
            p = end;
        }
        if (*p == letter) {
            ++p;
            im = checked::add(im, sign * (have_digits ? v : 1));
        } else {
            if (!have_digits) fail();
            re = checked::add(re, sign * v);
        }
    };
    if (*p == '\0') fail();
    ParsedElt out;
    read_term(out.a, out.b);
    if (*p != '\0') read_term(out.a, out.b);
    if (*p != '\0') fail();
    return out;
}

} // namespace

template <>
GaussInt parse_elt<GaussInt>(const std::string& text) {
    auto v = parse_text(text, 'i');
    return {v.a, v.b};
}

template <>
EisInt parse_elt<EisInt>(const std::string& text) {
    auto v = parse_text(text, 'w');
    return {v.a, v.b};
}

std::complex<double> embed(GaussInt z) {
    return {(double)z.a, (double)z.b};
}

std::complex<double> embed(EisInt z) {
    static const std::complex<double> omega{-0.5, std::sqrt(3.0) / 2.0};
    return (double)z.a + (double)z.b * omega;
}

} // namespace hecke
