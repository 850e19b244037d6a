#include "mixedfair/rational.hpp"

#include <cctype>
#include <sstream>

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("invalid rational literal: \"" + std::string(text) + "\"");
    }
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0) {
        throw ParseError("zero denominator in rational literal: \"" + std::string(text) + "\"");
    }
    if (negative) p = -p;
    return Rational(p, q);
}

std::string rational_to_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) {
        out << '/' << denominator(value);
    }
    return out.str();
}

std::string rational_to_decimal(const Rational& value, int digits) {
    Integer p = numerator(value);
    const Integer q = denominator(value);
    std::ostringstream out;
    if (p < 0) {
        out << '-';
        p = -p;
    }
    out << (p / q);
    Integer rem = p % q;
    if (rem != 0 && digits > 0) {
        out << '.';
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            out << (rem / q);
            rem %= q;
        }
    }
    return out.str();
}

} // namespace mixedfair
