#include "gls/rational.hpp"

#include <cctype>

namespace gls {

namespace {

BigInt parse_big(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    if (auto caret = text.find('^'); caret != std::string_view::npos) {
        // "b^e" with integer base and (possibly negative) integer exponent.
        const BigInt base = parse_big(text.substr(0, caret));
        std::string_view exp_text = text.substr(caret + 1);
        bool negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        const BigInt exponent = parse_big(exp_text);
        if (exponent < 0 || exponent > 100000) throw std::invalid_argument("exponent out of range");
        if (base <= 0) throw std::invalid_argument("power base must be positive");
        BigInt p = pow(base, exponent.convert_to<unsigned>());
        return negative ? Rational(1, p) : Rational(p);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_big(text.substr(0, slash));
        const BigInt den = parse_big(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    return Rational(parse_big(text));
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace gls
