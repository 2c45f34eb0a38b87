#include "toricap/rational.hpp"

#include <cctype>

#include "toricap/errors.hpp"

namespace toricap {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw InputError("rational with zero denominator");
    // cpp_rational reduces to lowest terms but requires a positive
    // denominator, so fold the sign into the numerator first.
    if (den < 0) {
        v_ = Value(BigInt(-num), BigInt(-den));
    } else {
        v_ = Value(num, den);
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InputError("division by zero");
    return Rational(Rational::Value(a.v_ / b.v_));
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw InputError("empty rational");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den.is_zero()) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = num().str();
    if (den() != 1) {
        out += '/';
        out += den().str();
    }
    return out;
}

BigInt Rational::floor() const {
    BigInt q = num() / den();  // truncates toward zero
    if (sign() < 0 && q * den() != num()) --q;
    return q;
}

BigInt Rational::ceil() const {
    BigInt q = num() / den();
    if (sign() > 0 && q * den() != num()) ++q;
    return q;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_decimal(const Rational& r, int places) {
    if (places < 0) throw InputError("negative decimal precision");
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt n = r.num() < 0 ? BigInt(-r.num()) : r.num();
    BigInt d = r.den();
    BigInt q = n * scale / d;
    BigInt rem = n * scale % d;
    if (2 * rem >= d) ++q;  // round half away from zero
    std::string digits = q.str();
    std::string out;
    if (r.sign() < 0 && !q.is_zero()) out += '-';
    if (places == 0) return out + digits;
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
    return out + digits;
}

}  // namespace toricap
