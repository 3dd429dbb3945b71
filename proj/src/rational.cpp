#include "plstrat/rational.hpp"

#include "plstrat/errors.hpp"

#include <cctype>

namespace plstrat {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

boost::multiprecision::mpz_int parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    boost::multiprecision::mpz_int v{std::string(s)};
    return negative ? boost::multiprecision::mpz_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    using boost::multiprecision::mpz_int;
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        mpz_int num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
        mpz_int den(std::string{den_text});
        if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    auto point = text.find('.');
    if (point == std::string_view::npos) return Rational(parse_integer(text, text));

    std::string_view int_part = text.substr(0, point);
    std::string_view frac_part = text.substr(point + 1);
    if (!frac_part.empty() && !all_digits(frac_part))
        fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.erase(0, 1);
    if (digits.empty() && frac_part.empty())
        fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    if (!digits.empty() && !all_digits(digits))
        fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    digits += frac_part;
    mpz_int num(digits.empty() ? std::string("0") : digits);
    mpz_int den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point operator-(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point operator+(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point operator*(const Rational& s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

}  // namespace plstrat
