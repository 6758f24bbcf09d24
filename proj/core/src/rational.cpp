#include "conekit/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace conekit {

double to_double(const Rational& x) { return x.convert_to<double>(); }

namespace {

std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    auto num = integer_sqrt_exact(boost::multiprecision::numerator(x));
    if (!num) return std::nullopt;
    auto den = integer_sqrt_exact(boost::multiprecision::denominator(x));
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

Rational rational_pow(const Rational& x, long k) {
    if (k < 0) {
        if (x == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return 1 / rational_pow(x, -k);
    }
    Rational result = 1, base = x;
    unsigned long e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

std::string format_rational(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    // decimal form: digits after the dot contribute a power-of-ten denominator
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
    bool negative = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = negative ? "-0" : "0";
    BigInt scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt integral(head);
    BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt num = boost::multiprecision::abs(integral) * scale + frac;
    if (negative) num = -num;
    return Rational(num, scale);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (x == 0.0) return 0;
    int exp = 0;
    double m = std::frexp(x, &exp);
    auto mant = static_cast<long long>(std::ldexp(m, 53));  // exact for finite doubles
    Rational r(mant);
    int e2 = exp - 53;
    if (e2 >= 0) r *= rational_pow(Rational(2), e2);
    else r /= rational_pow(Rational(2), -e2);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace conekit
