#include "ricci/rational.hpp"

#include "ricci/errors.hpp"

#include <ostream>

namespace ricci {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ParseError("rational with zero denominator");
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    return num().str() + "/" + den().str();
}

Rational Rational::parse(const std::string& text) {
    BigInt num, den = 1;
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            num = BigInt(text);
        } else {
            num = BigInt(text.substr(0, slash));
            den = BigInt(text.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ParseError("invalid rational: " + text);
    }
    if (den <= 0) throw ParseError("rational denominator must be positive: " + text);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

}  // namespace ricci
