#ifndef RICCI_RATIONAL_HPP
#define RICCI_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace ricci {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always normalized: gcd(|num|, den) = 1, den > 0.
// Serializes as "p/q" in lowest terms ("0/1" for zero).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}                // NOLINT: implicit by design
    Rational(long long n) : value_(n) {}          // NOLINT
    explicit Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }

    std::string str() const;
    static Rational parse(const std::string& text);

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// lcm helper for scaling measures to integer masses.
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace ricci

#endif  // RICCI_RATIONAL_HPP
