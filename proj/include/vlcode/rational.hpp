#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlcode {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always reduced, denominator >= 1.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(long n) : num(n) {}
    Rational(BigInt n, BigInt d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    std::string str() const; // "p/q"
};

// A measure value: a nonnegative rational or infinity (divergent series).
struct Measure {
    bool infinite = false;
    Rational value;

    static Measure inf() { return Measure{true, Rational()}; }
    static Measure of(Rational r) { return Measure{false, std::move(r)}; }
    std::string str() const { return infinite ? "inf" : value.str(); }
    bool operator==(const Measure& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

} // namespace vlcode
