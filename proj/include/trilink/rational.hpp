#ifndef TRILINK_RATIONAL_HPP
#define TRILINK_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace trilink {

// Exact rational arithmetic on 64-bit integers. Counts in this project are
// tiny (pattern counts on diagrams with a few dozen arrows), so no bignum.
struct rational {
    long long num = 0;
    long long den = 1;

    rational() = default;
    rational(long long n) : num(n), den(1) {}
    rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }

    long long as_integer() const {
        if (den != 1)
            throw std::domain_error("rational: not an integer: " + str());
        return num;
    }

    // "p/q" for proper fractions, plain "n" for integers.
    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num * b.num, a.den * b.den);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num == 0)
            throw std::domain_error("rational: division by zero");
        return rational(a.num * b.den, a.den * b.num);
    }
    rational operator-() const { return rational(-num, den); }
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }
};

// Parses "p/q" or "n". Throws std::invalid_argument on malformed input.
rational parse_rational(const std::string& text);

}  // namespace trilink

#endif
