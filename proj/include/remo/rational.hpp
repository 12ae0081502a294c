#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace remo {

// Exact reduced fraction. Invariants: den > 0, gcd(|num|, den) == 1.
// All quantities in this project fit comfortably in int64 (numerators are
// bounded by n^2 * small factors at n <= 62), so no overflow guard is needed
// beyond the 128-bit intermediates used in comparisons and printing.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit

    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p/q", or just "p" when the value is an integer.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) { s += '/'; s += std::to_string(den_); }
        return s;
    }

    // Fixed-point decimal with `digits` fractional digits, ties rounded to even
    // (so 0.125 -> "0.12" and 0.375 -> "0.38" at two digits).
    std::string decimal(int digits = 6) const {
        if (digits < 0 || digits > 18) throw std::invalid_argument("rational: bad precision");
        unsigned __int128 scale = 1;
        for (int i = 0; i < digits; ++i) scale *= 10;
        bool neg = num_ < 0;
        unsigned __int128 scaled = (neg ? -static_cast<__int128>(num_) : static_cast<__int128>(num_)) * scale;
        unsigned __int128 q = scaled / den_;
        unsigned __int128 r = scaled % den_;
        unsigned __int128 twice = 2 * r;
        if (twice > static_cast<unsigned __int128>(den_) ||
            (twice == static_cast<unsigned __int128>(den_) && (q & 1)))
            ++q;
        std::string body;
        if (q == 0) body = "0";
        while (q > 0) { body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(q % 10))); q /= 10; }
        if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
        if (digits > 0) body.insert(body.size() - digits, ".");
        return (neg && (num_ != 0)) ? "-" + body : body;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    long long num_;
    long long den_;
};

}  // namespace remo
