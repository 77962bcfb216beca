#pragma once

// Exact rational scalar used everywhere in the library.  Values are always
// stored reduced with a positive denominator, so equality, ordering, and
// hashing are plain field comparisons.  No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ziglab/errors.hpp"

namespace ziglab {

using Int = boost::multiprecision::cpp_int;

// Floor division for b > 0 (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}          // NOLINT: implicit by design
    Rational(long long n) : num_(n), den_(1) {}               // NOLINT
    Rational(int n) : num_(n), den_(1) {}                     // NOLINT

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw UsageError("rational with zero denominator");
        normalize();
    }

    // Accepts "p/q", "p", optional leading sign, nothing else.
    static Rational parse(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return -floor_div(-num_, den_); }

    std::string str() const;           // "p/q", or "p" when integral
    std::string fraction_str() const;  // always "p/q"

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
        if (b.num_ == 0) throw DomainError("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication is exact; denominators are positive.
        int c = Int(a.num_ * b.den_).compare(Int(b.num_ * a.den_));
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

private:
    void normalize();

    Int num_;
    Int den_;  // > 0
};

// Reduced fraction n/d; the canonical way to build a Rational from raw parts.
inline Rational reduce(const Int& n, const Int& d) { return Rational(n, d); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ziglab

template <>
struct std::hash<ziglab::Rational> {
    std::size_t operator()(const ziglab::Rational& r) const {
        std::size_t h = boost::multiprecision::hash_value(r.num());
        std::size_t g = boost::multiprecision::hash_value(r.den());
        return h ^ (g + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
