#include "ziglab/rational.hpp"

#include <ostream>

namespace ziglab {

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return UsageError("not a fraction: '" + std::string(s) + "'"); };
    size_t pos = 0;
    auto read_int = [&]() -> Int {
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw bad();
        Int v(std::string(s.substr(start, pos - start)));
        return neg ? Int(-v) : v;
    };
    Int n = read_int();
    Int d = 1;
    if (pos < s.size()) {
        if (s[pos] != '/') throw bad();
        ++pos;
        d = read_int();
        if (d == 0) throw bad();
    }
    if (pos != s.size()) throw bad();
    return Rational(n, d);
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

std::string Rational::fraction_str() const {
    return num_.str() + '/' + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ziglab
