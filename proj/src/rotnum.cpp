#include "ziglab/rotnum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ziglab {

namespace {

// Scan f(q) = (floor(q*x) + floor(q*y) + 1)/q for x, y in [0,1).
//
// The scan range {1, ..., L} with L = lcm(den x, den y) provably contains a
// maximizer: f(L) = x + y + 1/L because L*x and L*y are integers, while for
// any q > L we have f(q) <= x + y + 1/q < x + y + 1/L = f(L).  The same
// estimate justifies stopping early: once the running best M satisfies
// M >= x + y + 1/q, no larger q can beat it.  Scanning upward and keeping
// strict improvements only makes the reported q the smallest maximizer.
RotMaxCertificate scan_unit(const Rational& x, const Rational& y) {
    const Int& xn = x.num();
    const Int& xd = x.den();
    const Int& yn = y.num();
    const Int& yd = y.den();
    const Int L = boost::multiprecision::lcm(xd, yd);
    const Rational s = x + y;

    Int best_n = 1, best_d = 1;  // best value as a raw (possibly unreduced) fraction
    Int best_q = 1, best_p1 = 0, best_p2 = 0;
    bool have_best = false;
    Int limit = L;

    for (Int q = 1; q <= limit; ++q) {
        Int p1 = (q * xn) / xd;
        Int p2 = (q * yn) / yd;
        Int num = p1 + p2 + 1;
        if (!have_best || num * best_d > best_n * q) {
            best_n = num;
            best_d = q;
            best_q = q;
            best_p1 = p1;
            best_p2 = p2;
            have_best = true;
            // Tighten the limit: q' >= ceil(t_den/t_num) implies 1/q' <= M - s.
            Rational t = Rational(best_n, best_d) - s;
            if (t.num() > 0) {
                Int stop = -floor_div(-t.den(), t.num());  // ceil
                Int cut = stop - 1;
                if (cut < limit) limit = cut;
            }
        }
    }
    return {Rational(best_n, best_d), best_q, best_p1, best_p2};
}

void require_unit(const Rational& v, const char* name) {
    if (v < 0 || v >= 1)
        throw UsageError(std::string(name) + " must lie in [0, 1), got " + v.str());
}

} // namespace

Rational rot_max(const Rational& x, const Rational& y) {
    // rot_max(x + 1, y) = rot_max(x, y) + 1, so shift both arguments to [0,1).
    Int kx = x.floor(), ky = y.floor();
    Rational x0 = x - Rational(kx);
    Rational y0 = y - Rational(ky);
    return scan_unit(x0, y0).value + Rational(kx + ky);
}

RotMaxCertificate rot_max_certificate(const Rational& x, const Rational& y) {
    require_unit(x, "x");
    require_unit(y, "y");
    return scan_unit(x, y);
}

Rational rot_min(const Rational& x, const Rational& y) {
    return -rot_max(-x, -y);
}

std::pair<Rational, Rational> rot_interval(const Rational& x, const Rational& y) {
    return {rot_min(x, y), rot_max(x, y)};
}

bool is_realizable(const Rational& x, const Rational& y, const Rational& z) {
    require_unit(x, "x");
    require_unit(y, "y");
    require_unit(z, "z");
    return z <= rot_max(Rational(1) - x, Rational(1) - y) - Rational(1);
}

} // namespace ziglab
