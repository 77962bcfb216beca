#include "ziglab/farey.hpp"

namespace ziglab {

namespace {

Int neighbor_det(const Rational& p, const Rational& q) {
    return p.den() * q.num() - p.num() * q.den();
}

void require_unit_interval_pair(const Rational& p, const Rational& q) {
    if (!(p < q)) throw UsageError("expected p < q");
    if (p < 0 || q > 1) throw UsageError("expected fractions in [0, 1]");
}

} // namespace

FareyPair::FareyPair(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    require_unit_interval_pair(lo, hi);
    if (neighbor_det(lo, hi) != 1)
        throw UsageError("not Farey neighbors: " + lo.str() + ", " + hi.str());
}

Rational mediant(const Rational& p, const Rational& q) {
    return Rational(p.num() + q.num(), p.den() + q.den());
}

bool is_farey_neighbor(const Rational& p, const Rational& q) {
    require_unit_interval_pair(p, q);
    return neighbor_det(p, q) == 1;
}

std::vector<Rational> farey_sequence(long long n) {
    if (n < 1) throw UsageError("Farey order must be >= 1");
    std::vector<Rational> out;
    // Classic next-term recurrence on consecutive elements a/b < c/d.
    long long a = 0, b = 1, c = 1, d = n;
    out.emplace_back(Rational(a, b));
    while (c <= n) {
        long long k = (n + b) / d;
        long long a2 = c, b2 = d;
        c = k * c - a;
        d = k * d - b;
        a = a2;
        b = b2;
        out.emplace_back(Rational(a, b));
    }
    return out;
}

std::optional<Rational> min_den_fraction_in(const Rational& lo, const Rational& hi,
                                            const Int& max_den) {
    if (lo > hi) throw UsageError("empty interval: lo > hi");
    if (max_den < 1) throw UsageError("max_den must be >= 1");

    // Denominator-1 candidates first; ceil(lo) is the smallest numerator.
    Int k = lo.ceil();
    if (Rational(k) <= hi) return Rational(k);

    // No integer inside, so [lo, hi] sits strictly between f and f+1.
    // Walk the Stern-Brocot tree of (0,1): every fraction strictly between the
    // current bounds a/b < c/d is k*(a,b) + l*(c,d) with k, l >= 1, so its
    // denominator is at least b + d with equality only for the mediant.
    // Hence the first mediant that lands in the interval has the smallest
    // denominator, and b + d only grows, which bounds the loop.
    Int f = lo.floor();
    Rational flo = lo - Rational(f);
    Rational fhi = hi - Rational(f);
    Int a = 0, b = 1, c = 1, d = 1;
    while (true) {
        Int mn = a + c, md = b + d;
        if (md > max_den) return std::nullopt;
        Rational m(mn, md);
        if (m < flo) {
            a = mn;
            b = md;
        } else if (m > fhi) {
            c = mn;
            d = md;
        } else {
            return Rational(mn + f * md, md);
        }
    }
}

} // namespace ziglab
