#pragma once

// Farey / Stern-Brocot machinery: mediants, neighbor tests, full Farey
// sequences, and minimal-denominator fraction search on a closed interval.

#include <optional>
#include <vector>

#include "ziglab/rational.hpp"

namespace ziglab {

// An adjacent pair of a Farey sequence: lo < hi in [0,1] with
// den(lo)*num(hi) - num(lo)*den(hi) == 1.  Construction validates.
struct FareyPair {
    Rational lo;
    Rational hi;
    FareyPair(Rational l, Rational h);
};

Rational mediant(const Rational& p, const Rational& q);

// Pre: p < q, both in [0,1].  True iff den(p)*num(q) - num(p)*den(q) == 1.
bool is_farey_neighbor(const Rational& p, const Rational& q);

// F_N ascending from 0/1 to 1/1, N >= 1.
std::vector<Rational> farey_sequence(long long n);

// The fraction of smallest denominator in the closed interval [lo, hi]
// (smallest numerator on ties, which only arise at denominator 1), or
// nullopt if every such fraction has denominator > max_den.
std::optional<Rational> min_den_fraction_in(const Rational& lo, const Rational& hi,
                                            const Int& max_den);

} // namespace ziglab
