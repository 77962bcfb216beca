#pragma once

// The extremal rotation number of a composition of two circle homeomorphisms
// with prescribed rotation numbers, evaluated exactly at rational arguments:
//
//   rot_max(x, y) = max over integer q >= 1 of (floor(q*x) + floor(q*y) + 1)/q
//
// together with its dual minimum, the closed interval between them, and the
// derived realizability predicate for triples.

#include <utility>

#include "ziglab/rational.hpp"

namespace ziglab {

struct RotMaxCertificate {
    Rational value;
    Int q;   // smallest maximizing denominator
    Int p1;  // floor(q*x)
    Int p2;  // floor(q*y)
};

// Defined for all rationals via rot_max(x+1, y) = rot_max(x, y) + 1.
Rational rot_max(const Rational& x, const Rational& y);

// Pre: x, y in [0,1).  Value plus the smallest maximizing q.
RotMaxCertificate rot_max_certificate(const Rational& x, const Rational& y);

// rot_min(x, y) = -rot_max(-x, -y).
Rational rot_min(const Rational& x, const Rational& y);

// {rot_min, rot_max}; every value in between is attained by some pair.
std::pair<Rational, Rational> rot_interval(const Rational& x, const Rational& y);

// Pre: x, y, z in [0,1).  True iff z <= rot_max(1-x, 1-y) - 1.
bool is_realizable(const Rational& x, const Rational& y, const Rational& z);

} // namespace ziglab
