#pragma once

// Two box descriptions of the realizable region {(x,y,z) : z <= rot_max(1-x,1-y) - 1}
// over the unit square, and the machine check that they coincide:
//
//   * "good" boxes  Pi(a/m, (m-a)/m, 1/m) and coordinate permutations, gcd(a,m)=1;
//   * parameter boxes Pi(p1/q, p2/q, p3/q) with p1 + p2 + p3 = q + 1.
//
// find_good_cover exhibits, for every non-degenerate parameter box, a good box
// that contains it and has denominator at most q; verify_minimality checks that
// no good box ever contains another.

#include <compare>
#include <set>
#include <vector>

#include "ziglab/rational.hpp"
#include "ziglab/report.hpp"

namespace ziglab {

// Axis-aligned box [0,ax] x [0,ay] x [0,az] inside the unit cube,
// identified by its far corner.
struct Box {
    Rational ax, ay, az;
    friend bool operator==(const Box&, const Box&) = default;
    friend std::strong_ordering operator<=>(const Box& a, const Box& b) {
        if (auto c = a.ax <=> b.ax; c != 0) return c;
        if (auto c = a.ay <=> b.ay; c != 0) return c;
        return a.az <=> b.az;
    }
};

// Parameters (p1, p2, p3, q) with p1 + p2 + p3 = q + 1, 0 <= p1, p2 <= q,
// p3 >= 0.  Degenerate means some p_i = 0.
struct CwBoxParams {
    long long p1, p2, p3, q;
    friend bool operator==(const CwBoxParams&, const CwBoxParams&) = default;
    bool degenerate() const { return p1 == 0 || p2 == 0 || p3 == 0; }
};

// The induced box Pi(p1/q, p2/q, p3/q); extents clip to 1 (the solid lives in
// the unit cube, and the degenerate triple (0, 0, q+1) would poke above it).
Box box_of(const CwBoxParams& c);

// True iff the corner is a permutation of (1/q, p/q, (q-p)/q), gcd(p,q)=1, q >= 2.
bool is_good(const Box& b);

bool contains(const Box& outer, const Box& inner);

// All good boxes with denominator at most max_den (>= 2), deduplicated.
std::set<Box> enumerate_good(long long max_den);

// All parameter triples with q <= max_den (>= 1), ordered by (q, p1, p2).
std::vector<CwBoxParams> enumerate_cw(long long max_den, bool include_degenerate);

// A good box of denominator n <= q containing box_of(c), with the smallest
// such n (then smallest numerator).  Throws DomainError on degenerate input.
Box find_good_cover(const CwBoxParams& c);

// Every non-degenerate parameter box with q <= max_den is contained in its
// good cover, and the cover denominator never exceeds q.
Report verify_equivalence(long long max_den);

// No good box with denominator <= max_den contains a different one.
Report verify_minimality(long long max_den);

} // namespace ziglab
