#pragma once

// Independent combinatorial oracle for extremal composition rotation numbers:
// monotone degree-one self-maps of Z that commute with translation by n
// ("lifts" of circle maps on a circle of circumference n).  Exhaustive search
// over compositions of such maps bounds-checks rot_max / rot_min from a
// direction that shares no code with the formula.

#include <optional>
#include <span>
#include <vector>

#include "ziglab/rational.hpp"
#include "ziglab/report.hpp"

namespace ziglab {

// sigma(i + k*n) = values[i mod n] + k*n with
// values[0] <= ... <= values[n-1] <= values[0] + n and values[0] in [0, n).
// Canonical form quotients translation by multiples of n only.
struct MonotoneLift {
    long long n;
    std::vector<long long> values;

    MonotoneLift(long long period, std::vector<long long> vals);

    Int sigma(const Int& i) const;

    friend bool operator==(const MonotoneLift&, const MonotoneLift&) = default;
};

// lim sigma^k(start) / (k*n), computed exactly: iterate the orbit until a
// residue mod n repeats, then read drift / (cycle * n) off the cycle.
Rational rotation_number(const MonotoneLift& f, const Int& start = 0);

// Same, for a raw value vector that need not be canonical.
Rational rotation_number_raw(long long n, std::span<const long long> values);

// f after g, re-canonicalized (which shifts the rotation number by an integer;
// see composition_rotation for the honest value).
MonotoneLift compose(const MonotoneLift& f, const MonotoneLift& g);

// Rotation number of the un-shifted composition f after g.
Rational composition_rotation(const MonotoneLift& f, const MonotoneLift& g);

// All canonical lifts of period n in lexicographic order of the value vector,
// optionally filtered by exact rotation number.  Guarded by a period limit
// (10) unless allow_large.
std::vector<MonotoneLift> enumerate_lifts(long long n,
                                          const std::optional<Rational>& rot = std::nullopt,
                                          bool allow_large = false);

struct MaxCompositionResult {
    Rational value;
    MonotoneLift f, g;  // first maximizer in enumeration order
};

// Exhaustive max of composition_rotation(f, g) over lifts with
// rotation_number(f) = x, rotation_number(g) = y.  Pre: x, y in [0,1).
// DomainError when a filter is empty.
MaxCompositionResult max_composition(const Rational& x, const Rational& y, long long n,
                                     bool allow_large = false);

// For every pair of period-n lifts, n <= max_n:
//   rot_min(rot f, rot g) <= composition_rotation(f, g) <= rot_max(rot f, rot g).
Report verify_oracle_bound(long long max_n, bool allow_large = false);

} // namespace ziglab
