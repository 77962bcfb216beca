#include <doctest.h>

#include <random>

#include "ziglab/farey.hpp"
#include "ziglab/rotnum.hpp"

using namespace ziglab;

namespace {

// Direct evaluation of max over 1 <= q <= 3*lcm(den x, den y) of
// (floor(qx) + floor(qy) + 1)/q, with no early exit and no shifting tricks.
// Scanning three times past the lcm doubles as a check that the library's
// q <= lcm search bound loses nothing.
Rational rot_max_brute(const Rational& x, const Rational& y, Int* arg_q = nullptr) {
    Int l = boost::multiprecision::lcm(x.den(), y.den());
    Rational best;
    Int best_q = 0;
    for (Int q = 1; q <= 3 * l; ++q) {
        Rational f = Rational((Rational(q) * x).floor() + (Rational(q) * y).floor() + 1, q);
        if (best_q == 0 || f > best) {
            best = f;
            best_q = q;
        }
    }
    if (arg_q) *arg_q = best_q;
    return best;
}

std::vector<Rational> unit_grid(long long max_den) {
    auto f = farey_sequence(max_den);
    f.pop_back();  // drop 1; the grid lives in [0,1)
    return f;
}

} // namespace

TEST_CASE("pinned maxima") {
    CHECK(rot_max(Rational(0), Rational(0)) == Rational(1));
    CHECK(rot_max(Rational(1, 2), Rational(1, 2)) == Rational(3, 2));
    CHECK(rot_max(Rational(2, 3), Rational(1, 3)) == Rational(4, 3));
    CHECK(rot_max(Rational(2, 5), Rational(1, 5)) == Rational(1));
    CHECK(rot_max(Rational(2, 3), Rational(1, 2)) == Rational(3, 2));
    CHECK(rot_max(Rational(1, 3), Rational(2, 3)) == Rational(4, 3));
    CHECK(rot_max(Rational(3, 2), Rational(1, 2)) == Rational(5, 2));
    CHECK(rot_max(Rational(-1, 2), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("pinned minima and intervals") {
    CHECK(rot_min(Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
    CHECK(rot_min(Rational(1, 3), Rational(1, 3)) == Rational(1, 3));
    CHECK(rot_min(Rational(0), Rational(0)) == Rational(-1));
    auto [lo, hi] = rot_interval(Rational(1, 3), Rational(2, 3));
    CHECK(lo == Rational(2, 3));
    CHECK(hi == Rational(4, 3));
    CHECK(lo <= hi);
}

TEST_CASE("certificates carry the smallest maximizing denominator") {
    RotMaxCertificate c = rot_max_certificate(Rational(2, 5), Rational(1, 5));
    CHECK(c.value == Rational(1));
    CHECK(c.q == 1);
    CHECK(c.p1 == 0);
    CHECK(c.p2 == 0);
    c = rot_max_certificate(Rational(2, 3), Rational(1, 2));
    CHECK(c.value == Rational(3, 2));
    CHECK(c.q == 2);
    CHECK(c.p1 == 1);
    CHECK(c.p2 == 1);
    CHECK_THROWS_AS(rot_max_certificate(Rational(3, 2), Rational(0)), UsageError);
}

TEST_CASE("maximum matches the direct scan on the full grid of denominator <= 8") {
    auto grid = unit_grid(8);
    for (const Rational& x : grid)
        for (const Rational& y : grid) {
            CAPTURE(x.str());
            CAPTURE(y.str());
            REQUIRE(rot_max(x, y) == rot_max_brute(x, y));
        }
}

TEST_CASE("maximum and certificate match the direct scan on random rationals") {
    std::mt19937 rng(977);
    std::uniform_int_distribution<long long> den(1, 12);
    for (int trial = 0; trial < 120; ++trial) {
        long long dx = den(rng), dy = den(rng);
        std::uniform_int_distribution<long long> nx(0, dx - 1), ny(0, dy - 1);
        Rational x(nx(rng), dx), y(ny(rng), dy);
        Int want_q;
        Rational want = rot_max_brute(x, y, &want_q);
        RotMaxCertificate c = rot_max_certificate(x, y);
        CAPTURE(x.str());
        CAPTURE(y.str());
        REQUIRE(c.value == want);
        REQUIRE(c.q == want_q);  // both report the smallest maximizer
        REQUIRE(c.p1 == (Rational(c.q) * x).floor());
        REQUIRE(c.p2 == (Rational(c.q) * y).floor());
        REQUIRE(c.value == Rational(c.p1 + c.p2 + 1, c.q));
    }
}

TEST_CASE("integer shifts move the value by the same integer") {
    std::mt19937 rng(978);
    std::uniform_int_distribution<long long> den(1, 9), shift(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        long long dx = den(rng), dy = den(rng);
        std::uniform_int_distribution<long long> nx(0, dx - 1), ny(0, dy - 1);
        Rational x(nx(rng), dx), y(ny(rng), dy);
        long long a = shift(rng), b = shift(rng);
        REQUIRE(rot_max(x + Rational(a), y + Rational(b)) ==
                rot_max(x, y) + Rational(a + b));
    }
}

TEST_CASE("symmetry and monotonicity") {
    auto grid = unit_grid(6);
    for (const Rational& x : grid)
        for (const Rational& y : grid) {
            REQUIRE(rot_max(x, y) == rot_max(y, x));
            // One step down in either argument can only lower the value.
            REQUIRE(rot_max(x, y) >= rot_max(x, y - Rational(1, 30)));
            REQUIRE(rot_max(x, y) >= rot_max(x - Rational(1, 30), y));
        }
}

TEST_CASE("below the antidiagonal the maximum collapses to 1") {
    auto grid = unit_grid(12);
    for (const Rational& x : grid)
        for (const Rational& y : grid)
            if (x + y < Rational(1)) REQUIRE(rot_max(x, y) == Rational(1));
}

TEST_CASE("duality identities on the open-square grid") {
    auto grid = unit_grid(10);
    for (const Rational& x : grid)
        for (const Rational& y : grid) {
            if (x.is_zero() || y.is_zero()) continue;
            REQUIRE(rot_min(x, y) == -rot_max(-x, -y));
            REQUIRE(rot_min(x, y) ==
                    Rational(2) - rot_max(Rational(1) - x, Rational(1) - y));
        }
}

TEST_CASE("realizability of triples") {
    CHECK(is_realizable(Rational(1, 2), Rational(1, 3), Rational(1, 6)));
    CHECK(is_realizable(Rational(1, 2), Rational(1, 3), Rational(1, 2)));  // at the bound
    CHECK_FALSE(is_realizable(Rational(1, 2), Rational(1, 3), Rational(51, 100)));
    CHECK_FALSE(is_realizable(Rational(2, 3), Rational(2, 3), Rational(1, 2)));
    CHECK(is_realizable(Rational(9, 10), Rational(9, 10), Rational(0)));
    // Two rotation-zero maps can compose to a full turn, so the bound at the
    // origin is 2 and every z in [0,1) passes.
    CHECK(is_realizable(Rational(0), Rational(0), Rational(99, 100)));
    CHECK_THROWS_AS(is_realizable(Rational(1), Rational(0), Rational(0)), UsageError);
    CHECK_THROWS_AS(is_realizable(Rational(0), Rational(0), Rational(-1, 2)), UsageError);
}
