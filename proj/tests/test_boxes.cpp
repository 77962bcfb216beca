#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ziglab/boxes.hpp"
#include "ziglab/farey.hpp"
#include "ziglab/rotnum.hpp"

using namespace ziglab;

namespace {

long long totient(long long q) {
    long long t = 0;
    for (long long a = 1; a <= q; ++a)
        if (std::gcd(a, q) == 1) ++t;
    return t;
}

long long den_of(const Box& b) {
    // Every coordinate of a good box is a reduced fraction with the same
    // denominator, so any of them will do.
    return b.ax.den().convert_to<long long>();
}

} // namespace

TEST_CASE("box_of scales by q and clips at the top of the cube") {
    Box b = box_of(CwBoxParams{2, 3, 3, 7});
    CHECK(b == Box{Rational(2, 7), Rational(3, 7), Rational(3, 7)});
    // (0, 0, q+1) pokes above the cube; the extent clips to 1.
    b = box_of(CwBoxParams{0, 0, 7, 6});
    CHECK(b == Box{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("good box recognition") {
    CHECK(is_good(Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
    CHECK(is_good(Box{Rational(1, 3), Rational(1, 3), Rational(2, 3)}));
    CHECK(is_good(Box{Rational(1, 3), Rational(2, 3), Rational(1, 3)}));
    CHECK(is_good(Box{Rational(2, 5), Rational(3, 5), Rational(1, 5)}));
    // 1/6 present but the others do not sum to 1.
    CHECK_FALSE(is_good(Box{Rational(1, 3), Rational(1, 6), Rational(5, 6)}));
    // 2/4 and 2/4 come from a non-coprime split: reduced denominators differ.
    CHECK_FALSE(is_good(Box{Rational(1, 4), Rational(1, 2), Rational(1, 2)}));
    // Sums to 1 but no coordinate is a unit fraction of the right size.
    CHECK_FALSE(is_good(Box{Rational(2, 5), Rational(2, 5), Rational(3, 5)}));
    CHECK_FALSE(is_good(Box{Rational(1), Rational(0), Rational(0)}));
    CHECK_FALSE(is_good(Box{Rational(1, 2), Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("containment is componentwise") {
    Box big{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    CHECK(contains(big, Box{Rational(1, 3), Rational(1, 2), Rational(1, 7)}));
    CHECK_FALSE(contains(big, Box{Rational(2, 3), Rational(1, 7), Rational(1, 7)}));
    CHECK(contains(big, big));
}

TEST_CASE("good box enumeration, small cases in full") {
    CHECK(enumerate_good(2) ==
          std::set<Box>{Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)}});
    std::set<Box> want3 = {
        Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)},
        Box{Rational(1, 3), Rational(1, 3), Rational(2, 3)},
        Box{Rational(1, 3), Rational(2, 3), Rational(1, 3)},
        Box{Rational(2, 3), Rational(1, 3), Rational(1, 3)},
    };
    CHECK(enumerate_good(3) == want3);
}

TEST_CASE("good box count follows the totient formula") {
    // One box at q = 2; for q >= 3 the multiset {1/q, p/q, (q-p)/q} has
    // phi(q)/2 choices of p, each giving 6 orderings except the p = 1
    // multiset (a repeated coordinate) which gives 3.
    long long want = 1;
    for (long long q = 3; q <= 24; ++q) want += 3 * totient(q) - 3;
    CHECK(enumerate_good(24).size() == static_cast<size_t>(want));
    for (const Box& b : enumerate_good(24)) REQUIRE(is_good(b));
}

TEST_CASE("parameter box enumeration") {
    std::vector<CwBoxParams> want2 = {CwBoxParams{1, 1, 1, 2}};
    CHECK(enumerate_cw(2, false) == want2);
    std::vector<CwBoxParams> want3 = {CwBoxParams{1, 1, 1, 2}, CwBoxParams{1, 1, 2, 3},
                                      CwBoxParams{1, 2, 1, 3}, CwBoxParams{2, 1, 1, 3}};
    CHECK(enumerate_cw(3, false) == want3);

    long long want = 0;
    for (long long q = 1; q <= 20; ++q) want += q * (q - 1) / 2;
    CHECK(enumerate_cw(20, false).size() == static_cast<size_t>(want));

    // Non-degenerate boxes never touch the walls of the cube.
    for (const CwBoxParams& c : enumerate_cw(20, false)) {
        Box b = box_of(c);
        for (const Rational& e : {b.ax, b.ay, b.az}) {
            REQUIRE(e > Rational(0));
            REQUIRE(e < Rational(1));
        }
    }

    // Degenerate triples included: p1, p2 >= 0 instead of >= 1 (still <= q),
    // and p3 = q + 1 - p1 - p2 can reach q + 1.
    std::vector<CwBoxParams> deg1 = enumerate_cw(1, true);
    CHECK(deg1.size() == 4);
    CHECK(std::count(deg1.begin(), deg1.end(), CwBoxParams{1, 1, 0, 1}) == 1);
    CHECK(std::count(deg1.begin(), deg1.end(), CwBoxParams{0, 0, 2, 1}) == 1);
    for (const CwBoxParams& c : enumerate_cw(9, true)) {
        REQUIRE(c.p1 + c.p2 + c.p3 == c.q + 1);
        REQUIRE(c.p1 >= 0);
        REQUIRE(c.p2 >= 0);
        REQUIRE(c.p3 >= 0);
    }
}

TEST_CASE("pinned covers") {
    CHECK(find_good_cover(CwBoxParams{2, 3, 3, 7}) ==
          Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(find_good_cover(CwBoxParams{2, 2, 2, 5}) ==
          Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK(find_good_cover(CwBoxParams{1, 2, 4, 6}) ==
          Box{Rational(1, 3), Rational(1, 3), Rational(2, 3)});
    CHECK(find_good_cover(CwBoxParams{4, 1, 2, 6}) ==
          Box{Rational(2, 3), Rational(1, 3), Rational(1, 3)});
    // A good box covers itself.
    CHECK(find_good_cover(CwBoxParams{1, 1, 1, 2}) ==
          Box{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(find_good_cover(CwBoxParams{0, 3, 4, 6}), DomainError);
}

TEST_CASE("every cover is good, containing, denominator-bounded, and minimal") {
    for (const CwBoxParams& c : enumerate_cw(25, false)) {
        Box inner = box_of(c);
        Box cover = find_good_cover(c);
        CAPTURE(c.p1);
        CAPTURE(c.p2);
        CAPTURE(c.p3);
        CAPTURE(c.q);
        REQUIRE(is_good(cover));
        REQUIRE(contains(cover, inner));
        REQUIRE(den_of(cover) <= c.q);
        // No good box of smaller denominator contains it: check against the
        // full list, which is an independent search path.
        for (const Box& g : enumerate_good(c.q))
            if (contains(g, inner)) REQUIRE(den_of(g) >= den_of(cover));
    }
}

TEST_CASE("equivalence and minimality verifiers on small ranges") {
    Report r = verify_minimality(3);
    CHECK(r.ok());
    CHECK(r.checked == 12);  // 4 boxes, ordered pairs
    r = verify_minimality(20);
    CHECK(r.ok());
    r = verify_equivalence(16);
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK_THROWS_AS(verify_equivalence(0), UsageError);
}

TEST_CASE("good corners sit exactly on the dual membership bound") {
    for (const Box& b : enumerate_good(14)) {
        Rational bound = rot_max(Rational(1) - b.ax, Rational(1) - b.ay) - Rational(1);
        REQUIRE(b.az == bound);
    }
}

TEST_CASE("box union membership matches the closed-form predicate on a grid") {
    // Union of good boxes with denominator <= 30 against the membership
    // predicate, on the grid of denominator <= 6.  The largest denominator a
    // maximizer can need there is lcm(5,6) = 30, so the truncation is safe.
    std::set<Box> boxes = enumerate_good(30);
    auto grid = farey_sequence(6);
    grid.pop_back();
    for (const Rational& x : grid)
        for (const Rational& y : grid) {
            // The x = 0 and y = 0 columns are reachable only through the
            // degenerate boundary faces, which the good-box list omits on
            // purpose, so the comparison lives on the open square.
            if (x.is_zero() || y.is_zero()) continue;
            Rational zmax(-1);
            for (const Box& b : boxes)
                if (x <= b.ax && y <= b.ay && b.az > zmax) zmax = b.az;
            for (const Rational& z : grid) {
                if (z.is_zero()) continue;
                bool in_union = z <= zmax;
                CAPTURE(x.str());
                CAPTURE(y.str());
                CAPTURE(z.str());
                REQUIRE(in_union == is_realizable(x, y, z));
            }
        }
}
