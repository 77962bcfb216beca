#include "ziglab/boxes.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ziglab/farey.hpp"

namespace ziglab {

namespace {

long long elapsed_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

} // namespace

Box box_of(const CwBoxParams& c) {
    auto clip = [&](long long p) { return Rational(std::min(p, c.q), c.q); };
    return {clip(c.p1), clip(c.p2), clip(c.p3)};
}

bool is_good(const Box& b) {
    const Rational* r[3] = {&b.ax, &b.ay, &b.az};
    for (int i = 0; i < 3; ++i) {
        const Rational& u = *r[i];
        if (u.num() != 1 || u.den() < 2) continue;
        const Int& q = u.den();
        const Rational& v = *r[(i + 1) % 3];
        const Rational& w = *r[(i + 2) % 3];
        // v + w == 1 with den(v) == q forces v = p/q, w = (q-p)/q, gcd(p,q)=1.
        if (v + w == Rational(1) && v.den() == q && v > 0 && v < 1) return true;
    }
    return false;
}

bool contains(const Box& outer, const Box& inner) {
    return inner.ax <= outer.ax && inner.ay <= outer.ay && inner.az <= outer.az;
}

std::set<Box> enumerate_good(long long max_den) {
    if (max_den < 2) throw UsageError("good-box enumeration needs max_den >= 2");
    std::set<Box> out;
    for (long long m = 2; m <= max_den; ++m) {
        for (long long a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            Rational c[3] = {Rational(a, m), Rational(m - a, m), Rational(1, m)};
            int idx[3] = {0, 1, 2};
            std::sort(idx, idx + 3);
            do {
                out.insert(Box{c[idx[0]], c[idx[1]], c[idx[2]]});
            } while (std::next_permutation(idx, idx + 3));
        }
    }
    return out;
}

std::vector<CwBoxParams> enumerate_cw(long long max_den, bool include_degenerate) {
    if (max_den < 1) throw UsageError("parameter-box enumeration needs max_den >= 1");
    std::vector<CwBoxParams> out;
    long long lo = include_degenerate ? 0 : 1;
    for (long long q = 1; q <= max_den; ++q) {
        for (long long p1 = lo; p1 <= q; ++p1) {
            for (long long p2 = lo; p2 <= q; ++p2) {
                long long p3 = q + 1 - p1 - p2;
                if (p3 < lo) continue;
                out.push_back({p1, p2, p3, q});
            }
        }
    }
    return out;
}

Box find_good_cover(const CwBoxParams& c) {
    if (c.degenerate()) throw DomainError("degenerate parameter box has no good cover");
    const long long q = c.q;
    long long p[3] = {c.p1, c.p2, c.p3};
    int order[3] = {0, 1, 2};
    std::stable_sort(order, order + 3, [&](int i, int j) { return p[i] < p[j]; });
    long long s1 = p[order[0]], s2 = p[order[1]], s3 = p[order[2]];

    // Covering box for the sorted triple, as coordinates (c1, c2, c3).
    Rational c1, c2, c3;
    if (s1 == 1) {
        // s2 + s3 = q.  Coprime s2 means the box itself is good; otherwise
        // dividing out g = gcd(s2, q) (= gcd(s3, q)) lifts only the 1/q
        // coordinate, up to g/q, and leaves the other two in place.
        long long g = std::gcd(s2, q);
        c1 = Rational(1, q / g);
        c2 = Rational(s2 / g, q / g);
        c3 = Rational(s3 / g, q / g);
    } else {
        // All parts >= 2.  A good box Pi(1/n, m/n, (n-m)/n) contains the sorted
        // box iff n <= q/s1 and s2/q <= m/n <= (q - s3)/q, and the interval is
        // wide enough that a fraction with denominator <= floor(q/s1) always
        // exists in it; the minimal-denominator one gives the tightest cover.
        long long cap = q / s1;
        auto m = min_den_fraction_in(Rational(s2, q), Rational(q - s3, q), Int(cap));
        if (!m)
            throw InvariantError("no good cover found for (" + std::to_string(c.p1) + "," +
                                 std::to_string(c.p2) + "," + std::to_string(c.p3) + ")/" +
                                 std::to_string(q));
        c1 = Rational(1, m->den());
        c2 = *m;
        c3 = Rational(1) - *m;
    }

    Rational coords[3];
    coords[order[0]] = c1;
    coords[order[1]] = c2;
    coords[order[2]] = c3;
    Box cover{coords[0], coords[1], coords[2]};
    if (!is_good(cover) || !contains(cover, box_of(c)))
        throw InvariantError("good cover construction broke its contract");
    return cover;
}

Report verify_equivalence(long long max_den) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "equivalence";
    Int max_cover_den = 0;
    for (const CwBoxParams& c : enumerate_cw(max_den, false)) {
        ++rep.checked;
        std::string tag = "(" + std::to_string(c.p1) + "," + std::to_string(c.p2) + "," +
                          std::to_string(c.p3) + ")/" + std::to_string(c.q);
        try {
            Box cover = find_good_cover(c);
            if (!is_good(cover)) {
                rep.failures.push_back(tag + ": cover not good");
                continue;
            }
            if (!contains(cover, box_of(c))) {
                rep.failures.push_back(tag + ": cover does not contain box");
                continue;
            }
            const Int& n = cover.ax.den();  // good boxes have one denominator
            if (n > c.q) {
                rep.failures.push_back(tag + ": cover denominator " + n.str() + " exceeds q");
                continue;
            }
            if (n > max_cover_den) max_cover_den = n;
        } catch (const std::exception& e) {
            rep.failures.push_back(tag + ": " + e.what());
        }
    }
    rep.add_extra("max_den", std::to_string(max_den));
    rep.add_extra("max_cover_den", max_cover_den.str());
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

Report verify_minimality(long long max_den) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "minimality";
    std::set<Box> good = enumerate_good(max_den);
    std::vector<Box> boxes(good.begin(), good.end());
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = 0; j < boxes.size(); ++j) {
            if (i == j) continue;
            ++rep.checked;
            if (contains(boxes[i], boxes[j])) {
                rep.failures.push_back("(" + boxes[j].ax.str() + "," + boxes[j].ay.str() + "," +
                                       boxes[j].az.str() + ") inside (" + boxes[i].ax.str() +
                                       "," + boxes[i].ay.str() + "," + boxes[i].az.str() + ")");
            }
        }
    }
    rep.add_extra("max_den", std::to_string(max_den));
    rep.add_extra("boxes", std::to_string(boxes.size()));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

} // namespace ziglab
