#include "ziglab/fractal.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>

#include "ziglab/farey.hpp"
#include "ziglab/rotnum.hpp"

namespace ziglab {

namespace {

long long elapsed_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

struct XYZ {
    Rational x, y, z;
    friend std::strong_ordering operator<=>(const XYZ& a, const XYZ& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.z <=> b.z;
    }
    friend bool operator==(const XYZ&, const XYZ&) = default;
};

std::vector<Vertex3> collect_families(
    long long max_den,
    const std::function<std::array<XYZ, 3>(long long m, long long a)>& make) {
    if (max_den < 2) throw UsageError("vertex enumeration needs max_den >= 2");
    std::map<XYZ, unsigned> acc;
    for (long long m = 2; m <= max_den; ++m) {
        for (long long a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            auto pts = make(m, a);
            acc[pts[0]] |= kFamily1;
            acc[pts[1]] |= kFamily2;
            acc[pts[2]] |= kFamily3;
        }
    }
    std::vector<Vertex3> out;
    out.reserve(acc.size());
    for (const auto& [p, fam] : acc) out.push_back({p.x, p.y, p.z, fam});
    return out;
}

const Point2 kRoot{Rational(1, 2), Rational(1, 2)};

// For p = (a/q, (q-1)/q) in Delta, Q(p) = (a, q-a); these are coprime, and
// running Euclid's subtraction backwards is exactly the T1/T2 ancestry.
struct EuclidCoords {
    Int m, n;
};

EuclidCoords euclid_of(const Point2& p) {
    const Int& q = p.y.den();
    if (q < 2 || p.y.num() != q - 1 || p.x.den() != q || p.x.num() <= 0 || p.x.num() >= q)
        throw DomainError("point (" + p.x.str() + ", " + p.y.str() +
                          ") is not of the form (a/q, (q-1)/q) with gcd(a,q)=1");
    return {p.x.num(), q - p.x.num()};
}

Point2 point_of_euclid(const Int& m, const Int& n) {
    return {Rational(m, m + n), Rational(m + n - 1, m + n)};
}

} // namespace

std::vector<Vertex3> vertices_jn(long long max_den) {
    return collect_families(max_den, [](long long m, long long a) -> std::array<XYZ, 3> {
        Rational am(a, m), bm(m - a, m), um(1, m);
        return {XYZ{am, bm, um}, XYZ{bm, um, am}, XYZ{um, bm, am}};
    });
}

std::vector<Vertex3> vertices_rab(long long max_den) {
    return collect_families(max_den, [](long long m, long long a) -> std::array<XYZ, 3> {
        Rational am(a, m), bm(m - a, m), top(m - 1, m);
        Rational z1(m + 1, m), za(m + a, m);
        return {XYZ{bm, am, z1}, XYZ{am, top, za}, XYZ{top, am, za}};
    });
}

std::set<Point2> delta_set(long long max_den) {
    if (max_den < 2) throw UsageError("delta enumeration needs max_den >= 2");
    std::set<Point2> out;
    for (long long q = 2; q <= max_den; ++q)
        for (long long a = 1; a < q; ++a)
            if (std::gcd(a, q) == 1) out.insert({Rational(a, q), Rational(q - 1, q)});
    return out;
}

Int ProjectiveMap2::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

ProjectiveMap2 mul(const ProjectiveMap2& a, const ProjectiveMap2& b) {
    ProjectiveMap2 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += a.m[3 * i + k] * b.m[3 * k + j];
            r.m[3 * i + j] = s;
        }
    return r;
}

bool proportional(const ProjectiveMap2& a, const ProjectiveMap2& b) {
    // a == lambda * b for a nonzero rational lambda iff all 2x2 cross products
    // of corresponding entries vanish and the zero patterns agree.
    int pivot = -1;
    for (int i = 0; i < 9; ++i) {
        if ((a.m[i] == 0) != (b.m[i] == 0)) return false;
        if (pivot < 0 && a.m[i] != 0) pivot = i;
    }
    if (pivot < 0) return true;  // both zero maps (degenerate, but equal)
    for (int i = 0; i < 9; ++i)
        if (a.m[pivot] * b.m[i] != b.m[pivot] * a.m[i]) return false;
    return true;
}

ProjectiveMap2 map_t1() {
    return {{1, 0, 0, 1, 1, 0, 1, 0, 1}};
}

ProjectiveMap2 map_t2() {
    return {{0, 0, 1, -1, 1, 1, -1, 0, 2}};
}

ProjectiveMap2 map_q() {
    return {{1, 0, 0, -1, 0, 1, 0, -1, 1}};
}

ProjectiveMap2 map_t1_euclid() {
    return {{1, 0, 0, 1, 1, 0, 0, 0, 1}};
}

ProjectiveMap2 map_t2_euclid() {
    return {{1, 1, 0, 0, 1, 0, 0, 0, 1}};
}

Point2 apply_projective(const ProjectiveMap2& M, const Point2& p) {
    // Integer homogeneous coordinates of (x, y): [xn*yd : yn*xd : xd*yd].
    Int h0 = p.x.num() * p.y.den();
    Int h1 = p.y.num() * p.x.den();
    Int h2 = p.x.den() * p.y.den();
    Int X = M.m[0] * h0 + M.m[1] * h1 + M.m[2] * h2;
    Int Y = M.m[3] * h0 + M.m[4] * h1 + M.m[5] * h2;
    Int T = M.m[6] * h0 + M.m[7] * h1 + M.m[8] * h2;
    if (T == 0)
        throw DomainError("projective image of (" + p.x.str() + ", " + p.y.str() +
                          ") is at infinity");
    return {Rational(X, T), Rational(Y, T)};
}

ParentClass classify_parent(const Point2& p) {
    EuclidCoords e = euclid_of(p);
    if (e.m == e.n) {
        // Coprimality forces m = n = 1, the root (1/2, 1/2).
        return {ParentClass::Root, p};
    }
    ParentClass out{};
    if (e.m < e.n) {
        out.kind = ParentClass::T1Child;
        out.parent = point_of_euclid(e.m, e.n - e.m);
        if (apply_projective(map_t1(), out.parent) != p)
            throw InvariantError("T1 ancestry check failed");
    } else {
        out.kind = ParentClass::T2Child;
        out.parent = point_of_euclid(e.m - e.n, e.n);
        if (apply_projective(map_t2(), out.parent) != p)
            throw InvariantError("T2 ancestry check failed");
    }
    return out;
}

Report verify_self_similarity(long long max_den) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "selfsim";

    // The conjugacies that make the T-maps "be" Euclid steps: Q*Ti == Ti_e*Q
    // exactly (scalar 1), hence certainly up to scalar.
    bool conj1 = mul(map_q(), map_t1()) == mul(map_t1_euclid(), map_q()) &&
                 proportional(mul(map_q(), map_t1()), mul(map_t1_euclid(), map_q()));
    bool conj2 = mul(map_q(), map_t2()) == mul(map_t2_euclid(), map_q()) &&
                 proportional(mul(map_q(), map_t2()), mul(map_t2_euclid(), map_q()));
    if (!conj1) rep.failures.push_back("conjugacy Q*T1 != T1_euclid*Q");
    if (!conj2) rep.failures.push_back("conjugacy Q*T2 != T2_euclid*Q");
    rep.add_extra("conjugacies", conj1 && conj2 ? "exact" : "broken");

    std::set<Point2> pts = delta_set(max_den);
    for (const Point2& p : pts) {
        ++rep.checked;
        std::string tag = "(" + p.x.str() + ", " + p.y.str() + ")";
        try {
            ParentClass c = classify_parent(p);
            if (p == kRoot) {
                if (c.kind != ParentClass::Root)
                    rep.failures.push_back(tag + ": root misclassified");
                continue;
            }
            if (c.kind == ParentClass::Root) {
                rep.failures.push_back(tag + ": non-root classified as root");
                continue;
            }
            if (pts.find(c.parent) == pts.end()) {
                rep.failures.push_back(tag + ": parent not in delta");
                continue;
            }
            if (c.parent.y.den() >= p.y.den()) {
                rep.failures.push_back(tag + ": parent denominator did not shrink");
                continue;
            }
            const ProjectiveMap2 T = c.kind == ParentClass::T1Child ? map_t1() : map_t2();
            if (apply_projective(T, c.parent) != p)
                rep.failures.push_back(tag + ": T-image mismatch");
        } catch (const std::exception& e) {
            rep.failures.push_back(tag + ": " + e.what());
        }
    }
    rep.add_extra("max_den", std::to_string(max_den));
    rep.add_extra("points", std::to_string(pts.size()));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

std::pair<Int, Int> line_indices(const Point2& p) {
    if (p.y == 1) throw DomainError("ordinate 1 lies on no line pair");
    Rational denom = Rational(1) - p.y;
    Rational m = p.x / denom;
    Rational k = (Rational(1) - p.x) / denom;
    if (!m.is_integer() || !k.is_integer() || m < 1 || k < 1)
        throw DomainError("point (" + p.x.str() + ", " + p.y.str() +
                          ") is not a line-family intersection");
    return {m.num(), k.num()};
}

std::set<Point2> delta_prime(long long bound) {
    if (bound < 2) throw UsageError("line intersection enumeration needs bound >= 2");
    std::set<Point2> out;
    for (long long m = 1; m < bound; ++m)
        for (long long k = 1; m + k <= bound; ++k)
            out.insert({Rational(m, m + k), Rational(m + k - 1, m + k)});
    return out;
}

Report verify_lines(long long bound) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "lines";
    std::set<Point2> dp = delta_prime(bound);
    rep.checked = dp.size();

    std::map<Rational, Rational> lowest;  // abscissa -> least ordinate
    for (const Point2& p : dp) {
        auto it = lowest.find(p.x);
        if (it == lowest.end() || p.y < it->second) lowest.insert_or_assign(it, p.x, p.y);
    }
    std::set<Point2> least;
    for (const auto& [x, y] : lowest) least.insert({x, y});

    std::set<Point2> expected = delta_set(bound);
    for (const Point2& p : least)
        if (!expected.count(p))
            rep.failures.push_back("extra point (" + p.x.str() + ", " + p.y.str() + ")");
    for (const Point2& p : expected)
        if (!least.count(p))
            rep.failures.push_back("missing point (" + p.x.str() + ", " + p.y.str() + ")");

    rep.add_extra("bound", std::to_string(bound));
    rep.add_extra("intersections", std::to_string(dp.size()));
    rep.add_extra("least_ordinate_points", std::to_string(least.size()));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

FareyTriangle::FareyTriangle(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi) || lo < 0 || hi > 1 || lo.den() * hi.num() - lo.num() * hi.den() != 1)
        throw UsageError("triangle bounds must be Farey neighbors in [0, 1]");
}

Subdivision subdivide(const FareyTriangle& t) {
    Rational med = mediant(t.lo, t.hi);
    Rect2 rect{med, t.hi, Rational(1) - med, Rational(1) - t.lo};
    return {med, rect, FareyTriangle(t.lo, med), FareyTriangle(med, t.hi)};
}

std::vector<std::pair<Rational, Rect2>> subdivision_rects(int depth) {
    if (depth < 1) throw UsageError("subdivision depth must be >= 1");
    std::vector<std::pair<Rational, Rect2>> out;
    std::vector<FareyTriangle> level{FareyTriangle(Rational(0), Rational(1))};
    for (int d = 0; d < depth; ++d) {
        std::vector<FareyTriangle> next;
        next.reserve(level.size() * 2);
        for (const FareyTriangle& t : level) {
            Subdivision s = subdivide(t);
            out.emplace_back(s.med, s.rect);
            next.push_back(s.left);
            next.push_back(s.right);
        }
        level = std::move(next);
    }
    return out;
}

namespace {

// Closed rectangles share a boundary segment of positive length iff their
// intersection is degenerate in exactly one axis and extended in the other.
enum class Touch { None, Point, Segment, Overlap };

Touch touch_of(const Rect2& a, const Rect2& b) {
    Rational x1 = std::max(a.x0, b.x0), x2 = std::min(a.x1, b.x1);
    Rational y1 = std::max(a.y0, b.y0), y2 = std::min(a.y1, b.y1);
    if (x1 > x2 || y1 > y2) return Touch::None;
    bool dx = x1 == x2, dy = y1 == y2;
    if (dx && dy) return Touch::Point;
    if (!dx && !dy) return Touch::Overlap;
    return Touch::Segment;
}

} // namespace

Report rect_adjacency_report(int depth) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "adjacency";
    auto rects = subdivision_rects(depth);
    for (size_t i = 0; i < rects.size(); ++i) {
        for (size_t j = i + 1; j < rects.size(); ++j) {
            ++rep.checked;
            const auto& [fi, ri] = rects[i];
            const auto& [fj, rj] = rects[j];
            const Rational& lo = std::min(fi, fj);
            const Rational& hi = std::max(fi, fj);
            bool neighbors = is_farey_neighbor(lo, hi);
            Touch t = touch_of(ri, rj);
            if (t == Touch::Overlap) {
                rep.failures.push_back("rect(" + fi.str() + ") and rect(" + fj.str() +
                                       ") overlap with positive area");
            } else if (neighbors != (t == Touch::Segment)) {
                rep.failures.push_back("rect(" + fi.str() + ") vs rect(" + fj.str() + "): " +
                                       (neighbors ? "neighbors without shared segment"
                                                  : "shared segment without neighbors"));
            }
        }
    }
    rep.add_extra("depth", std::to_string(depth));
    rep.add_extra("rects", std::to_string(rects.size()));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

std::optional<Point2> find_vertex_condition_violation(const Point2& p, long long grid_den) {
    if (grid_den < 1) throw UsageError("grid_den must be >= 1");
    Rational value = rot_max(p.x, p.y);
    Rational sum = p.x + p.y;
    long long imax = static_cast<long long>((p.x * Rational(grid_den)).floor());
    long long jmax = static_cast<long long>((p.y * Rational(grid_den)).floor());
    for (long long i = 0; i <= imax; ++i) {
        for (long long j = 0; j <= jmax; ++j) {
            Rational gx(i, grid_den), gy(j, grid_den);
            if (gx + gy >= sum) continue;
            if (rot_max(gx, gy) >= value) return Point2{gx, gy};
        }
    }
    return std::nullopt;
}

Report verify_vertex_condition(long long max_den, long long grid_den) {
    if (grid_den < max_den) throw UsageError("grid_den must be at least max_den");
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.target = "vertexcond";
    std::set<Point2> projections;
    for (const Vertex3& v : vertices_rab(max_den)) projections.insert({v.x, v.y});
    unsigned long long candidates = 0;
    for (const Point2& p : projections) {
        ++rep.checked;
        // Count candidates the same way the scan walks them.
        long long imax = static_cast<long long>((p.x * Rational(grid_den)).floor());
        long long jmax = static_cast<long long>((p.y * Rational(grid_den)).floor());
        Rational sum = p.x + p.y;
        for (long long i = 0; i <= imax; ++i)
            for (long long j = 0; j <= jmax; ++j)
                if (Rational(i, grid_den) + Rational(j, grid_den) < sum) ++candidates;
        if (auto w = find_vertex_condition_violation(p, grid_den))
            rep.failures.push_back("vertex (" + p.x.str() + ", " + p.y.str() +
                                   ") dominated at (" + w->x.str() + ", " + w->y.str() + ")");
    }
    rep.add_extra("max_den", std::to_string(max_den));
    rep.add_extra("grid_den", std::to_string(grid_den));
    rep.add_extra("candidate_pairs", std::to_string(candidates));
    rep.elapsed_ms = elapsed_since(t0);
    return rep;
}

} // namespace ziglab
