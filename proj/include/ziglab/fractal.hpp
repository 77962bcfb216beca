#pragma once

// The self-similar structure of the extremal-rotation-number surface:
// vertex families of the boundary solid and of the graph of rot_max, the
// planar set Delta = {(a/q, (q-1)/q) : gcd(a,q)=1}, the projective maps T1,
// T2, Q exhibiting Delta as a self-similar set conjugate to Euclid's
// algorithm, the two line families meeting in Delta, and the Farey-triangle
// subdivision whose rectangle adjacency mirrors Farey neighbordom.

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ziglab/rational.hpp"
#include "ziglab/report.hpp"

namespace ziglab {

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
    friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

// Vertex family tags; a vertex shared by several families carries their union.
inline constexpr unsigned kFamily1 = 1u;
inline constexpr unsigned kFamily2 = 2u;
inline constexpr unsigned kFamily3 = 4u;

struct Vertex3 {
    Rational x, y, z;
    unsigned families = 0;
    friend bool operator==(const Vertex3&, const Vertex3&) = default;
};

// Vertices of the boundary solid over the unit square: the three families
// (a/m, (m-a)/m, 1/m), ((m-a)/m, 1/m, a/m), (1/m, (m-a)/m, a/m) for
// coprime 0 < a < m <= max_den, deduplicated, sorted by (x, y, z).
std::vector<Vertex3> vertices_jn(long long max_den);

// Vertices of the graph of rot_max over the unit square:
// ((m-a)/m, a/m, 1+1/m), (a/m, (m-1)/m, 1+a/m), ((m-1)/m, a/m, 1+a/m).
std::vector<Vertex3> vertices_rab(long long max_den);

// Delta = {(a/q, (q-1)/q) : gcd(a,q) = 1, 0 < a < q <= max_den}.
std::set<Point2> delta_set(long long max_den);

// 3x3 integer matrix acting on the projective plane; row-major.
struct ProjectiveMap2 {
    std::array<Int, 9> m;
    friend bool operator==(const ProjectiveMap2&, const ProjectiveMap2&) = default;
    Int det() const;
};

ProjectiveMap2 mul(const ProjectiveMap2& a, const ProjectiveMap2& b);

// Equal up to a nonzero scalar (the meaningful equality for projective maps).
bool proportional(const ProjectiveMap2& a, const ProjectiveMap2& b);

// T1(x,y) = (x/(1+x), (x+y)/(1+x)),           fixing the (0,0) side
ProjectiveMap2 map_t1();
// T2(x,y) = (1/(2-x), (1+y-x)/(2-x)),         pushing toward (1,1)
ProjectiveMap2 map_t2();
// Q(x,y) = (x/(1-y), (1-x)/(1-y)),            straightening Delta onto the integer lattice
ProjectiveMap2 map_q();
// Euclid steps conjugate to T1, T2 under Q: (a,b) -> (a, a+b) and (a,b) -> (a+b, b).
ProjectiveMap2 map_t1_euclid();
ProjectiveMap2 map_t2_euclid();

// Apply to an affine point; throws DomainError when the image is at infinity.
Point2 apply_projective(const ProjectiveMap2& m, const Point2& p);

struct ParentClass {
    enum Kind { Root, T1Child, T2Child } kind;
    Point2 parent;  // meaningful unless kind == Root
};

// For p in Delta: (1/2,1/2) is the root; otherwise p is T1 or T2 of a unique
// parent in Delta with strictly smaller denominator.  DomainError off Delta.
ParentClass classify_parent(const Point2& p);

// Whole-set self-similarity check: unique classification, parent membership,
// exact T-image equality, and the matrix conjugacies Q*Ti == Ti_euclid*Q.
Report verify_self_similarity(long long max_den);

// Indices (m, k) of the two lines through p: y = 1 - x/m (through (0,1)) and
// y = (k-1)/k + x/k (through (1,1)).  For (a/q, (q-1)/q) this is (a, q-a).
std::pair<Int, Int> line_indices(const Point2& p);

// All pairwise intersections {(m/(m+k), (m+k-1)/(m+k)) : m, k >= 1, m+k <= bound}.
std::set<Point2> delta_prime(long long bound);

// Keeping only the lowest intersection above each abscissa recovers Delta.
Report verify_lines(long long bound);

// Farey triangle {(x,y) : x + y > 1, x < hi, y < 1 - lo} for neighbors lo < hi.
struct FareyTriangle {
    Rational lo, hi;
    FareyTriangle(Rational l, Rational h);
};

struct Rect2 {
    Rational x0, x1, y0, y1;
    friend bool operator==(const Rect2&, const Rect2&) = default;
};

struct Subdivision {
    Rational med;      // mediant(lo, hi), the key of the removed rectangle
    Rect2 rect;        // [med, hi] x [1-med, 1-lo]
    FareyTriangle left, right;
};

Subdivision subdivide(const FareyTriangle& t);

// Rectangles of the subdivision tree keyed by mediant, depth >= 1 levels.
std::vector<std::pair<Rational, Rect2>> subdivision_rects(int depth);

// Two mediants are Farey neighbors iff their rectangles share a boundary
// segment of positive length; checked over all pairs at the given depth.
Report rect_adjacency_report(int depth);

// First grid point (x', y') with x' <= x, y' <= y, x' + y' < x + y on the
// grid (1/grid_den)Z^2 whose rot_max is NOT strictly below rot_max(x, y).
std::optional<Point2> find_vertex_condition_violation(const Point2& p, long long grid_den);

// Every projected vertex of vertices_rab(max_den) satisfies the strict
// dominance condition on the grid.  Pre: grid_den >= max_den.
Report verify_vertex_condition(long long max_den, long long grid_den);

} // namespace ziglab
