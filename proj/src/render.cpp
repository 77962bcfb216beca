#include "ziglab/render.hpp"

#include <numeric>
#include <ostream>

#include "ziglab/boxes.hpp"
#include "ziglab/fractal.hpp"
#include "ziglab/rotnum.hpp"

namespace ziglab {

namespace {

// floor(a/b + 1/2) for b > 0: rounds half up without leaving the integers.
Int round_div(const Int& a, const Int& b) {
    return floor_div(2 * a + b, 2 * b);
}

long long clamp_byte(const Int& v) {
    if (v < 0) return 0;
    if (v > 255) return 255;
    return static_cast<long long>(v);
}

void svg_open(std::ostream& os, long long size_px) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\""
       << size_px << "\" height=\"" << size_px << "\">\n";
}

void svg_close(std::ostream& os) {
    os << "</svg>\n";
}

// Math y grows upward, SVG y downward.
long long svg_y(const Rational& y) {
    return 1000 - svg_coord(y);
}

const char* family_color(unsigned mask) {
    switch (mask) {
        case kFamily1: return "#d62728";
        case kFamily2: return "#2ca02c";
        case kFamily3: return "#1f77b4";
        default: return "#000000";  // shared by several families
    }
}

void render_topview(long long den, long long size_px, std::ostream& os) {
    svg_open(os, size_px);
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
    for (long long i = 0; i < den; ++i) {
        long long x0 = svg_coord(Rational(i, den));
        long long x1 = svg_coord(Rational(i + 1, den));
        for (long long j = 0; j < den; ++j) {
            Rational v = rot_max(Rational(i, den), Rational(j, den));
            // v in [1, 3) over the unit square; spread it over the byte range.
            long long shade = clamp_byte(((v - Rational(1)) * Rational(255, 2)).floor());
            long long ytop = svg_y(Rational(j + 1, den));
            long long ybot = svg_y(Rational(j, den));
            os << "<rect x=\"" << x0 << "\" y=\"" << ytop << "\" width=\"" << x1 - x0
               << "\" height=\"" << ybot - ytop << "\" fill=\"rgb(" << shade << "," << shade
               << "," << 255 - shade << ")\"/>\n";
        }
    }
    svg_close(os);
}

void render_vertices(long long den, long long size_px, std::ostream& os) {
    svg_open(os, size_px);
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"none\" "
          "stroke=\"#888888\" stroke-width=\"2\"/>\n"
       << "<line x1=\"0\" y1=\"0\" x2=\"1000\" y2=\"1000\" stroke=\"#cccccc\" "
          "stroke-width=\"1\"/>\n";
    for (const Vertex3& v : vertices_rab(den)) {
        os << "<circle cx=\"" << svg_coord(v.x) << "\" cy=\"" << svg_y(v.y)
           << "\" r=\"4\" fill=\"" << family_color(v.families) << "\"/>\n";
    }
    svg_close(os);
}

void render_lines(long long den, long long size_px, std::ostream& os) {
    svg_open(os, size_px);
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"none\" "
          "stroke=\"#888888\" stroke-width=\"2\"/>\n";
    // Family through (0,1) with slope -1/m, clipped at x = 1.
    for (long long m = 1; m <= den; ++m) {
        os << "<line x1=\"0\" y1=\"0\" x2=\"1000\" y2=\""
           << svg_y(Rational(1) - Rational(1, m)) << "\" stroke=\"#2ca02c\" "
           << "stroke-width=\"1\"/>\n";
    }
    // Family through (1,1) with slope 1/k, clipped at x = 0.
    for (long long k = 1; k <= den; ++k) {
        os << "<line x1=\"0\" y1=\"" << svg_y(Rational(k - 1, k))
           << "\" x2=\"1000\" y2=\"0\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
    }
    for (const Point2& p : delta_set(den)) {
        os << "<circle cx=\"" << svg_coord(p.x) << "\" cy=\"" << svg_y(p.y)
           << "\" r=\"5\" fill=\"#000000\"/>\n";
    }
    svg_close(os);
}

void render_transformed(long long den, long long size_px, std::ostream& os) {
    svg_open(os, size_px);
    os << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"none\" "
          "stroke=\"#888888\" stroke-width=\"2\"/>\n";
    if (den <= 50) {
        for (long long g = 1; g < den; ++g) {
            long long t = svg_coord(Rational(g, den));
            os << "<line x1=\"" << t << "\" y1=\"0\" x2=\"" << t
               << "\" y2=\"1000\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n"
               << "<line x1=\"0\" y1=\"" << t << "\" x2=\"1000\" y2=\"" << t
               << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        }
    }
    // Image of the vertex set under the straightening map: coprime lattice
    // points (m, k) with m + k <= den.
    for (long long m = 1; m < den; ++m) {
        for (long long k = 1; m + k <= den; ++k) {
            if (std::gcd(m, k) != 1) continue;
            os << "<circle cx=\"" << svg_coord(Rational(m, den)) << "\" cy=\""
               << svg_y(Rational(k, den)) << "\" r=\"3\" fill=\"#000000\"/>\n";
        }
    }
    svg_close(os);
}

void render_tree(long long depth, long long size_px, std::ostream& os) {
    svg_open(os, size_px);
    // Root triangle (0,1)-(1,0)-(1,1).
    os << "<polygon points=\"0,0 1000,1000 1000,0\" fill=\"none\" stroke=\"#888888\" "
          "stroke-width=\"2\"/>\n";
    for (const auto& [med, r] : subdivision_rects(static_cast<int>(depth))) {
        (void)med;
        long long x = svg_coord(r.x0);
        long long y = svg_y(r.y1);
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\""
           << svg_coord(r.x1) - x << "\" height=\"" << svg_y(r.y0) - y
           << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>\n";
    }
    svg_close(os);
}

void render_mesh(long long den, std::ostream& os) {
    os << "# axis-aligned box soup: one cuboid [0,ax]x[0,ay]x[0,az] per good box\n";
    long long base = 0;
    for (const Box& b : enumerate_good(den)) {
        os << "# box " << b.ax.str() << " " << b.ay.str() << " " << b.az.str() << "\n";
        const std::string x = decimal_string(b.ax, 6);
        const std::string y = decimal_string(b.ay, 6);
        const std::string z = decimal_string(b.az, 6);
        const std::string zero = decimal_string(Rational(0), 6);
        const std::string* xs[2] = {&zero, &x};
        const std::string* ys[2] = {&zero, &y};
        const std::string* zs[2] = {&zero, &z};
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int i = 0; i < 2; ++i)
                    os << "v " << *xs[i] << " " << *ys[j] << " " << *zs[k] << "\n";
        // Vertex order: index = i + 2j + 4k, 1-based in the file.
        static const int quads[6][4] = {{1, 2, 4, 3}, {5, 7, 8, 6}, {1, 5, 6, 2},
                                        {3, 4, 8, 7}, {1, 3, 7, 5}, {2, 6, 8, 4}};
        for (const auto& f : quads)
            os << "f " << base + f[0] << " " << base + f[1] << " " << base + f[2] << " "
               << base + f[3] << "\n";
        base += 8;
    }
}

} // namespace

std::string decimal_string(const Rational& r, int digits) {
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    bool neg = r.num() < 0;
    Int a = neg ? Int(-r.num()) : r.num();
    Int scaled = round_div(a * pow10, r.den());
    Int whole = scaled / pow10;
    Int frac = scaled % pow10;
    std::string fs = frac.str();
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        out += '.';
        out += std::string(static_cast<size_t>(digits) - fs.size(), '0');
        out += fs;
    }
    return out;
}

long long svg_coord(const Rational& r) {
    return static_cast<long long>(round_div(1000 * r.num(), r.den()));
}

void render(const RenderSpec& spec, std::ostream& os) {
    if (spec.size_px < 64) throw UsageError("size_px must be >= 64");
    if (spec.kind == RenderKind::Tree) {
        if (spec.den_cutoff < 1 || spec.den_cutoff > 12)
            throw UsageError("tree depth must be in [1, 12]");
    } else if (spec.den_cutoff < 2) {
        throw UsageError("den_cutoff must be >= 2");
    }
    switch (spec.kind) {
        case RenderKind::Topview: render_topview(spec.den_cutoff, spec.size_px, os); break;
        case RenderKind::Vertices: render_vertices(spec.den_cutoff, spec.size_px, os); break;
        case RenderKind::Lines: render_lines(spec.den_cutoff, spec.size_px, os); break;
        case RenderKind::Transformed: render_transformed(spec.den_cutoff, spec.size_px, os); break;
        case RenderKind::Tree: render_tree(spec.den_cutoff, spec.size_px, os); break;
        case RenderKind::Mesh: render_mesh(spec.den_cutoff, os); break;
    }
}

} // namespace ziglab
