#include <doctest.h>

#include <cctype>
#include <sstream>
#include <string>

#include "ziglab/boxes.hpp"
#include "ziglab/render.hpp"

using namespace ziglab;

namespace {

std::string render_str(RenderKind kind, long long den, long long size = 1000) {
    std::ostringstream os;
    render(RenderSpec{kind, den, size}, os);
    return os.str();
}

size_t count_of(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("decimal strings are exact and round half up") {
    CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rational(1, 2), 6) == "0.500000");
    CHECK(decimal_string(Rational(1, 2), 0) == "1");
    CHECK(decimal_string(Rational(0), 6) == "0.000000");
    CHECK(decimal_string(Rational(-1, 3), 3) == "-0.333");
    CHECK(decimal_string(Rational(-2, 3), 3) == "-0.667");
    CHECK(decimal_string(Rational(7, 2), 1) == "3.5");
    CHECK(decimal_string(Rational(1, 1000000), 3) == "0.000");
}

TEST_CASE("viewbox coordinates round to nearest") {
    CHECK(svg_coord(Rational(0)) == 0);
    CHECK(svg_coord(Rational(1)) == 1000);
    CHECK(svg_coord(Rational(1, 2)) == 500);
    CHECK(svg_coord(Rational(1, 3)) == 333);
    CHECK(svg_coord(Rational(2, 3)) == 667);
    CHECK(svg_coord(Rational(1, 2000)) == 1);  // half rounds up
}

TEST_CASE("every kind renders twice to identical bytes") {
    for (RenderKind k : {RenderKind::Topview, RenderKind::Vertices, RenderKind::Lines,
                         RenderKind::Transformed, RenderKind::Mesh}) {
        std::string a = render_str(k, 8), b = render_str(k, 8);
        REQUIRE(a == b);
        REQUIRE_FALSE(a.empty());
    }
    CHECK(render_str(RenderKind::Tree, 5) == render_str(RenderKind::Tree, 5));
}

TEST_CASE("svg framing") {
    for (RenderKind k : {RenderKind::Topview, RenderKind::Vertices, RenderKind::Lines,
                         RenderKind::Transformed}) {
        std::string s = render_str(k, 6, 640);
        CAPTURE(static_cast<int>(k));
        CHECK(s.rfind("<?xml", 0) == 0);
        CHECK(s.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
        CHECK(s.find("width=\"640\"") != std::string::npos);
        CHECK(s.find("\n</svg>\n") == s.size() - 8);
        // Exact geometry only: no scientific-notation coordinate may appear.
        // A bare "e-" search would trip on attribute names such as
        // shape-rendering, so require a digit in front.
        bool sci = false;
        for (size_t pos = s.find("e-"); pos != std::string::npos;
             pos = s.find("e-", pos + 1))
            if (pos > 0 && std::isdigit(static_cast<unsigned char>(s[pos - 1])))
                sci = true;
        CHECK_FALSE(sci);
    }
}

TEST_CASE("topview paints one cell per grid square") {
    std::string s = render_str(RenderKind::Topview, 4);
    CHECK(count_of(s, "<rect") == 1 + 16);  // background plus 4x4 cells
}

TEST_CASE("tree draws one rectangle per interior node") {
    std::string s = render_str(RenderKind::Tree, 5);
    CHECK(count_of(s, "<rect") == 31);
    CHECK(count_of(s, "<polygon") == 1);
}

TEST_CASE("mesh lists eight corners and six faces per box") {
    size_t boxes = enumerate_good(8).size();
    std::string s = render_str(RenderKind::Mesh, 8);
    CHECK(count_of(s, "\nv ") + (s.rfind("v ", 0) == 0 ? 1 : 0) == 8 * boxes);
    CHECK(count_of(s, "\nf ") == 6 * boxes);
    CHECK(s.find('.') != std::string::npos);  // fixed-precision decimals
}

TEST_CASE("render specs validate") {
    std::ostringstream os;
    CHECK_THROWS_AS(render(RenderSpec{RenderKind::Vertices, 1, 1000}, os), UsageError);
    CHECK_THROWS_AS(render(RenderSpec{RenderKind::Vertices, 30, 32}, os), UsageError);
    CHECK_THROWS_AS(render(RenderSpec{RenderKind::Tree, 13, 1000}, os), UsageError);
    CHECK_THROWS_AS(render(RenderSpec{RenderKind::Tree, 0, 1000}, os), UsageError);
}
