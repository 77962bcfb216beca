#include "ziglab/serialize.hpp"

#include "ziglab/errors.hpp"

namespace ziglab {

ordered_json json_point(const Point2& p) {
    return ordered_json{{"x", p.x.str()}, {"y", p.y.str()}};
}

ordered_json json_points(const std::set<Point2>& pts) {
    ordered_json arr = ordered_json::array();
    for (const Point2& p : pts) arr.push_back(json_point(p));
    return arr;
}

ordered_json json_vertices(const std::vector<Vertex3>& vs) {
    ordered_json arr = ordered_json::array();
    for (const Vertex3& v : vs) {
        arr.push_back(ordered_json{{"x", v.x.str()},
                                   {"y", v.y.str()},
                                   {"z", v.z.str()},
                                   {"families", families_str(v.families)}});
    }
    return arr;
}

ordered_json json_box(const Box& b) {
    return ordered_json{{"ax", b.ax.str()}, {"ay", b.ay.str()}, {"az", b.az.str()}};
}

ordered_json json_cw(const CwBoxParams& c) {
    return ordered_json{{"p1", c.p1}, {"p2", c.p2}, {"p3", c.p3}, {"q", c.q}};
}

ordered_json json_lift(const MonotoneLift& f) {
    return ordered_json{{"n", f.n}, {"values", f.values}};
}

ordered_json json_witness(long long n, const MaxCompositionResult& r) {
    return ordered_json{{"n", n},
                        {"f", r.f.values},
                        {"g", r.g.values},
                        {"rot_f", rotation_number(r.f).str()},
                        {"rot_g", rotation_number(r.g).str()},
                        {"rot_fg", r.value.str()}};
}

Point2 point_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw UsageError("point object must have string fields x and y");
    return Point2{Rational::parse(j.at("x").get<std::string>()),
                  Rational::parse(j.at("y").get<std::string>())};
}

MonotoneLift lift_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values"))
        throw UsageError("lift object must have fields n and values");
    return MonotoneLift(j.at("n").get<long long>(),
                        j.at("values").get<std::vector<long long>>());
}

std::string families_str(unsigned mask) {
    std::string out;
    if (mask & kFamily1) out += "1";
    if (mask & kFamily2) out += (out.empty() ? "2" : ",2");
    if (mask & kFamily3) out += (out.empty() ? "3" : ",3");
    return out;
}

} // namespace ziglab
