#pragma once

// JSON/CSV emission for the CLI, kept in the library so tests can check that
// everything round-trips through Rational::parse.

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ziglab/boxes.hpp"
#include "ziglab/dynamics.hpp"
#include "ziglab/fractal.hpp"

namespace ziglab {

using nlohmann::ordered_json;

ordered_json json_point(const Point2& p);
ordered_json json_points(const std::set<Point2>& pts);
ordered_json json_vertices(const std::vector<Vertex3>& vs);
ordered_json json_box(const Box& b);
ordered_json json_cw(const CwBoxParams& c);
ordered_json json_lift(const MonotoneLift& f);

// Witness schema for oracle output: {n, f, g, rot_f, rot_g, rot_fg}.
ordered_json json_witness(long long n, const MaxCompositionResult& r);

Point2 point_from_json(const ordered_json& j);
MonotoneLift lift_from_json(const ordered_json& j);

std::string families_str(unsigned mask);

} // namespace ziglab
