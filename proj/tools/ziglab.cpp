// ziglab: exact arithmetic for extremal rotation numbers of composed circle
// maps.  Every fraction crosses this boundary as a "p/q" string; exit code 0
// means success/verified, 1 means a negative or failed check (or an IO
// failure), 2 means a usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ziglab/boxes.hpp"
#include "ziglab/dynamics.hpp"
#include "ziglab/errors.hpp"
#include "ziglab/farey.hpp"
#include "ziglab/fractal.hpp"
#include "ziglab/render.hpp"
#include "ziglab/report.hpp"
#include "ziglab/rotnum.hpp"
#include "ziglab/serialize.hpp"

namespace {

using namespace ziglab;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Relative output paths land under $ZIGLAB_OUT when it is set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* base = std::getenv("ZIGLAB_OUT"); base && *base) {
            p = std::filesystem::path(base) / p;
        }
    }
    return p;
}

// Stdout by default, a file when -o was given.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            resolved_ = resolve_out(path);
            file_.open(resolved_, std::ios::binary);
            if (!file_) throw IoError("cannot open output file: " + resolved_.string());
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        if (file_.is_open()) {
            file_.close();
            if (!file_) throw IoError("failed writing output file: " + resolved_.string());
        }
    }

private:
    std::filesystem::path resolved_;
    std::ofstream file_;
};

void require_unit(const Rational& v, const std::string& name) {
    if (v < Rational(0) || v >= Rational(1))
        throw UsageError(name + " must lie in [0,1)");
}

std::string lift_str(const MonotoneLift& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.values[i]);
    }
    return s + ")";
}

void emit_json(Output& out, const ordered_json& j) {
    out.os() << j.dump(2) << "\n";
}

// ---- eval ------------------------------------------------------------

struct EvalOpts {
    std::string x, y;
    bool min = false, interval = false, certificate = false, json = false;
};

int run_eval(const EvalOpts& o) {
    Rational x = Rational::parse(o.x), y = Rational::parse(o.y);
    if (o.certificate && (o.min || o.interval))
        throw UsageError("--certificate applies to the maximum only");
    Output out("");
    if (o.json) {
        ordered_json j{{"x", x.str()}, {"y", y.str()}};
        if (o.interval) {
            auto [lo, hi] = rot_interval(x, y);
            j["interval"] = {lo.str(), hi.str()};
        } else if (o.min) {
            j["min"] = rot_min(x, y).str();
        } else {
            j["max"] = rot_max(x, y).str();
            if (o.certificate) {
                require_unit(x, "x"), require_unit(y, "y");
                RotMaxCertificate c = rot_max_certificate(x, y);
                j["certificate"] = ordered_json{
                    {"q", c.q.str()}, {"p1", c.p1.str()}, {"p2", c.p2.str()}};
            }
        }
        emit_json(out, j);
        return 0;
    }
    if (o.interval) {
        auto [lo, hi] = rot_interval(x, y);
        out.os() << "[" << lo.str() << ", " << hi.str() << "]\n";
    } else if (o.min) {
        out.os() << rot_min(x, y).str() << "\n";
    } else {
        out.os() << rot_max(x, y).str() << "\n";
        if (o.certificate) {
            require_unit(x, "x"), require_unit(y, "y");
            RotMaxCertificate c = rot_max_certificate(x, y);
            out.os() << "certificate: q=" << c.q << " p1=" << c.p1 << " p2=" << c.p2
                     << "\n";
        }
    }
    return 0;
}

// ---- member ----------------------------------------------------------

struct MemberOpts {
    std::string x, y, z;
    bool json = false;
};

int run_member(const MemberOpts& o) {
    Rational x = Rational::parse(o.x), y = Rational::parse(o.y), z = Rational::parse(o.z);
    require_unit(x, "x"), require_unit(y, "y"), require_unit(z, "z");
    Rational bound = rot_max(Rational(1) - x, Rational(1) - y) - Rational(1);
    bool yes = z <= bound;
    Output out("");
    if (o.json) {
        emit_json(out, ordered_json{{"x", x.str()},
                                    {"y", y.str()},
                                    {"z", z.str()},
                                    {"bound", bound.str()},
                                    {"realizable", yes}});
    } else {
        out.os() << (yes ? "yes" : "no") << ", bound " << bound.str() << "\n";
    }
    return yes ? 0 : 1;
}

// ---- boxes -----------------------------------------------------------

struct BoxesOpts {
    std::string kind = "good";
    long long den = 30;
    bool include_degenerate = false;
    bool json = false;
    std::string out_path;
};

int run_boxes(const BoxesOpts& o) {
    if (o.den < 1 || o.den > 500) throw UsageError("--den must lie in [1, 500]");
    Output out(o.out_path);
    if (o.kind == "good") {
        if (o.den < 2) throw UsageError("good boxes need --den >= 2");
        std::set<Box> boxes = enumerate_good(o.den);
        if (o.json) {
            ordered_json arr = ordered_json::array();
            for (const Box& b : boxes) arr.push_back(json_box(b));
            emit_json(out, ordered_json{{"kind", "good"},
                                        {"max_den", o.den},
                                        {"count", boxes.size()},
                                        {"boxes", arr}});
        } else {
            out.os() << "ax,ay,az\n";
            for (const Box& b : boxes)
                out.os() << b.ax.fraction_str() << "," << b.ay.fraction_str() << ","
                         << b.az.fraction_str() << "\n";
        }
    } else if (o.kind == "cw") {
        std::vector<CwBoxParams> cs = enumerate_cw(o.den, o.include_degenerate);
        if (o.json) {
            ordered_json arr = ordered_json::array();
            for (const CwBoxParams& c : cs) arr.push_back(json_cw(c));
            emit_json(out, ordered_json{{"kind", "cw"},
                                        {"max_den", o.den},
                                        {"count", cs.size()},
                                        {"boxes", arr}});
        } else {
            out.os() << "p1,p2,p3,q\n";
            for (const CwBoxParams& c : cs)
                out.os() << c.p1 << "," << c.p2 << "," << c.p3 << "," << c.q << "\n";
        }
    } else {
        throw UsageError("--kind must be good or cw");
    }
    out.finish();
    return 0;
}

// ---- cover -----------------------------------------------------------

struct CoverOpts {
    long long p1 = 0, p2 = 0, p3 = 0, q = 0;
    bool json = false;
};

int run_cover(const CoverOpts& o) {
    if (o.q < 1 || o.p1 < 0 || o.p2 < 0 || o.p3 < 0 || o.p1 > o.q || o.p2 > o.q ||
        o.p3 > o.q || o.p1 + o.p2 + o.p3 != o.q + 1)
        throw UsageError("need 0 <= p_i <= q and p1 + p2 + p3 = q + 1");
    CwBoxParams c{o.p1, o.p2, o.p3, o.q};
    Box extents = box_of(c);
    Box cover = find_good_cover(c);  // DomainError on degenerate input
    Output out("");
    if (o.json) {
        // Every coordinate of a good box has denominator exactly q.
        emit_json(out, ordered_json{{"input", json_cw(c)},
                                    {"extents", json_box(extents)},
                                    {"cover", json_box(cover)},
                                    {"cover_den", cover.ax.den().str()}});
    } else {
        out.os() << "extents: " << extents.ax.str() << " " << extents.ay.str() << " "
                 << extents.az.str() << "\n"
                 << "cover: " << cover.ax.str() << " " << cover.ay.str() << " "
                 << cover.az.str() << "\n";
    }
    return 0;
}

// ---- verify ----------------------------------------------------------

struct VerifyOpts {
    std::string target;
    long long max_den = 30;
    int depth = 6;
    long long n = 6;
    long long grid_den = 0;  // 0: use max_den
    bool timing = false, json = false, force = false;
    std::string out_path;
};

void check_limit(long long v, long long lo, long long hi, const std::string& what) {
    if (v < lo || v > hi) {
        std::ostringstream msg;
        msg << what << " must lie in [" << lo << ", " << hi << "]";
        throw UsageError(msg.str());
    }
}

int run_verify(const VerifyOpts& o) {
    Report r;
    if (o.target == "equivalence") {
        check_limit(o.max_den, 1, 200, "--max-den");
        r = verify_equivalence(o.max_den);
    } else if (o.target == "minimality") {
        check_limit(o.max_den, 2, 120, "--max-den");
        r = verify_minimality(o.max_den);
    } else if (o.target == "selfsim") {
        check_limit(o.max_den, 2, 2000, "--max-den");
        r = verify_self_similarity(o.max_den);
    } else if (o.target == "lines") {
        check_limit(o.max_den, 2, 2000, "--max-den");
        r = verify_lines(o.max_den);
    } else if (o.target == "adjacency") {
        check_limit(o.depth, 1, 12, "--depth");
        r = rect_adjacency_report(o.depth);
    } else if (o.target == "vertexcond") {
        check_limit(o.max_den, 2, 80, "--max-den");
        long long grid = o.grid_den == 0 ? o.max_den : o.grid_den;
        check_limit(grid, o.max_den, 200, "--grid-den");
        r = verify_vertex_condition(o.max_den, grid);
    } else if (o.target == "oracle-bound") {
        check_limit(o.n, 1, o.force ? 10 : 6, "--n");
        r = verify_oracle_bound(o.n);
    } else {
        throw UsageError(
            "unknown verify target (expected equivalence, minimality, selfsim, "
            "lines, adjacency, vertexcond, or oracle-bound)");
    }
    Output out(o.out_path);
    if (o.json)
        emit_json(out, r.json(o.timing));
    else
        out.os() << r.text(o.timing);
    out.finish();
    return r.ok() ? 0 : 1;
}

// ---- delta -----------------------------------------------------------

struct DeltaOpts {
    long long den = 30;
    bool prime = false, json = false;
    std::string out_path;
};

int run_delta(const DeltaOpts& o) {
    check_limit(o.den, 2, 2000, "--den");
    std::set<Point2> pts = o.prime ? delta_prime(o.den) : delta_set(o.den);
    Output out(o.out_path);
    if (o.json) {
        emit_json(out, ordered_json{{"set", o.prime ? "delta_prime" : "delta"},
                                    {"max_den", o.den},
                                    {"count", pts.size()},
                                    {"points", json_points(pts)}});
    } else {
        out.os() << "x,y\n";
        for (const Point2& p : pts)
            out.os() << p.x.fraction_str() << "," << p.y.fraction_str() << "\n";
    }
    out.finish();
    return 0;
}

// ---- selfsim ---------------------------------------------------------

struct PointOpts {
    std::string x, y;
    bool json = false;
};

const char* kind_str(ParentClass::Kind k) {
    switch (k) {
        case ParentClass::Root: return "root";
        case ParentClass::T1Child: return "t1-child";
        default: return "t2-child";
    }
}

int run_selfsim(const PointOpts& o) {
    Point2 p{Rational::parse(o.x), Rational::parse(o.y)};
    Point2 e = apply_projective(map_q(), p);  // validates the Delta form below
    ParentClass c = classify_parent(p);
    Output out("");
    if (o.json) {
        ordered_json j{{"x", p.x.str()},
                       {"y", p.y.str()},
                       {"euclid", ordered_json{{"m", e.x.str()}, {"n", e.y.str()}}},
                       {"class", kind_str(c.kind)}};
        if (c.kind != ParentClass::Root) j["parent"] = json_point(c.parent);
        emit_json(out, j);
    } else {
        out.os() << "euclid: m=" << e.x.str() << " n=" << e.y.str() << "\n"
                 << "class: " << kind_str(c.kind) << "\n";
        if (c.kind != ParentClass::Root)
            out.os() << "parent: " << c.parent.x.str() << " " << c.parent.y.str() << "\n";
    }
    return 0;
}

// ---- lines -----------------------------------------------------------

int run_lines(const PointOpts& o) {
    Point2 p{Rational::parse(o.x), Rational::parse(o.y)};
    auto [m, k] = line_indices(p);
    bool in_delta = boost::multiprecision::gcd(m, k) == 1;
    Output out("");
    if (o.json) {
        emit_json(out, ordered_json{{"x", p.x.str()},
                                    {"y", p.y.str()},
                                    {"m", m.str()},
                                    {"k", k.str()},
                                    {"in_delta", in_delta}});
    } else {
        out.os() << "m=" << m << " k=" << k << "\n"
                 << "in_delta: " << (in_delta ? "yes" : "no") << "\n";
    }
    return 0;
}

// ---- tree ------------------------------------------------------------

struct TreeOpts {
    int depth = 4;
    bool json = false;
    std::string out_path;
};

int run_tree(const TreeOpts& o) {
    check_limit(o.depth, 1, 12, "--depth");
    auto rects = subdivision_rects(o.depth);
    Output out(o.out_path);
    if (o.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& [med, r] : rects)
            arr.push_back(ordered_json{{"med", med.str()},
                                       {"x0", r.x0.str()},
                                       {"x1", r.x1.str()},
                                       {"y0", r.y0.str()},
                                       {"y1", r.y1.str()}});
        emit_json(out, ordered_json{{"depth", o.depth}, {"rects", arr}});
    } else {
        out.os() << "med,x0,x1,y0,y1\n";
        for (const auto& [med, r] : rects)
            out.os() << med.fraction_str() << "," << r.x0.fraction_str() << ","
                     << r.x1.fraction_str() << "," << r.y0.fraction_str() << ","
                     << r.y1.fraction_str() << "\n";
    }
    out.finish();
    return 0;
}

// ---- oracle ----------------------------------------------------------

struct OracleOpts {
    std::string x, y;
    long long n = 0;         // single period; 0 when sweeping
    long long sweep_to = 0;  // inclusive upper bound; 0 when single
    bool force = false, json = false;
};

int run_oracle(const OracleOpts& o) {
    Rational x = Rational::parse(o.x), y = Rational::parse(o.y);
    require_unit(x, "x"), require_unit(y, "y");
    long long cap = o.force ? 10 : 7;
    Rational formula = rot_max(x, y);
    Output out("");

    std::vector<long long> periods;
    if (o.n > 0) {
        check_limit(o.n, 1, cap, "--n");
        periods.push_back(o.n);
    } else {
        long long sweep = o.sweep_to > 0 ? o.sweep_to : 6;
        check_limit(sweep, 1, cap, "--sweep-to");
        Int l = boost::multiprecision::lcm(x.den(), y.den());
        long long step = l.convert_to<long long>();
        for (long long n = step; n <= sweep; n += step) periods.push_back(n);
        if (periods.empty()) {
            std::cerr << "error: no period up to " << sweep
                      << " is divisible by lcm of the denominators (" << step << ")\n";
            return 1;
        }
    }

    ordered_json results = ordered_json::array();
    std::ostringstream text;
    text << "formula: " << formula.str() << "\n";
    std::optional<long long> attained_at;
    for (long long n : periods) {
        MaxCompositionResult r = max_composition(x, y, n);  // DomainError if infeasible
        bool attained = r.value == formula;
        text << "n=" << n << ": " << r.value.str() << (attained ? " (attained)" : "")
             << "\n";
        if (attained && !attained_at) {
            attained_at = n;
            text << "witness n=" << n << ": f=" << lift_str(r.f) << " g=" << lift_str(r.g)
                 << "\n";
        } else if (o.n > 0) {
            text << "witness n=" << n << ": f=" << lift_str(r.f) << " g=" << lift_str(r.g)
                 << "\n";
        }
        results.push_back(json_witness(n, r));
    }
    if (attained_at)
        text << "attained at n=" << *attained_at << "\n";
    else
        text << "not attained up to n=" << periods.back() << "\n";

    if (o.json) {
        ordered_json j{{"x", x.str()}, {"y", y.str()}, {"formula", formula.str()},
                       {"results", results}};
        j["attained_at"] = attained_at ? ordered_json(*attained_at) : ordered_json(nullptr);
        emit_json(out, j);
    } else {
        out.os() << text.str();
    }
    return 0;
}

// ---- render ----------------------------------------------------------

struct RenderOpts {
    std::string kind;
    long long den = 0;  // 0: per-kind default
    long long size = 1000;
    std::string out_path;
};

int run_render(const RenderOpts& o) {
    RenderSpec spec;
    if (o.kind == "topview")
        spec.kind = RenderKind::Topview;
    else if (o.kind == "vertices")
        spec.kind = RenderKind::Vertices;
    else if (o.kind == "lines")
        spec.kind = RenderKind::Lines;
    else if (o.kind == "transformed")
        spec.kind = RenderKind::Transformed;
    else if (o.kind == "tree")
        spec.kind = RenderKind::Tree;
    else if (o.kind == "mesh")
        spec.kind = RenderKind::Mesh;
    else
        throw UsageError(
            "unknown render kind (expected topview, vertices, lines, transformed, "
            "tree, or mesh)");
    spec.den_cutoff = o.den > 0 ? o.den : (spec.kind == RenderKind::Tree ? 6 : 30);
    if (spec.kind == RenderKind::Topview) check_limit(spec.den_cutoff, 2, 200, "--den");
    spec.size_px = o.size;
    Output out(o.out_path);
    render(spec, out.os());
    out.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rotation-number lab: extremal rotation numbers of composed "
                 "circle maps, box descriptions of the realizable region, and the "
                 "self-similar vertex set"};
    app.require_subcommand(1);

    EvalOpts eval_o;
    CLI::App* eval = app.add_subcommand("eval", "maximal rotation number at (x, y)");
    eval->add_option("x", eval_o.x, "first rotation number, as p/q")->required();
    eval->add_option("y", eval_o.y, "second rotation number, as p/q")->required();
    eval->add_flag("--min", eval_o.min, "print the minimum instead");
    eval->add_flag("--interval", eval_o.interval, "print [min, max]");
    eval->add_flag("--certificate", eval_o.certificate,
                   "also print the maximizing q, floor(qx), floor(qy)");
    eval->add_flag("--json", eval_o.json, "JSON output");

    MemberOpts member_o;
    CLI::App* member =
        app.add_subcommand("member", "is the triple (x, y, z) realizable?");
    member->add_option("x", member_o.x)->required();
    member->add_option("y", member_o.y)->required();
    member->add_option("z", member_o.z)->required();
    member->add_flag("--json", member_o.json, "JSON output");

    BoxesOpts boxes_o;
    CLI::App* boxes = app.add_subcommand("boxes", "list good or parameter boxes");
    boxes->add_option("--kind", boxes_o.kind, "good or cw")->capture_default_str();
    boxes->add_option("--den", boxes_o.den, "denominator cutoff")->capture_default_str();
    boxes->add_flag("--include-degenerate", boxes_o.include_degenerate,
                    "keep degenerate parameter triples (cw only)");
    boxes->add_flag("--json", boxes_o.json, "JSON output (default is CSV)");
    boxes->add_option("-o,--output", boxes_o.out_path, "output file (default stdout)");

    CoverOpts cover_o;
    CLI::App* cover =
        app.add_subcommand("cover", "good box covering the parameter box (p1,p2,p3,q)");
    cover->add_option("p1", cover_o.p1)->required();
    cover->add_option("p2", cover_o.p2)->required();
    cover->add_option("p3", cover_o.p3)->required();
    cover->add_option("q", cover_o.q)->required();
    cover->add_flag("--json", cover_o.json, "JSON output");

    VerifyOpts verify_o;
    CLI::App* verify = app.add_subcommand(
        "verify", "run a verifier: equivalence, minimality, selfsim, lines, "
                  "adjacency, vertexcond, or oracle-bound");
    verify->add_option("target", verify_o.target, "what to verify")->required();
    verify->add_option("--max-den", verify_o.max_den, "denominator cutoff")
        ->capture_default_str();
    verify->add_option("--depth", verify_o.depth, "subdivision depth (adjacency)")
        ->capture_default_str();
    verify->add_option("--n", verify_o.n, "max lift period (oracle-bound)")
        ->capture_default_str();
    verify->add_option("--grid-den", verify_o.grid_den,
                       "grid denominator (vertexcond; default --max-den)");
    verify->add_flag("--timing", verify_o.timing, "include elapsed milliseconds in the report");
    verify->add_flag("--json", verify_o.json, "JSON output");
    verify->add_flag("--force", verify_o.force, "raise the oracle-bound period limit");
    verify->add_option("-o,--output", verify_o.out_path, "output file (default stdout)");

    DeltaOpts delta_o;
    CLI::App* delta = app.add_subcommand("delta", "list the vertex-projection set");
    delta->add_option("--den", delta_o.den, "denominator cutoff")->capture_default_str();
    delta->add_flag("--prime", delta_o.prime, "list all line intersections instead");
    delta->add_flag("--json", delta_o.json, "JSON output (default is CSV)");
    delta->add_option("-o,--output", delta_o.out_path, "output file (default stdout)");

    PointOpts selfsim_o;
    CLI::App* selfsim =
        app.add_subcommand("selfsim", "classify a point under the self-similarity");
    selfsim->add_option("x", selfsim_o.x)->required();
    selfsim->add_option("y", selfsim_o.y)->required();
    selfsim->add_flag("--json", selfsim_o.json, "JSON output");

    PointOpts lines_o;
    CLI::App* lines = app.add_subcommand("lines", "line indices through a point");
    lines->add_option("x", lines_o.x)->required();
    lines->add_option("y", lines_o.y)->required();
    lines->add_flag("--json", lines_o.json, "JSON output");

    TreeOpts tree_o;
    CLI::App* tree = app.add_subcommand("tree", "Farey-triangle subdivision rectangles");
    tree->add_option("--depth", tree_o.depth, "subdivision depth")->capture_default_str();
    tree->add_flag("--json", tree_o.json, "JSON output (default is CSV)");
    tree->add_option("-o,--output", tree_o.out_path, "output file (default stdout)");

    OracleOpts oracle_o;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "exhaustive composition maxima over finite circle-map lifts");
    oracle->add_option("x", oracle_o.x)->required();
    oracle->add_option("y", oracle_o.y)->required();
    CLI::Option* on = oracle->add_option("--n", oracle_o.n, "single period to search");
    oracle->add_option("--sweep-to", oracle_o.sweep_to, "sweep periods up to N (default 6)")
        ->excludes(on);
    oracle->add_flag("--force", oracle_o.force, "raise the period limit to 10");
    oracle->add_flag("--json", oracle_o.json, "JSON output");

    RenderOpts render_o;
    CLI::App* render_cmd = app.add_subcommand(
        "render", "emit a deterministic figure: topview, vertices, lines, "
                  "transformed, tree (SVG), or mesh (OBJ)");
    render_cmd->add_option("kind", render_o.kind, "figure kind")->required();
    render_cmd->add_option("--den", render_o.den,
                           "denominator cutoff (tree: depth; default 30 / 6)");
    render_cmd->add_option("--size", render_o.size, "image size in px")
        ->capture_default_str();
    render_cmd->add_option("-o,--output", render_o.out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_o);
        if (member->parsed()) return run_member(member_o);
        if (boxes->parsed()) return run_boxes(boxes_o);
        if (cover->parsed()) return run_cover(cover_o);
        if (verify->parsed()) return run_verify(verify_o);
        if (delta->parsed()) return run_delta(delta_o);
        if (selfsim->parsed()) return run_selfsim(selfsim_o);
        if (lines->parsed()) return run_lines(lines_o);
        if (tree->parsed()) return run_tree(tree_o);
        if (oracle->parsed()) return run_oracle(oracle_o);
        if (render_cmd->parsed()) return run_render(render_o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        // The oracle treats an empty search space as a negative result.
        std::cerr << "error: " << e.what() << "\n";
        return oracle->parsed() ? 1 : 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
