// Command-line surface: membership/cyclicity checks, the cyclic-polygon
// solver, leaf tracing with CSV/SVG output, the plaque atlas, the two
// constrained maximizers, and the matched isosceles pair.
//
// Exit codes: 0 success, 1 I/O, 2 domain or input validation,
// 3 numerical non-convergence.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <polyfoil/calculus.hpp>
#include <polyfoil/errors.hpp>
#include <polyfoil/foliation.hpp>
#include <polyfoil/inscribable.hpp>
#include <polyfoil/optimize.hpp>
#include <polyfoil/polygon.hpp>

#include "io/json_io.hpp"
#include "io/svg.hpp"

using namespace polyfoil;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

struct io_failure {
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw io_failure{"cannot open input file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_failure{"cannot open output file: " + path};
    out << content;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<double> parse_csv_numbers(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw validation_error("cannot parse number: " + item);
        }
    }
    return v;
}

// Why membership failed, for the check report.
std::string membership_diagnosis(const StarPolygon& p) {
    double angle_sum = 0.0;
    for (int k = 1; k <= p.n - 2; ++k) {
        const TriangleTriple tr = p.triple(k);
        if (!in_V(tr))
            return "fan triangle " + std::to_string(k) +
                   " violates the strict triangle inequality";
        angle_sum += apex_angle(tr);
    }
    if (angle_sum >= 2.0 * std::numbers::pi - 1e-9)
        return "apex angles accumulate to a full turn";
    return "not an admissible star polygon";
}

// Shared sampling of one leaf projected to the (x, y) side plane.
std::vector<Vec2> projected_triangle_leaf(const StarPolygon& start, double step,
                                          int max_samples, double leaf_tol) {
    const LeafTrace trace = trace_leaf(start, step, max_samples, 0, leaf_tol);
    std::vector<Vec2> pts;
    pts.reserve(trace.samples.size());
    for (const StarPolygon& s : trace.samples) {
        const TrianglePoint tp = tuple_to_triangle(s);
        pts.push_back({tp.x, tp.y});
    }
    if (trace.closed_loop && !pts.empty()) pts.push_back(pts.front());
    return pts;
}

int cmd_check(const std::string& input, const std::string& output) {
    const json j = parse_json_text(read_input(input));
    json report;
    StarPolygon p;
    try {
        p = io::parse_polygon(j);
    } catch (const error& e) {
        report["in_omega"] = false;
        report["error"] = e.what();
        write_output(output, report.dump(2) + "\n");
        std::cerr << "invalid polygon: " << e.what() << "\n";
        return kExitDomain;
    }
    if (!in_Omega(p)) {
        report["n"] = p.n;
        report["in_omega"] = false;
        report["error"] = membership_diagnosis(p);
        write_output(output, report.dump(2) + "\n");
        std::cerr << "invalid polygon: " << report["error"].get<std::string>() << "\n";
        return kExitDomain;
    }

    const PsiValue v = psi(p);
    const RankReport rank = classify_rank(p);
    const bool convex = is_convex(p);
    double residual = 0.0;
    for (double c : gamma(p).components) residual = std::max(residual, std::abs(c));

    report["n"] = p.n;
    report["in_omega"] = true;
    report["convex"] = convex;
    report["perimeter"] = v.perimeter;
    report["area"] = v.area;
    report["gamma_residual"] = residual;
    report["inscribable"] = convex && is_inscribable(p);
    report["rank"] = rank.rank;
    report["sigma1"] = rank.sigma1;
    report["sigma2"] = rank.sigma2;
    report["regular"] = rank.is_regular_polygon;

    write_output(output, report.dump(2) + "\n");
    std::cerr << "n=" << p.n << " perimeter=" << v.perimeter << " area=" << v.area
              << " rank=" << rank.rank << (rank.is_regular_polygon ? " regular" : "")
              << "\n";
    return kExitOk;
}

int cmd_inscribe(const std::string& input, const std::string& sides_csv,
                 const std::string& output) {
    std::vector<double> sides;
    if (!sides_csv.empty())
        sides = parse_csv_numbers(sides_csv);
    else
        sides = io::parse_sides(parse_json_text(read_input(input)));
    const CyclicSolution sol = solve_cyclic(sides);
    write_output(output, io::cyclic_solution_to_json(sol).dump(2) + "\n");
    std::cerr << "circumradius " << sol.circumradius
              << (sol.center_inside ? ", center inside" : ", center outside") << "\n";
    return kExitOk;
}

int cmd_trace(const std::string& input, const std::string& output, double step,
              int max_samples, std::uint64_t seed, double tol_leaf,
              const std::string& svg_path, double px) {
    const StarPolygon start = io::parse_polygon(parse_json_text(read_input(input)));
    const LeafTrace trace = trace_leaf(start, step, max_samples, seed, tol_leaf);
    write_output(output, io::trace_to_csv(trace));
    if (!svg_path.empty()) {
        io::SvgWriter svg(px);
        const double width = 0.01 * trace.target.perimeter;
        if (start.n == 3) {
            std::vector<Vec2> pts;
            for (const StarPolygon& s : trace.samples) {
                const TrianglePoint tp = tuple_to_triangle(s);
                pts.push_back({tp.x, tp.y});
            }
            if (trace.closed_loop) pts.push_back(pts.front());
            svg.path(pts, false, "black", width);
            svg.circle(pts.front(), 2.0 * width, "red");
        } else {
            const std::size_t stride =
                std::max<std::size_t>(1, trace.samples.size() / 12);
            for (std::size_t i = 0; i < trace.samples.size(); i += stride)
                svg.path(to_vertices(trace.samples[i]).vertices, true, "black",
                         0.2 * width);
        }
        write_output(svg_path, svg.finish());
    }
    std::cerr << trace.samples.size() << " samples"
              << (trace.closed_loop ? ", closed loop" : "") << "\n";
    return kExitOk;
}

int cmd_atlas(double lambda, int levels, int grid, const std::string& output, double px) {
    if (levels < 1) throw validation_error("atlas: need at least one level");
    if (grid < 8) throw validation_error("atlas: grid must be at least 8");

    io::SvgWriter svg(px);
    const double w = lambda / 300.0;

    // Projected plaque boundary (an isosceles right triangle) and the
    // isosceles diagonal, which meets every leaf twice.
    svg.path({{0.0, lambda}, {lambda, 0.0}, {lambda, lambda}}, true, "black", 1.5 * w);
    svg.line({0.5 * lambda, 0.5 * lambda}, {lambda, lambda}, "#888888", w);

    // One closed leaf per area level, seeded at its isosceles pair.
    const double a_max = lambda * lambda / (3.0 * std::sqrt(3.0));
    const double step = lambda / static_cast<double>(grid);
    for (int i = 1; i <= levels; ++i) {
        const double a0 = a_max * static_cast<double>(i) / (levels + 1);
        const auto pair = isosceles_equal_pair(lambda, a0);
        const StarPolygon seed = triangle_to_tuple(pair.first);
        const auto pts = projected_triangle_leaf(seed, step, 16 * grid + 64, 1e-8);
        svg.path(pts, false, "#225588", w);
    }

    // The singular point: the equilateral triangle.
    svg.circle({2.0 * lambda / 3.0, 2.0 * lambda / 3.0}, 2.5 * w, "red");

    write_output(output, svg.finish());
    std::cerr << "atlas with " << levels << " levels\n";
    return kExitOk;
}

int cmd_maximize(const std::string& mode, const std::string& input, int n, double L,
                 const std::string& sides_csv, std::uint64_t seed, double tol_opt,
                 const std::string& output) {
    AscentReport rep;
    AscentOptions opts;
    opts.grad_tolerance = tol_opt;
    opts.seed = seed;
    opts.report = &rep;

    json out;
    StarPolygon best;
    if (mode == "perimeter") {
        if (!input.empty()) {
            const json j = parse_json_text(read_input(input));
            if (!j.is_object() || !j.contains("n") || !j.contains("L") ||
                !j["n"].is_number_integer() || !j["L"].is_number())
                throw validation_error(
                    "maximize perimeter: payload needs integer n and number L");
            n = j["n"].get<int>();
            L = j["L"].get<double>();
        }
        if (n < 3 || !(L > 0.0))
            throw validation_error("maximize perimeter: need --n >= 3 and --perimeter > 0");
        best = maximize_area_fixed_perimeter(n, L, {}, opts);
        out["mode"] = "perimeter";
        out["L"] = L;
    } else if (mode == "sides") {
        std::vector<double> sides;
        if (!sides_csv.empty())
            sides = parse_csv_numbers(sides_csv);
        else if (!input.empty())
            sides = io::parse_sides(parse_json_text(read_input(input)));
        else
            throw validation_error("maximize sides: need --sides or --input");
        best = maximize_area_fixed_sides(sides, {}, opts);
        out["mode"] = "sides";
        out["sides"] = sides;
    } else {
        throw validation_error("maximize: mode must be perimeter or sides");
    }

    out["polygon"] = io::polygon_to_json(best);
    out["area"] = area(best);
    out["perimeter"] = perimeter(best);
    out["convergence"] = json{{"iterations", rep.iterations}, {"grad_norm", rep.grad_norm}};
    write_output(output, out.dump(2) + "\n");
    std::cerr << "converged after " << rep.iterations << " iterations, gradient norm "
              << rep.grad_norm << "\n";
    return kExitOk;
}

int cmd_pair(double lambda, std::optional<double> a0, const std::string& output) {
    const auto pair = a0 ? isosceles_equal_pair(lambda, *a0) : isosceles_equal_pair(lambda);
    json out;
    out["lambda"] = lambda;
    out["area"] = std::sqrt(phi(pair.first));
    out["perimeter"] = 2.0 * lambda;
    out["first"] = io::triangle_to_json(pair.first);
    out["second"] = io::triangle_to_json(pair.second);
    write_output(output, out.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"star-shaped polygon toolkit: perimeter/area level sets, cyclic "
                 "polygons, and constrained area maximization"};
    app.require_subcommand(1);

    std::string input, output, sides_csv, svg_path, mode;
    double step = 0.05, tol_leaf = 1e-8, tol_opt = 1e-8, lambda = 1.0, L = 0.0, px = 40.0;
    std::optional<double> area_target;
    int max_samples = 1000, levels = 8, grid = 64, n = 0;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "membership, convexity, cyclicity and rank");
    check->add_option("-i,--input", input, "polygon JSON file, - for stdin")->required();
    check->add_option("-o,--output", output, "report destination (default stdout)");

    auto* inscribe = app.add_subcommand("inscribe", "unique cyclic polygon with given sides");
    inscribe->add_option("-i,--input", input, "sides JSON file, - for stdin");
    inscribe->add_option("--sides", sides_csv, "comma-separated side lengths");
    inscribe->add_option("-o,--output", output, "solution destination (default stdout)");

    auto* trace = app.add_subcommand("trace", "walk the constant perimeter-and-area family");
    trace->add_option("-i,--input", input, "polygon JSON file, - for stdin")->required();
    trace->add_option("-o,--output", output, "CSV destination (default stdout)");
    trace->add_option("--step", step, "predictor step length")->check(CLI::PositiveNumber);
    trace->add_option("--max-samples", max_samples, "sample budget")
        ->check(CLI::PositiveNumber);
    trace->add_option("--seed", seed, "tangent sampling seed")->envname("POLYFOIL_SEED");
    trace->add_option("--tol-leaf", tol_leaf, "conservation tolerance")
        ->check(CLI::PositiveNumber);
    trace->add_option("--svg", svg_path, "also render the trace to this SVG file");
    trace->add_option("--px", px, "pixels per length unit in SVG output");

    auto* atlas = app.add_subcommand("atlas", "SVG of the fixed-perimeter triangle plaque");
    atlas->add_option("--lambda", lambda, "semiperimeter of the plaque")
        ->required()
        ->check(CLI::PositiveNumber);
    atlas->add_option("--levels", levels, "number of area level curves")
        ->check(CLI::PositiveNumber);
    atlas->add_option("--grid", grid, "resolution of each level curve")
        ->check(CLI::PositiveNumber);
    atlas->add_option("-o,--output", output, "SVG destination (default stdout)");
    atlas->add_option("--px", px, "pixels per length unit in SVG output");

    auto* maximize = app.add_subcommand("maximize", "constrained area maximization");
    maximize->add_option("mode", mode, "perimeter or sides")->required();
    maximize->add_option("-i,--input", input, "payload JSON file");
    maximize->add_option("--n", n, "vertex count (perimeter mode)");
    maximize->add_option("--perimeter", L, "fixed perimeter (perimeter mode)");
    maximize->add_option("--sides", sides_csv, "comma-separated sides (sides mode)");
    maximize->add_option("--seed", seed, "start perturbation seed")->envname("POLYFOIL_SEED");
    maximize->add_option("--tol-opt", tol_opt, "gradient stopping tolerance")
        ->check(CLI::PositiveNumber);
    maximize->add_option("-o,--output", output, "result destination (default stdout)");

    auto* pair = app.add_subcommand("pair", "two isosceles triangles sharing both invariants");
    pair->add_option("--lambda", lambda, "common semiperimeter")
        ->required()
        ->check(CLI::PositiveNumber);
    pair->add_option("--area", area_target, "common area (default: family value)");
    pair->add_option("-o,--output", output, "result destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(input, output);
        if (app.got_subcommand(inscribe)) return cmd_inscribe(input, sides_csv, output);
        if (app.got_subcommand(trace))
            return cmd_trace(input, output, step, max_samples, seed, tol_leaf, svg_path, px);
        if (app.got_subcommand(atlas)) return cmd_atlas(lambda, levels, grid, output, px);
        if (app.got_subcommand(maximize))
            return cmd_maximize(mode, input, n, L, sides_csv, seed, tol_opt, output);
        if (app.got_subcommand(pair)) return cmd_pair(lambda, area_target, output);
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitIo;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const conditioning_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
