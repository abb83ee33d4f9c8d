// slope-nav: command-line driver for slope-metric computations.
//
// Subcommands: indicatrix, geodesic, front, envelope, convexity,
// bound-surface, sweep. Data goes to --out files (or stdout) as CSV with a
// header row and 17-significant-digit floats, so identical invocations are
// byte-identical; diagnostics go to stderr; --svg emits presentation plots.
// Exit codes: 0 success, 1 usage error, 2 numeric/admissibility error.
//
// Every subcommand accepts --config <file>, a JSON object whose keys mirror
// the long flag names ("surface", "eta-tilde", ...). Explicit flags override
// config values (the config is expanded before the command line, and the
// last occurrence wins).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "svg.hpp"

#include "slope_nav/convexity.hpp"
#include "slope_nav/errors.hpp"
#include "slope_nav/expr.hpp"
#include "slope_nav/front.hpp"
#include "slope_nav/geodesic.hpp"
#include "slope_nav/metric.hpp"

namespace {

using namespace slope_nav;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            comma == std::string::npos ? text.substr(pos)
                                       : text.substr(pos, comma - pos);
        bool ok = true;
        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(tok, &used);
            ok = used == tok.size();
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) {
            throw std::invalid_argument(
                std::string(flag) + ": expected comma-separated numbers, got '" +
                text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) {
        throw std::invalid_argument(std::string(flag) + ": empty list");
    }
    return out;
}

Vec2 parse_pair(const std::string& text, const char* flag) {
    const std::vector<double> v = parse_list(text, flag);
    if (v.size() != 2) {
        throw std::invalid_argument(std::string(flag) +
                                    ": expected x1,x2, got '" + text + "'");
    }
    return Vec2{v[0], v[1]};
}

Box parse_box(const std::string& text, const char* flag) {
    const std::vector<double> v = parse_list(text, flag);
    if (v.size() != 4) {
        throw std::invalid_argument(
            std::string(flag) + ": expected x1min,x2min,x1max,x2max, got '" +
            text + "'");
    }
    return Box{v[0], v[1], v[2], v[3]};
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::invalid_argument("failed writing output file '" + path +
                                    "'");
    }
}

void emit_svg(const std::string& path,
              const std::vector<svg::Polyline>& lines,
              const std::string& background = "") {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open SVG file '" + path + "'");
    }
    svg::write(out, lines, background);
    out.flush();
    if (!out) {
        throw std::invalid_argument("failed writing SVG file '" + path + "'");
    }
}

// Paper color code: MAT green, ZNP blue, CROSS red, RIEM white (on gray),
// anything else black.
std::string case_color(double eta, double etaTilde) {
    if (eta == 1.0 && etaTilde == 0.0) return "green";
    if (eta == 0.0 && etaTilde == 0.0) return "blue";
    if (eta == 0.0 && etaTilde == 1.0) return "red";
    if (eta == 1.0 && etaTilde == 1.0) return "white";
    return "black";
}

svg::Polyline closed_polyline(std::vector<Vec2> points, std::string stroke) {
    svg::Polyline line;
    if (!points.empty()) points.push_back(points.front());
    line.points = std::move(points);
    line.stroke = std::move(stroke);
    return line;
}

// Expands --config <file> (a JSON object mirroring the flag names) into
// synthetic arguments placed right after the subcommand token, so explicit
// flags override config values under the take-last option policy.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    nlohmann::json config;
    try {
        in >> config;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config '" + path +
                                    "': " + std::string(e.what()));
    }
    if (!config.is_object()) {
        throw std::invalid_argument("config '" + path +
                                    "' must be a JSON object");
    }

    std::vector<std::string> expanded;
    for (const auto& [key, value] : config.items()) {
        if (key == "config") continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) expanded.push_back("--" + key);
        } else if (value.is_string()) {
            expanded.push_back("--" + key);
            expanded.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            expanded.push_back("--" + key);
            expanded.push_back(fmt(value.get<double>()));
        } else {
            throw std::invalid_argument("config key '" + key +
                                        "' must be a scalar");
        }
    }

    std::vector<std::string> out;
    std::size_t rest = 0;
    while (rest < args.size()) {
        out.push_back(args[rest]);
        ++rest;
        if (!out.back().empty() && out.back()[0] != '-') break;  // subcommand
    }
    out.insert(out.end(), expanded.begin(), expanded.end());
    out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(rest),
               args.end());
    return out;
}

std::vector<double> heading_grid(int n) {
    std::vector<double> thetas(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        thetas[static_cast<std::size_t>(k)] = 2.0 * kPi * k / n;
    }
    return thetas;
}

std::vector<Vec2> front_outline(const TimeFront& front) {
    std::vector<Vec2> points;
    for (const FrontSample& sample : front.samples) {
        if (sample.ok) points.push_back(sample.endpoint);
    }
    return points;
}

int run(std::vector<std::string> rawArgs) {
    std::vector<std::string> args = expand_config(std::move(rawArgs));

    CLI::App app{
        "Time-optimal navigation on slippery slopes under gravity: slope "
        "metrics, geodesics, time fronts, convexity certificates."};
    app.option_defaults()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    const char* kSurfaceHelp =
        "surface spec: incline:<a> | gauss3 | expr:<formula>";
    const char* kConfigHelp =
        "JSON config file mirroring the flag names; flags override it";

    struct {
        std::string surface, at = "0,0", out, svgPath, config;
        double eta = 0.0, etaTilde = 0.0, gbar = 0.0;
        int n = 256;
    } ind;
    CLI::App* indicatrixCmd = app.add_subcommand(
        "indicatrix",
        "Sample the unit-time velocity boundary F(x,y) = 1 at a point "
        "(CSV: theta,X,Y,y1,y2)");
    indicatrixCmd->add_option("--surface", ind.surface, kSurfaceHelp)
        ->required();
    indicatrixCmd->add_option("--at", ind.at, "evaluation point x1,x2");
    indicatrixCmd->add_option("--eta", ind.eta, "cross traction in [0,1]")
        ->required();
    indicatrixCmd
        ->add_option("--eta-tilde", ind.etaTilde, "along traction in [0,1]")
        ->required();
    indicatrixCmd->add_option("--gbar", ind.gbar, "rescaled gravity, >= 0")
        ->required();
    indicatrixCmd->add_option("--n", ind.n, "number of heading samples");
    indicatrixCmd->add_option("--out", ind.out, "CSV file (default stdout)");
    indicatrixCmd->add_option("--svg", ind.svgPath, "SVG plot file");
    indicatrixCmd->add_option("--config", ind.config, kConfigHelp);

    struct {
        std::string surface, from = "0,0", out, svgPath, config;
        double eta = 0.0, etaTilde = 0.0, gbar = 0.0;
        double theta = 0.0, T = 1.0, dt = 1e-3, driftTol = 1e-6;
        bool renormalize = false, adaptive = false;
    } geo;
    CLI::App* geodesicCmd = app.add_subcommand(
        "geodesic",
        "Integrate one time geodesic (CSV: t,x1,x2,y1,y2,Fdrift)");
    geodesicCmd->add_option("--surface", geo.surface, kSurfaceHelp)
        ->required();
    geodesicCmd->add_option("--from", geo.from, "start point x1,x2");
    geodesicCmd->add_option("--theta", geo.theta,
                            "initial heading (radians, 0 = downhill)");
    geodesicCmd->add_option("--eta", geo.eta, "cross traction in [0,1]")
        ->required();
    geodesicCmd
        ->add_option("--eta-tilde", geo.etaTilde, "along traction in [0,1]")
        ->required();
    geodesicCmd->add_option("--gbar", geo.gbar, "rescaled gravity, >= 0")
        ->required();
    geodesicCmd->add_option("--T", geo.T, "time horizon")->required();
    geodesicCmd->add_option("--dt", geo.dt, "RK4 step");
    geodesicCmd->add_option("--drift-tol", geo.driftTol,
                            "|F - 1| ceiling along the path");
    geodesicCmd->add_flag("--renormalize", geo.renormalize,
                          "project back onto F = 1 after each step");
    geodesicCmd->add_flag("--adaptive", geo.adaptive,
                          "halve the step locally while drift exceeds the "
                          "tolerance");
    geodesicCmd->add_option("--out", geo.out, "CSV file (default stdout)");
    geodesicCmd->add_option("--svg", geo.svgPath, "SVG plot file");
    geodesicCmd->add_option("--config", geo.config, kConfigHelp);

    struct {
        std::string surface, center = "0,0", t, out, svgPath, config;
        double eta = 0.0, etaTilde = 0.0, gbar = 0.0, dt = 1e-3;
        int rays = 32;
    } frontOpt;
    CLI::App* frontCmd = app.add_subcommand(
        "front",
        "Time fronts (isochrones) from a geodesic fan "
        "(CSV: t,theta,x1,x2,ok)");
    frontCmd->add_option("--surface", frontOpt.surface, kSurfaceHelp)
        ->required();
    frontCmd->add_option("--center", frontOpt.center, "front center x1,x2");
    frontCmd->add_option("--eta", frontOpt.eta, "cross traction in [0,1]")
        ->required();
    frontCmd
        ->add_option("--eta-tilde", frontOpt.etaTilde,
                     "along traction in [0,1]")
        ->required();
    frontCmd->add_option("--gbar", frontOpt.gbar, "rescaled gravity, >= 0")
        ->required();
    frontCmd
        ->add_option("--t", frontOpt.t,
                     "comma-separated front times, e.g. 1,2")
        ->required();
    frontCmd->add_option("--rays", frontOpt.rays, "fan size (>= 8)");
    frontCmd->add_option("--dt", frontOpt.dt, "RK4 step");
    frontCmd->add_option("--out", frontOpt.out, "CSV file (default stdout)");
    frontCmd->add_option("--svg", frontOpt.svgPath, "SVG plot file");
    frontCmd->add_option("--config", frontOpt.config, kConfigHelp);

    struct {
        std::string surface, center = "0,0", out, svgPath, config;
        double gbar = 0.0, t = 1.0, dt = 1e-3;
        int rays = 64;
    } env;
    CLI::App* envelopeCmd = app.add_subcommand(
        "envelope",
        "Four-corner fronts bounding every traction pair "
        "(CSV: case,theta,x1,x2)");
    envelopeCmd->add_option("--surface", env.surface, kSurfaceHelp)
        ->required();
    envelopeCmd->add_option("--center", env.center, "front center x1,x2");
    envelopeCmd->add_option("--gbar", env.gbar, "rescaled gravity, >= 0")
        ->required();
    envelopeCmd->add_option("--t", env.t, "front time");
    envelopeCmd->add_option("--rays", env.rays, "fan size (>= 8)");
    envelopeCmd->add_option("--dt", env.dt, "RK4 step");
    envelopeCmd->add_option("--out", env.out, "CSV file (default stdout)");
    envelopeCmd->add_option("--svg", env.svgPath, "SVG plot file");
    envelopeCmd->add_option("--config", env.config, kConfigHelp);

    struct {
        std::string surface, region = "-3,-3,3,3", out, config;
        double eta = 0.0, etaTilde = 0.0;
        int grid = 256;
    } conv;
    CLI::App* convexityCmd = app.add_subcommand(
        "convexity",
        "Certify strong convexity over a region: prints the steepness "
        "maximum m, its argmax, and the gravity bound delta");
    convexityCmd->add_option("--surface", conv.surface, kSurfaceHelp)
        ->required();
    convexityCmd->add_option("--region", conv.region,
                             "box x1min,x2min,x1max,x2max");
    convexityCmd->add_option("--grid", conv.grid, "scan grid size (>= 32)");
    convexityCmd->add_option("--eta", conv.eta, "cross traction in [0,1]")
        ->required();
    convexityCmd
        ->add_option("--eta-tilde", conv.etaTilde,
                     "along traction in [0,1]")
        ->required();
    convexityCmd->add_option("--out", conv.out,
                             "output file (default stdout)");
    convexityCmd->add_option("--config", conv.config, kConfigHelp);

    struct {
        std::string out, config;
        int grid = 256;
        double ceiling = 5.0;
    } bound;
    CLI::App* boundCmd = app.add_subcommand(
        "bound-surface",
        "Wind-bound surface b0(eta, etaTilde) over the traction square "
        "(CSV: eta,etaTilde,bound)");
    boundCmd->add_option("--grid", bound.grid, "grid size (>= 16)");
    boundCmd->add_option("--ceiling", bound.ceiling,
                         "clamp value for plotting");
    boundCmd->add_option("--out", bound.out, "CSV file (default stdout)");
    boundCmd->add_option("--config", bound.config, kConfigHelp);

    struct {
        std::string surface, center = "0,0", gbar, out, svgPath, config;
        double eta = 0.0, etaTilde = 0.0, t = 1.0, dt = 1e-3;
        int rays = 32;
    } sweep;
    CLI::App* sweepCmd = app.add_subcommand(
        "sweep",
        "One front per gravity value (CSV: gbar,theta,x1,x2,ok)");
    sweepCmd->add_option("--surface", sweep.surface, kSurfaceHelp)
        ->required();
    sweepCmd->add_option("--center", sweep.center, "front center x1,x2");
    sweepCmd->add_option("--eta", sweep.eta, "cross traction in [0,1]")
        ->required();
    sweepCmd
        ->add_option("--eta-tilde", sweep.etaTilde,
                     "along traction in [0,1]")
        ->required();
    sweepCmd
        ->add_option("--gbar", sweep.gbar,
                     "comma-separated gravity values, e.g. 0.2,0.5,0.76")
        ->required();
    sweepCmd->add_option("--t", sweep.t, "front time");
    sweepCmd->add_option("--rays", sweep.rays, "fan size (>= 8)");
    sweepCmd->add_option("--dt", sweep.dt, "RK4 step");
    sweepCmd->add_option("--out", sweep.out, "CSV file (default stdout)");
    sweepCmd->add_option("--svg", sweep.svgPath, "SVG plot file");
    sweepCmd->add_option("--config", sweep.config, kConfigHelp);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (app.got_subcommand(indicatrixCmd)) {
        if (ind.n < 4) {
            throw std::invalid_argument("indicatrix requires --n >= 4");
        }
        const auto surface = make_surface(ind.surface);
        const Vec2 at = parse_pair(ind.at, "--at");
        const TractionParams params = classify(ind.eta, ind.etaTilde);
        const PointGeometry geom =
            point_geometry(*surface, at.x1, at.x2, ind.gbar);
        const std::vector<IndicatrixPoint> points =
            indicatrix(geom, params, heading_grid(ind.n));

        std::ostringstream csv;
        csv << "theta,X,Y,y1,y2\n";
        for (const IndicatrixPoint& p : points) {
            csv << fmt(p.theta) << ',' << fmt(p.X) << ',' << fmt(p.Y) << ','
                << fmt(p.y.x1) << ',' << fmt(p.y.x2) << '\n';
        }
        emit(ind.out, csv.str());

        if (!ind.svgPath.empty()) {
            std::vector<Vec2> outline;
            outline.reserve(points.size());
            for (const IndicatrixPoint& p : points) {
                outline.push_back(Vec2{p.X, p.Y});
            }
            const std::string color = case_color(ind.eta, ind.etaTilde);
            emit_svg(ind.svgPath, {closed_polyline(outline, color)},
                     color == "white" ? "gray" : "");
        }
        return 0;
    }

    if (app.got_subcommand(geodesicCmd)) {
        const auto surface = make_surface(geo.surface);
        const Vec2 from = parse_pair(geo.from, "--from");
        const TractionParams params = classify(geo.eta, geo.etaTilde);
        IntegrateOptions options;
        options.driftTol = geo.driftTol;
        options.renormalize = geo.renormalize;
        options.adaptive = geo.adaptive;
        const GeodesicPath path = integrate(*surface, from, geo.theta,
                                            params, geo.gbar, geo.T, geo.dt,
                                            options);

        std::ostringstream csv;
        csv << "t,x1,x2,y1,y2,Fdrift\n";
        for (const GeodesicState& state : path.states) {
            const PointGeometry g =
                point_geometry(*surface, state.x.x1, state.x.x2, geo.gbar);
            const double drift =
                std::fabs(slope_metric(g, state.y, params).F - 1.0);
            csv << fmt(state.t) << ',' << fmt(state.x.x1) << ','
                << fmt(state.x.x2) << ',' << fmt(state.y.x1) << ','
                << fmt(state.y.x2) << ',' << fmt(drift) << '\n';
        }
        emit(geo.out, csv.str());

        if (!geo.svgPath.empty()) {
            std::vector<Vec2> line;
            line.reserve(path.states.size());
            for (const GeodesicState& state : path.states) {
                line.push_back(state.x);
            }
            svg::Polyline poly;
            poly.points = std::move(line);
            poly.stroke = case_color(geo.eta, geo.etaTilde);
            emit_svg(geo.svgPath, {poly},
                     poly.stroke == "white" ? "gray" : "");
        }

        if (path.status != PathStatus::complete) {
            std::cerr << "geodesic truncated at t = "
                      << path.states.back().t << ": " << path.message
                      << "\n";
            return 2;
        }
        return 0;
    }

    if (app.got_subcommand(frontCmd)) {
        const auto surface = make_surface(frontOpt.surface);
        const Vec2 center = parse_pair(frontOpt.center, "--center");
        const TractionParams params =
            classify(frontOpt.eta, frontOpt.etaTilde);
        const std::vector<double> times = parse_list(frontOpt.t, "--t");

        std::vector<TimeFront> fronts;
        fronts.reserve(times.size());
        for (double t : times) {
            fronts.push_back(time_front(*surface, center, params,
                                        frontOpt.gbar, t, frontOpt.rays,
                                        frontOpt.dt));
        }

        std::ostringstream csv;
        csv << "t,theta,x1,x2,ok\n";
        int gaps = 0;
        for (const TimeFront& front : fronts) {
            for (const FrontSample& sample : front.samples) {
                if (!sample.ok) ++gaps;
                csv << fmt(front.t) << ',' << fmt(sample.theta) << ','
                    << fmt(sample.endpoint.x1) << ','
                    << fmt(sample.endpoint.x2) << ','
                    << (sample.ok ? 1 : 0) << '\n';
            }
        }
        emit(frontOpt.out, csv.str());
        if (gaps > 0) {
            std::cerr << "front: " << gaps
                      << " ray(s) failed mid-flight and were recorded as "
                         "gaps\n";
        }

        if (!frontOpt.svgPath.empty()) {
            std::vector<svg::Polyline> lines;
            const std::string color =
                case_color(frontOpt.eta, frontOpt.etaTilde);
            for (const TimeFront& front : fronts) {
                const std::vector<Vec2> outline = front_outline(front);
                if (!outline.empty()) {
                    lines.push_back(closed_polyline(outline, color));
                }
            }
            emit_svg(frontOpt.svgPath, lines,
                     color == "white" ? "gray" : "");
        }
        return 0;
    }

    if (app.got_subcommand(envelopeCmd)) {
        const auto surface = make_surface(env.surface);
        const Vec2 center = parse_pair(env.center, "--center");
        const EnvelopeBounds bounds = envelope_bounds(
            *surface, center, env.gbar, env.t, env.rays, env.dt);

        const struct {
            const char* name;
            const TimeFront* front;
            const char* color;
        } cases[] = {{"ZNP", &bounds.znp, "blue"},
                     {"RIEM", &bounds.riem, "white"},
                     {"MAT", &bounds.mat, "green"},
                     {"CROSS", &bounds.cross, "red"}};

        std::ostringstream csv;
        csv << "case,theta,x1,x2\n";
        for (const auto& c : cases) {
            for (const FrontSample& sample : c.front->samples) {
                csv << c.name << ',' << fmt(sample.theta) << ','
                    << fmt(sample.endpoint.x1) << ','
                    << fmt(sample.endpoint.x2) << '\n';
            }
        }
        emit(env.out, csv.str());

        if (!env.svgPath.empty()) {
            std::vector<svg::Polyline> lines;
            for (const auto& c : cases) {
                lines.push_back(
                    closed_polyline(front_outline(*c.front), c.color));
            }
            emit_svg(env.svgPath, lines, "gray");
        }
        return 0;
    }

    if (app.got_subcommand(convexityCmd)) {
        const auto surface = make_surface(conv.surface);
        const Box region = parse_box(conv.region, "--region");
        const TractionParams params = classify(conv.eta, conv.etaTilde);
        const SteepnessResult peak =
            max_steepness(*surface, region, conv.grid);
        const double delta =
            (std::isinf(params.windBound) || peak.m == 0.0)
                ? std::numeric_limits<double>::infinity()
                : params.windBound / peak.m;

        std::ostringstream text;
        text << "m = " << fmt(peak.m) << "\n"
             << "argmax = " << fmt(peak.argmax.x1) << ","
             << fmt(peak.argmax.x2) << "\n"
             << "delta = " << fmt(delta) << "\n";
        emit(conv.out, text.str());
        return 0;
    }

    if (app.got_subcommand(boundCmd)) {
        const std::vector<BoundSample> grid =
            bound_surface(bound.grid, bound.ceiling);
        std::ostringstream csv;
        csv << "eta,etaTilde,bound\n";
        for (const BoundSample& sample : grid) {
            csv << fmt(sample.eta) << ',' << fmt(sample.etaTilde) << ','
                << fmt(sample.bound) << '\n';
        }
        emit(bound.out, csv.str());
        return 0;
    }

    if (app.got_subcommand(sweepCmd)) {
        const auto surface = make_surface(sweep.surface);
        const Vec2 center = parse_pair(sweep.center, "--center");
        const TractionParams params = classify(sweep.eta, sweep.etaTilde);
        const std::vector<double> gbars = parse_list(sweep.gbar, "--gbar");

        std::vector<TimeFront> fronts;
        fronts.reserve(gbars.size());
        for (double g : gbars) {
            fronts.push_back(time_front(*surface, center, params, g,
                                        sweep.t, sweep.rays, sweep.dt));
        }

        std::ostringstream csv;
        csv << "gbar,theta,x1,x2,ok\n";
        int gaps = 0;
        for (const TimeFront& front : fronts) {
            for (const FrontSample& sample : front.samples) {
                if (!sample.ok) ++gaps;
                csv << fmt(front.gbar) << ',' << fmt(sample.theta) << ','
                    << fmt(sample.endpoint.x1) << ','
                    << fmt(sample.endpoint.x2) << ','
                    << (sample.ok ? 1 : 0) << '\n';
            }
        }
        emit(sweep.out, csv.str());
        if (gaps > 0) {
            std::cerr << "sweep: " << gaps
                      << " ray(s) failed mid-flight and were recorded as "
                         "gaps\n";
        }

        if (!sweep.svgPath.empty()) {
            std::vector<svg::Polyline> lines;
            const std::string color =
                case_color(sweep.eta, sweep.etaTilde);
            for (const TimeFront& front : fronts) {
                const std::vector<Vec2> outline = front_outline(front);
                if (!outline.empty()) {
                    lines.push_back(closed_polyline(outline, color));
                }
            }
            emit_svg(sweep.svgPath, lines, color == "white" ? "gray" : "");
        }
        return 0;
    }

    return 0;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(std::move(args));
    } catch (const expr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
