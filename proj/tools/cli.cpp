#include "cli.hpp"

#include "rsg/error.hpp"
#include "rsg/graphic_io.hpp"
#include "rsg/local_queries.hpp"
#include "rsg/reeb_slice.hpp"
#include "rsg/shipped_examples.hpp"
#include "rsg/stabilization.hpp"
#include "rsg/sweep.hpp"
#include "rsg/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace rsg::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

std::string fmt(const char* pattern, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

// Rounded through its 12-digit text so the JSON writer prints the same digits.
double angle12(double v) { return std::stod(fmt("%.12g", v)); }

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

int exit_code_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::Io:
    case ErrorCode::SchemaError:
    case ErrorCode::ChainError: return kExitIo;
    default: return kExitInvalid;
    }
}

CommandResult failure(const Error& e) { return {exit_code_for(e), "", std::string(e.what()) + "\n"}; }

Json violations_json(const ValidationReport& rep)
{
    Json out = Json::array();
    for (const Violation& v : rep.violations)
        out.push_back({{"kind", to_string(v.kind)}, {"location", v.location}, {"detail", v.detail}});
    return out;
}

std::string violations_text(const ValidationReport& rep)
{
    std::ostringstream out;
    std::size_t w = 4;
    for (const Violation& v : rep.violations) w = std::max(w, to_string(v.kind).size());
    for (const Violation& v : rep.violations) {
        const std::string kind(to_string(v.kind));
        out << "  " << kind << std::string(w - kind.size() + 2, ' ') << v.location << ": " << v.detail << "\n";
    }
    return out.str();
}

std::string location_text(const EventLocation& l)
{
    std::ostringstream out;
    if (l.vertex)
        out << "c" << l.vertex->component << ".v" << l.vertex->vertex;
    else
        out << "c" << l.segment.component << ".s" << l.segment.segment << "@" << fmt("%.6f", l.s);
    return out.str();
}

Json location_json(const EventLocation& l)
{
    Json j{{"component", l.segment.component}, {"segment", l.segment.segment}, {"s", angle12(l.s)}};
    if (l.vertex) j["vertex"] = l.vertex->vertex;
    j["point"] = {angle12(l.point.x), angle12(l.point.y)};
    return j;
}

Json census_json(const SliceCensus& c)
{
    const SliceEuler e = slice_euler(c);
    return {{"level", angle12(c.level)},
            {"n_def", c.n_def},
            {"m_indef", c.m_indef},
            {"vertices", e.vertices},
            {"edges", e.edges},
            {"chi_reeb", e.chi_reeb},
            {"chi_surface", e.chi_surface}};
}

Json profile_json(const SliceProfile& p)
{
    Json bps = Json::array();
    for (std::size_t i = 0; i < p.breakpoints.size(); ++i)
        bps.push_back({{"level", angle12(p.breakpoints[i])},
                       {"kind", p.kinds[i] == BreakpointKind::Tangency ? "tangency" : "cusp"}});
    Json cs = Json::array();
    for (const SliceCensus& c : p.censuses) cs.push_back(census_json(c));
    return {{"angle", angle12(p.angle)}, {"breakpoints", bps}, {"censuses", cs}};
}

std::string profile_text(const SliceProfile& p)
{
    std::ostringstream out;
    out << "  angle " << fmt("%.12g", p.angle) << "\n";
    out << "    level-band              n_def  m_indef  chi_surface\n";
    for (std::size_t i = 0; i < p.censuses.size(); ++i) {
        const std::string lo = i == 0 ? "-inf" : fmt("%.6f", p.breakpoints[i - 1]);
        const std::string hi = i == p.breakpoints.size() ? "+inf" : fmt("%.6f", p.breakpoints[i]);
        const std::string band = "(" + lo + ", " + hi + ")";
        char row[160];
        std::snprintf(row, sizeof row, "    %-22s  %5d  %7d  %11d\n", band.c_str(), p.censuses[i].n_def,
                      p.censuses[i].m_indef, slice_euler(p.censuses[i]).chi_surface);
        out << row;
    }
    return out.str();
}

struct Loaded {
    Graphic graphic;
    ValidationReport report;
};

Loaded load_and_validate(const std::string& path)
{
    Loaded l{load_graphic(path), {}};
    l.report = validate(l.graphic);
    return l;
}

} // namespace

CommandResult cmd_validate(const std::string& path, Format format)
{
    try {
        const Loaded l = load_and_validate(path);
        const int code = l.report.ok() ? kExitOk : kExitInvalid;
        if (format == Format::Json) {
            Json doc{{"schema", kSchema},
                     {"command", "validate"},
                     {"file", path},
                     {"ok", l.report.ok()},
                     {"violations", violations_json(l.report)}};
            return {code, dump(doc), ""};
        }
        std::string text = path + ": " + (l.report.ok() ? "ok" : "invalid") + "\n";
        if (!l.report.ok()) text += violations_text(l.report);
        return {code, text, ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_sweep(const std::string& path, Format format)
{
    try {
        const Loaded l = load_and_validate(path);
        if (!l.report.ok()) {
            if (format == Format::Json) {
                Json doc{{"schema", kSchema},
                         {"command", "sweep"},
                         {"file", path},
                         {"ok", false},
                         {"violations", violations_json(l.report)}};
                return {kExitInvalid, dump(doc), "graphic failed validation\n"};
            }
            return {kExitInvalid, path + ": invalid\n" + violations_text(l.report), "graphic failed validation\n"};
        }
        const SweepAnalysis a = analyze(l.graphic);
        const ReducedSequence reduced = reduce(from_trajectory(a.trajectory));

        std::vector<double> edges{0.0};
        edges.insert(edges.end(), a.trajectory.breakpoints.begin(), a.trajectory.breakpoints.end());
        edges.push_back(0.5 * std::numbers::pi);
        std::vector<SliceProfile> profiles;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            profiles.push_back(slice_profile(l.graphic, 0.5 * (edges[i] + edges[i + 1])));

        if (format == Format::Json) {
            Json events = Json::array();
            for (const Event& e : a.schedule.events) {
                Json locs = Json::array();
                for (const EventLocation& loc : e.locations) locs.push_back(location_json(loc));
                events.push_back({{"angle", angle12(e.angle)},
                                  {"kind", to_string(e.kind)},
                                  {"genus_delta", e.genus_delta},
                                  {"locations", locs}});
            }
            Json bps = Json::array();
            for (double t : a.trajectory.breakpoints) bps.push_back(angle12(t));
            Json slices = Json::array();
            for (const SliceProfile& p : profiles) slices.push_back(profile_json(p));
            Json doc{{"schema", kSchema},
                     {"command", "sweep"},
                     {"file", path},
                     {"ok", true},
                     {"events", events},
                     {"warnings", a.schedule.warnings},
                     {"delta", angle12(a.schedule.delta)},
                     {"trajectory", {{"breakpoints", bps}, {"genera", a.trajectory.genera}}},
                     {"p", a.bound.p},
                     {"q", a.bound.q},
                     {"c", a.bound.c},
                     {"peak", a.bound.peak},
                     {"bound", a.bound.bound},
                     {"moves", from_trajectory(a.trajectory).moves},
                     {"reduced", {{"moves", reduced.moves}, {"peak", reduced.peak}}},
                     {"slices", slices}};
            return {kExitOk, dump(doc), ""};
        }

        std::ostringstream out;
        out << path << "\n\nevents\n";
        out << "  angle            kind                  delta  location\n";
        for (const Event& e : a.schedule.events) {
            std::string locs;
            for (const EventLocation& loc : e.locations) locs += (locs.empty() ? "" : " ") + location_text(loc);
            char row[256];
            const std::string delta = e.genus_delta == 0 ? "0" : (e.genus_delta > 0 ? "+" : "") + std::to_string(e.genus_delta);
            std::snprintf(row, sizeof row, "  %-15s  %-20s  %5s  %s\n", fmt("%.12g", e.angle).c_str(),
                          std::string(to_string(e.kind)).c_str(), delta.c_str(), locs.c_str());
            out << row;
        }
        if (a.schedule.events.empty()) out << "  (none)\n";
        for (const std::string& w : a.schedule.warnings) out << "warning: " << w << "\n";
        out << "\ntrajectory genera:";
        for (int gg : a.trajectory.genera) out << " " << gg;
        out << "\n\n";
        char summary[160];
        std::snprintf(summary, sizeof summary, "p = %d  q = %d  c = %d  peak = %d  bound = %d\n", a.bound.p, a.bound.q,
                      a.bound.c, a.bound.peak, a.bound.bound);
        out << summary;
        out << "reduced moves:";
        for (int m : reduced.moves) out << " " << (m > 0 ? "+1" : "-1");
        out << "  (peak " << reduced.peak << ")\n\nslices\n";
        for (const SliceProfile& p : profiles) out << profile_text(p);
        return {kExitOk, out.str(), ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_slice(const std::string& path, double angle, std::optional<double> level, Format format)
{
    try {
        const Graphic g = load_graphic(path);
        if (level) {
            const SliceCensus c = slice_census(g, angle, *level);
            const SliceEuler e = slice_euler(c);
            if (format == Format::Json) {
                Json doc{{"schema", kSchema}, {"command", "slice"}, {"file", path}, {"angle", angle12(angle)}};
                const Json body = census_json(c);
                for (const auto& [k, v] : body.items()) doc[k] = v;
                return {kExitOk, dump(doc), ""};
            }
            char text[256];
            std::snprintf(text, sizeof text,
                          "angle %s  level %s\nn_def = %d  m_indef = %d\nV = %d  E = %d  chi_reeb = %d  chi_surface = %d\n",
                          fmt("%.12g", angle).c_str(), fmt("%.12g", *level).c_str(), c.n_def, c.m_indef, e.vertices,
                          e.edges, e.chi_reeb, e.chi_surface);
            return {kExitOk, text, ""};
        }
        const SliceProfile p = slice_profile(g, angle);
        if (format == Format::Json) {
            Json doc{{"schema", kSchema}, {"command", "slice"}, {"file", path}};
            const Json body = profile_json(p);
            for (const auto& [k, v] : body.items()) doc[k] = v;
            return {kExitOk, dump(doc), ""};
        }
        return {kExitOk, profile_text(p), ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

std::string render_svg(const Graphic& g, std::optional<double> angle)
{
    struct Panel {
        Graphic graphic;
        double dx = 0.0;
        std::vector<Point> tangencies;
    };
    std::vector<Panel> panels{{g, 0.0, {}}};
    if (angle) {
        Panel rotated_panel{transformed(g, *angle), 0.0, {}};
        for (const CriticalPoint& cp : critical_points(g, *angle)) rotated_panel.tangencies.push_back(rotated(cp.point, *angle));
        panels.push_back(std::move(rotated_panel));
    }

    auto extent = [](const Graphic& gr, Point& lo, Point& hi) {
        lo = {1e300, 1e300};
        hi = {-1e300, -1e300};
        for (const Component& c : gr.components)
            for (const Segment& s : c.segments) {
                Point a, b;
                s.curve.bounds(a, b);
                lo = {std::min(lo.x, a.x), std::min(lo.y, a.y)};
                hi = {std::max(hi.x, b.x), std::max(hi.y, b.y)};
            }
    };

    Point lo, hi;
    extent(panels[0].graphic, lo, hi);
    double width = hi.x - lo.x;
    const double margin = 0.1 * std::max({width, hi.y - lo.y, 1e-9});
    double ymin = lo.y, ymax = hi.y;
    double xcursor = hi.x + 3.0 * margin;
    for (std::size_t i = 1; i < panels.size(); ++i) {
        Point a, b;
        extent(panels[i].graphic, a, b);
        panels[i].dx = xcursor - a.x;
        xcursor += (b.x - a.x) + 3.0 * margin;
        ymin = std::min(ymin, a.y);
        ymax = std::max(ymax, b.y);
        hi.x = panels[i].dx + b.x;
    }
    width = hi.x - lo.x + 2.0 * margin;
    const double height = ymax - ymin + 2.0 * margin;
    const double stroke = 0.004 * std::max(width, height);
    const double mark = 2.5 * stroke;

    auto X = [](double x) { return fmt("%.6f", x); };
    auto Y = [](double y) { return fmt("%.6f", -y); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << X(lo.x - margin) << " "
        << Y(ymax + margin) << " " << X(width) << " " << X(height) << "\" width=\"800\" height=\""
        << static_cast<int>(800.0 * height / width) << "\">\n";
    svg << "  <rect x=\"" << X(lo.x - margin) << "\" y=\"" << Y(ymax + margin) << "\" width=\"" << X(width)
        << "\" height=\"" << X(height) << "\" fill=\"white\"/>\n";
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const Panel& p = panels[pi];
        const Point shift{p.dx, 0.0};
        svg << "  <g id=\"" << (pi == 0 ? "graphic" : "rotated") << "\">\n";
        for (const Component& c : p.graphic.components) {
            // One path per run of equally folded segments; a single-fold
            // component becomes one closed path.
            const std::size_t n = c.segments.size();
            std::size_t first = 0;
            while (first < n && c.segments[(first + n - 1) % n].fold == c.segments[first].fold) {
                ++first;
                if (first == n) break;
            }
            const bool closed = first == n;
            if (closed) first = 0;
            std::size_t i = 0;
            while (i < n) {
                const FoldType fold = c.segments[(first + i) % n].fold;
                const Point start = c.segments[(first + i) % n].curve.control()[0];
                svg << "    <path d=\"M " << X(start.x + shift.x) << " " << Y(start.y);
                while (i < n && c.segments[(first + i) % n].fold == fold) {
                    const auto& k = c.segments[(first + i) % n].curve.control();
                    svg << " C";
                    for (std::size_t j = 1; j < 4; ++j) svg << " " << X(k[j].x + shift.x) << " " << Y(k[j].y);
                    ++i;
                }
                if (closed) svg << " Z";
                svg << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << X(stroke) << "\"";
                if (fold == FoldType::Indefinite)
                    svg << " stroke-dasharray=\"" << X(4 * stroke) << " " << X(2.5 * stroke) << "\"";
                svg << " class=\"" << to_string(fold) << "\"/>\n";
            }
        }
        for (const Component& c : p.graphic.components)
            for (const Vertex& v : c.vertices)
                if (v.kind == VertexKind::Cusp)
                    svg << "    <circle class=\"cusp\" cx=\"" << X(v.position.x + shift.x) << "\" cy=\"" << Y(v.position.y)
                        << "\" r=\"" << X(mark) << "\" fill=\"red\"/>\n";
        for (const InflectionSite& site : inflection_sites(p.graphic))
            svg << "    <rect class=\"inflection\" x=\"" << X(site.point.x + shift.x - mark) << "\" y=\""
                << Y(site.point.y + mark) << "\" width=\"" << X(2 * mark) << "\" height=\"" << X(2 * mark)
                << "\" fill=\"blue\"/>\n";
        for (const Point& t : p.tangencies)
            svg << "    <circle class=\"tangency\" cx=\"" << X(t.x + shift.x) << "\" cy=\"" << Y(t.y) << "\" r=\""
                << X(mark) << "\" fill=\"none\" stroke=\"green\" stroke-width=\"" << X(stroke) << "\"/>\n";
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

CommandResult cmd_plot(const std::string& path, const std::string& out, std::optional<double> angle)
{
    try {
        const Loaded l = load_and_validate(path);
        if (!l.report.ok()) return {kExitInvalid, violations_text(l.report), "graphic failed validation\n"};
        const std::string svg = render_svg(l.graphic, angle);
        std::ofstream f(out, std::ios::binary);
        if (!f) throw Error(ErrorCode::Io, "cannot write " + out);
        f << svg;
        if (!f) throw Error(ErrorCode::Io, "cannot write " + out);
        return {kExitOk, "wrote " + out + "\n", ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_examples_list()
{
    std::string out;
    for (const std::string& n : example_names()) out += n + "\n";
    return {kExitOk, out, ""};
}

CommandResult cmd_examples_emit(const std::string& name, const std::string& dir)
{
    try {
        const std::string_view text = example_source(name);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        const std::filesystem::path file = std::filesystem::path(dir) / (name + ".json");
        std::ofstream f(file, std::ios::binary);
        if (!f) throw Error(ErrorCode::Io, "cannot write " + file.string());
        f << text;
        if (!f) throw Error(ErrorCode::Io, "cannot write " + file.string());
        return {kExitOk, "wrote " + file.string() + "\n", ""};
    } catch (const Error& e) {
        return {e.code() == ErrorCode::UnknownExample ? kExitInvalid : kExitIo, "", std::string(e.what()) + "\n"};
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Analysis engine for graphics of stable maps to the plane"};
    app.require_subcommand(1);

    std::string path, out, format_name = "text";
    std::optional<double> angle, level;
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};

    auto* validate_cmd = app.add_subcommand("validate", "Check a graphic against the local axioms");
    validate_cmd->add_option("path", path, "Graphic file")->required();
    validate_cmd->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

    auto* sweep_cmd = app.add_subcommand("sweep", "Event table, genus trajectory and stabilization bound");
    sweep_cmd->add_option("path", path, "Graphic file")->required();
    sweep_cmd->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

    auto* slice_cmd = app.add_subcommand("slice", "Level-line census at an angle");
    slice_cmd->add_option("path", path, "Graphic file")->required();
    slice_cmd->add_option("--angle", angle, "Rotation angle in radians")->required();
    slice_cmd->add_option("--level", level, "Height of the level line; omit for the whole profile");
    slice_cmd->add_option("--format", format_name)->check(CLI::IsMember({"json", "text"}));

    auto* plot_cmd = app.add_subcommand("plot", "Write an SVG drawing");
    plot_cmd->add_option("path", path, "Graphic file")->required();
    plot_cmd->add_option("--out", out, "SVG output file")->required();
    plot_cmd->add_option("--angle", angle, "Also draw the graphic rotated by this angle");

    auto* examples_cmd = app.add_subcommand("examples", "List or write the bundled graphics");
    bool list = false;
    std::vector<std::string> emit;
    examples_cmd->add_flag("--list", list, "Print the bundled names");
    examples_cmd->add_option("--emit", emit, "NAME DIR")->expected(2);
    examples_cmd->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    }

    const Format format = formats.at(format_name);
    CommandResult r;
    if (*validate_cmd)
        r = cmd_validate(path, format);
    else if (*sweep_cmd)
        r = cmd_sweep(path, format);
    else if (*slice_cmd)
        r = cmd_slice(path, *angle, level, format);
    else if (*plot_cmd)
        r = cmd_plot(path, out, angle);
    else if (list)
        r = cmd_examples_list();
    else
        r = cmd_examples_emit(emit.at(0), emit.at(1));
    std::cout << r.output;
    std::cerr << r.error;
    return r.exit_code;
}

} // namespace rsg::cli
