#include "rsg/sweep.hpp"

#include "rsg/error.hpp"
#include "rsg/local_queries.hpp"
#include "rsg/stabilization.hpp"
#include "rsg/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <tuple>

namespace rsg {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

bool inside_sweep(double angle) { return angle > tol::event && angle < kHalfPi - tol::event; }

double coordinate_scale(const Graphic& g)
{
    double scale = 1.0;
    for (const Component& comp : g.components)
        for (const Segment& seg : comp.segments)
            for (const Point& p : seg.curve.control()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    return scale;
}

std::string angle_text(double t)
{
    std::ostringstream out;
    out.precision(12);
    out << t;
    return out.str();
}

auto location_key(const EventCandidate& e)
{
    const EventLocation& l = e.locations.front();
    return std::make_tuple(e.angle, static_cast<int>(e.kind), l.segment, l.s);
}

} // namespace

std::string_view to_string(EventKind k)
{
    switch (k) {
    case EventKind::DefiniteInflection: return "DefiniteInflection";
    case EventKind::IndefiniteInflection: return "IndefiniteInflection";
    case EventKind::CuspTypeOne: return "CuspTypeOne";
    case EventKind::CuspTypeTwo: return "CuspTypeTwo";
    case EventKind::DoubleTangency: return "DoubleTangency";
    }
    return "Unknown";
}

bool changes_genus(EventKind k) { return k == EventKind::IndefiniteInflection || k == EventKind::CuspTypeTwo; }

int morse_index(FoldType fold, bool sheet_above, bool minimum)
{
    if (fold == FoldType::Indefinite) return minimum ? 1 : 2;
    if (sheet_above) return minimum ? 0 : 1;
    return minimum ? 2 : 3;
}

std::vector<CriticalPoint> critical_points(const Graphic& g, double t)
{
    std::vector<CriticalPoint> out;
    const double st = std::sin(t), ct = std::cos(t);
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t si = 0; si < comp.segments.size(); ++si) {
            const Segment& seg = comp.segments[si];
            std::vector<double> params;
            try {
                params = tangencies(seg, t);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::TangentialDegeneracy) throw;
                throw Error(ErrorCode::EventAngle, "degenerate tangency at angle " + angle_text(t));
            }
            for (double s : params) {
                const Point acc = seg.curve.acceleration(s);
                const double curvature = acc.x * st + acc.y * ct;
                if (curvature == 0.0) throw Error(ErrorCode::EventAngle, "horizontal inflection at angle " + angle_text(t));
                const bool above = rotated_height(seg.sheet_normal(s), t) > 0.0;
                const Point p = seg.curve.at(s);
                out.push_back({{ci, si}, s, p, rotated_height(p, t), morse_index(seg.fold, above, curvature > 0.0)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return std::tie(a.height, a.segment, a.s) < std::tie(b.height, b.segment, b.s);
    });
    const double scale = coordinate_scale(g);
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].height - out[i - 1].height <= tol::level * scale)
            throw Error(ErrorCode::EventAngle, "two critical points share a level at angle " + angle_text(t));
    return out;
}

CriticalCensus critical_census(const Graphic& g, double t)
{
    CriticalCensus c;
    for (const CriticalPoint& cp : critical_points(g, t)) ++c.counts[static_cast<std::size_t>(cp.index)];
    return c;
}

std::vector<CriticalCensus> critical_census_batch(const Graphic& g, std::span<const double> angles, Execution execution)
{
    std::vector<CriticalCensus> out(angles.size());
    if (execution == Execution::Serial) {
        for (std::size_t i = 0; i < angles.size(); ++i) out[i] = critical_census(g, angles[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(angles.size());
    const long long n = static_cast<long long>(angles.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = critical_census(g, angles[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

int genus_from_census(const CriticalCensus& c)
{
    const int genus = c[1] - c[0] + 1;
    if (genus < 0)
        throw Error(ErrorCode::NegativeGenus, "census (" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                                  std::to_string(c[2]) + "," + std::to_string(c[3]) +
                                                  ") gives genus " + std::to_string(genus));
    return genus;
}

int genus_at(const Graphic& g, double t) { return genus_from_census(critical_census(g, t)); }

std::vector<EventCandidate> event_candidates(const Graphic& g, Execution execution)
{
    std::vector<EventCandidate> out;
    for (const InflectionSite& site : inflection_sites(g)) {
        const double angle = event_angle(site.direction);
        if (!inside_sweep(angle)) continue;
        const EventKind kind =
            site.fold == FoldType::Definite ? EventKind::DefiniteInflection : EventKind::IndefiniteInflection;
        out.push_back({angle, kind, {{site.segment, site.s, site.vertex, site.point}}});
    }
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t vi = 0; vi < comp.vertices.size(); ++vi) {
            const Vertex& v = comp.vertices[vi];
            if (v.kind != VertexKind::Cusp) continue;
            const double angle = event_angle(comp.segments[v.outgoing].curve.start_tangent());
            if (!inside_sweep(angle)) continue;
            const EventKind kind =
                classify_cusp(g, {ci, vi}) == CuspType::TypeOne ? EventKind::CuspTypeOne : EventKind::CuspTypeTwo;
            out.push_back({angle, kind, {{{ci, v.outgoing}, 0.0, VertexRef{ci, vi}, v.position}}});
        }
    }
    BitangentOptions options;
    options.execution = execution;
    for (const DoubleTangent& line : doubly_tangent_lines(g, options))
        out.push_back({line.angle,
                       EventKind::DoubleTangency,
                       {{line.a, line.s, std::nullopt, line.first}, {line.b, line.u, std::nullopt, line.second}}});
    std::sort(out.begin(), out.end(),
              [](const EventCandidate& a, const EventCandidate& b) { return location_key(a) < location_key(b); });
    return out;
}

Event classify_event(const Graphic& g, const EventCandidate& candidate, double delta)
{
    const int before = genus_at(g, candidate.angle - delta);
    const int after = genus_at(g, candidate.angle + delta);
    Event e{candidate.angle, candidate.kind, candidate.locations, after - before};
    const bool ok = changes_genus(e.kind) ? std::abs(e.genus_delta) == 1 : e.genus_delta == 0;
    if (!ok)
        throw Error(ErrorCode::ClassificationMismatch, std::string(to_string(e.kind)) + " at angle " +
                                                           angle_text(e.angle) + " changes the genus by " +
                                                           std::to_string(e.genus_delta));
    return e;
}

Schedule event_schedule(const Graphic& g, Execution execution)
{
    const std::vector<EventCandidate> candidates = event_candidates(g, execution);
    Schedule schedule;
    double min_gap = kHalfPi;
    double prev = 0.0;
    for (const EventCandidate& c : candidates) {
        const double gap = c.angle - prev;
        if (&c != &candidates.front() && gap <= tol::event)
            schedule.warnings.push_back("GenericityWarning: events tie at angle " + angle_text(c.angle));
        if (gap > tol::event) min_gap = std::min(min_gap, gap);
        prev = c.angle;
    }
    min_gap = std::min(min_gap, kHalfPi - prev);
    schedule.delta = std::max(0.5 * min_gap, tol::delta_floor);
    for (const EventCandidate& c : candidates) schedule.events.push_back(classify_event(g, c, schedule.delta));
    return schedule;
}

int Trajectory::peak() const { return *std::max_element(genera.begin(), genera.end()); }

Trajectory genus_trajectory(const Graphic& g, const Schedule& schedule)
{
    Trajectory traj;
    for (const Event& e : schedule.events) traj.breakpoints.push_back(e.angle);
    std::vector<double> edges{0.0};
    edges.insert(edges.end(), traj.breakpoints.begin(), traj.breakpoints.end());
    edges.push_back(kHalfPi);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) traj.genera.push_back(genus_at(g, 0.5 * (edges[i] + edges[i + 1])));
    for (std::size_t i = 0; i < schedule.events.size(); ++i) {
        const int step = traj.genera[i + 1] - traj.genera[i];
        if (step != schedule.events[i].genus_delta)
            throw Error(ErrorCode::ClassificationMismatch, "trajectory step " + std::to_string(step) + " at angle " +
                                                               angle_text(schedule.events[i].angle) +
                                                               " disagrees with the event delta");
    }
    return traj;
}

Trajectory genus_trajectory(const Graphic& g) { return genus_trajectory(g, event_schedule(g)); }

int count_c(const Graphic& g)
{
    int c = 0;
    for (const InflectionSite& site : inflection_sites(g))
        if (site.fold == FoldType::Indefinite && inside_sweep(event_angle(site.direction))) ++c;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t vi = 0; vi < comp.vertices.size(); ++vi) {
            const Vertex& v = comp.vertices[vi];
            if (v.kind != VertexKind::Cusp) continue;
            if (inside_sweep(event_angle(comp.segments[v.outgoing].curve.start_tangent())) &&
                classify_cusp(g, {ci, vi}) == CuspType::TypeTwo)
                ++c;
        }
    }
    return c;
}

BoundCertificate stable_genus_bound(const Trajectory& trajectory, int c)
{
    BoundCertificate cert;
    cert.p = trajectory.p();
    cert.q = trajectory.q();
    cert.c = c;
    cert.peak = trajectory.peak();
    cert.bound = common_stab_genus(cert.p, cert.q, c);
    if (cert.peak > cert.bound)
        throw Error(ErrorCode::PeakExceedsBound, "trajectory peak " + std::to_string(cert.peak) + " exceeds (p+q+c)/2 = " +
                                                     std::to_string(cert.bound));
    return cert;
}

BoundCertificate stable_genus_bound(const Graphic& g) { return stable_genus_bound(genus_trajectory(g), count_c(g)); }

SweepAnalysis analyze(const Graphic& g, Execution execution)
{
    SweepAnalysis a;
    a.schedule = event_schedule(g, execution);
    a.trajectory = genus_trajectory(g, a.schedule);
    a.bound = stable_genus_bound(a.trajectory, count_c(g));
    return a;
}

} // namespace rsg
