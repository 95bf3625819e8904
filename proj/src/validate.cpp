#include "rsg/validate.hpp"

#include "rsg/crossings.hpp"
#include "rsg/error.hpp"
#include "rsg/local_queries.hpp"
#include "rsg/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace rsg {

namespace {

std::string seg_loc(std::size_t c, std::size_t s)
{
    return "component " + std::to_string(c) + " segment " + std::to_string(s);
}

std::string vtx_loc(std::size_t c, std::size_t v)
{
    return "component " + std::to_string(c) + " vertex " + std::to_string(v);
}

bool near_endpoint_angle(double t)
{
    const double half = 0.5 * std::numbers::pi;
    return t < tol::event || std::abs(t - half) < tol::event || t > std::numbers::pi - tol::event;
}

void check_segment(const Segment& seg, const std::string& where, std::vector<Violation>& out)
{
    const CubicBezier& c = seg.curve;
    try {
        (void)inflections(seg);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateFlat) throw;
        out.push_back({ViolationKind::DegenerateFlat, where, "signed curvature vanishes identically"});
        return;
    }
    // A vanishing velocity needs x' and y' to share a root inside (0, 1).
    const double scale = c.dx().magnitude(1.0) + c.dy().magnitude(1.0);
    const Polynomial& lead = c.dx().magnitude(1.0) >= c.dy().magnitude(1.0) ? c.dx() : c.dy();
    if (lead.magnitude(1.0) <= 1e-14 * scale) {
        out.push_back({ViolationKind::VanishingVelocity, where, "constant segment"});
        return;
    }
    for (const Root& r : real_roots(lead, {0.0, 1.0}, tol::root)) {
        if (r.value <= 0.0 || r.value >= 1.0) continue;
        if (norm(c.velocity(r.value)) <= 1e-9 * scale) {
            std::ostringstream msg;
            msg << "velocity vanishes at s = " << r.value;
            out.push_back({ViolationKind::VanishingVelocity, where, msg.str()});
            return;
        }
    }
}

void check_vertex(const Component& comp, std::size_t ci, std::size_t vi, std::vector<Violation>& out)
{
    const Vertex& v = comp.vertices[vi];
    const Segment& in = comp.segments[v.incoming];
    const Segment& next = comp.segments[v.outgoing];
    const std::string where = vtx_loc(ci, vi);
    const double d = dot(in.curve.end_tangent(), next.curve.start_tangent());

    if (v.kind == VertexKind::Smooth) {
        if (in.fold != next.fold) out.push_back({ViolationKind::FoldAlternation, where, "fold type changes at a smooth vertex"});
        if (d <= 1.0 - tol::angle) {
            std::ostringstream msg;
            msg << "unit tangents disagree (dot = " << d << ")";
            out.push_back({ViolationKind::SmoothTangent, where, msg.str()});
        }
        if (in.sheet != next.sheet) out.push_back({ViolationKind::SheetMismatch, where, "sheet side flips at a smooth vertex"});
        return;
    }

    bool local_ok = true;
    if (in.fold == next.fold) {
        out.push_back({ViolationKind::FoldAlternation, where, "cusp joins two edges of the same fold type"});
        local_ok = false;
    }
    if (d >= -1.0 + tol::angle) {
        std::ostringstream msg;
        msg << "unit tangents are not anti-parallel (dot = " << d << ")";
        out.push_back({ViolationKind::CuspTangent, where, msg.str()});
        local_ok = false;
    }
    if (!local_ok) return;

    const CuspGeometry geo = cusp_geometry(in, next);
    const double threshold = tol::side * geo.epsilon;
    const double gap = geo.incoming_offset - geo.outgoing_offset;
    if (std::abs(geo.incoming_offset) < threshold || std::abs(geo.outgoing_offset) < threshold ||
        std::abs(gap) < threshold) {
        out.push_back({ViolationKind::CuspUndecidable, where, "cusp side test below tolerance"});
        return;
    }
    // Both sheets face the wedge between the edges. In the frame of the
    // cusp direction the incoming edge's left normal is -n and the outgoing
    // edge's is +n, so the wedge lies on the left of both exactly when the
    // incoming edge sits above the outgoing one.
    const SheetSide wedge = gap > 0.0 ? SheetSide::Left : SheetSide::Right;
    if (in.sheet != wedge || next.sheet != wedge)
        out.push_back({ViolationKind::SheetMismatch, where, "sheet sides must both face the cusp wedge"});

    const bool type_two = (geo.incoming_offset > 0.0) == (geo.outgoing_offset > 0.0);
    if (type_two) {
        const bool incoming_outer = std::abs(geo.incoming_offset) > std::abs(geo.outgoing_offset);
        const FoldType outer = incoming_outer ? in.fold : next.fold;
        if (outer != FoldType::Definite)
            out.push_back({ViolationKind::TypeTwoFoldOrder, where, "definite edge must be the outer edge of a type two cusp"});
    }
}

void check_endpoints(const Graphic& g, std::vector<Violation>& out)
{
    for (const InflectionSite& site : inflection_sites(g)) {
        if (near_endpoint_angle(event_angle(site.direction))) {
            const std::string where = site.vertex ? vtx_loc(site.vertex->component, site.vertex->vertex)
                                                  : seg_loc(site.segment.component, site.segment.segment);
            out.push_back({ViolationKind::EndpointEvent, where, "inflection tangent is horizontal or vertical"});
        }
    }
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t vi = 0; vi < comp.vertices.size(); ++vi) {
            const Vertex& v = comp.vertices[vi];
            if (v.kind != VertexKind::Cusp) continue;
            if (near_endpoint_angle(event_angle(comp.segments[v.outgoing].curve.start_tangent())))
                out.push_back({ViolationKind::EndpointEvent, vtx_loc(ci, vi), "cusp tangent is horizontal or vertical"});
        }
    }
    for (double t : {0.0, 0.5 * std::numbers::pi}) {
        const std::string where = t == 0.0 ? "angle 0" : "angle pi/2";
        std::vector<double> heights;
        double scale = 1.0;
        try {
            for (const Component& comp : g.components)
                for (const Segment& seg : comp.segments) {
                    for (double s : tangencies(seg, t)) heights.push_back(rotated_height(seg.curve.at(s), t));
                    for (const Point& p : seg.curve.control()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
                }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TangentialDegeneracy && e.code() != ErrorCode::DegenerateFlat) throw;
            out.push_back({ViolationKind::EndpointEvent, where, "degenerate critical point"});
            continue;
        }
        std::sort(heights.begin(), heights.end());
        for (std::size_t i = 1; i < heights.size(); ++i)
            if (heights[i] - heights[i - 1] <= tol::level * scale) {
                out.push_back({ViolationKind::EndpointEvent, where, "two critical points share a level"});
                break;
            }
    }
}

} // namespace

std::string_view to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::FoldAlternation: return "FoldAlternation";
    case ViolationKind::SmoothTangent: return "SmoothTangent";
    case ViolationKind::CuspTangent: return "CuspTangent";
    case ViolationKind::DegenerateFlat: return "DegenerateFlat";
    case ViolationKind::VanishingVelocity: return "VanishingVelocity";
    case ViolationKind::NonTransversalCrossing: return "NonTransversalCrossing";
    case ViolationKind::CuspOnCrossing: return "CuspOnCrossing";
    case ViolationKind::SheetMismatch: return "SheetMismatch";
    case ViolationKind::CuspUndecidable: return "CuspUndecidable";
    case ViolationKind::TypeTwoFoldOrder: return "TypeTwoFoldOrder";
    case ViolationKind::EndpointEvent: return "EndpointEvent";
    case ViolationKind::CrossingLabelMismatch: return "CrossingLabelMismatch";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationKind k) const
{
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate(const Graphic& g)
{
    ValidationReport report;
    auto& out = report.violations;

    bool segments_ok = true;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t si = 0; si < comp.segments.size(); ++si) {
            const std::size_t before = out.size();
            check_segment(comp.segments[si], seg_loc(ci, si), out);
            segments_ok = segments_ok && out.size() == before;
        }
    }
    for (std::size_t ci = 0; ci < g.components.size(); ++ci)
        for (std::size_t vi = 0; vi < g.components[ci].vertices.size(); ++vi) check_vertex(g.components[ci], ci, vi, out);

    const std::vector<CrossingPoint> crossings = find_crossings(g);
    for (const CrossingPoint& cp : crossings) {
        const std::string where = seg_loc(cp.a.component, cp.a.segment) + " x " + seg_loc(cp.b.component, cp.b.segment);
        if (cp.sine < 1e-6) out.push_back({ViolationKind::NonTransversalCrossing, where, "tangential intersection"});
        for (const Component& comp : g.components)
            for (const Vertex& v : comp.vertices)
                if (v.kind == VertexKind::Cusp && norm(v.position - cp.point) <= 1e-7)
                    out.push_back({ViolationKind::CuspOnCrossing, where, "cusp lies on a double point"});
    }
    if (g.crossings && g.crossings->size() != crossings.size())
        out.push_back({ViolationKind::CrossingLabelMismatch, "crossings",
                       std::to_string(g.crossings->size()) + " labels for " + std::to_string(crossings.size()) +
                           " double points"});

    if (segments_ok) check_endpoints(g, out);
    return report;
}

} // namespace rsg
