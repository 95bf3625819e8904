#include "rsg/local_queries.hpp"

#include "rsg/error.hpp"
#include "rsg/tolerances.hpp"

#include <cmath>
#include <numbers>

namespace rsg {

namespace {

// Curvature roots closer than this to a segment end are handled by the
// vertex sign test instead.
constexpr double kVertexBand = 1e-7;

Polynomial checked_curvature(const CubicBezier& c)
{
    const Polynomial k = c.curvature_numerator();
    const double scale = c.dx().magnitude(1.0) * c.ddy().magnitude(1.0) + c.ddx().magnitude(1.0) * c.dy().magnitude(1.0);
    if (scale == 0.0 || k.magnitude(1.0) <= 1e-12 * scale)
        throw Error(ErrorCode::DegenerateFlat, "signed curvature vanishes identically on the segment");
    return k;
}

} // namespace

std::vector<Inflection> inflections(const Segment& seg)
{
    const CubicBezier& c = seg.curve;
    const Polynomial k = checked_curvature(c);
    std::vector<Inflection> out;
    for (const Root& r : real_roots(k, {0.0, 1.0}, tol::root)) {
        if (r.value <= 0.0 || r.value >= 1.0) continue;
        const Point v = c.velocity(r.value);
        Inflection inf{r.value, c.at(r.value), std::nullopt};
        if (std::abs(v.x) > 1e-12 * norm(v)) inf.slope = v.y / v.x;
        out.push_back(inf);
    }
    return out;
}

Polynomial tangency_polynomial(const CubicBezier& c, double t)
{
    return std::sin(t) * c.dx() + std::cos(t) * c.dy();
}

Polynomial height_polynomial(const CubicBezier& c, double t) { return std::sin(t) * c.x() + std::cos(t) * c.y(); }

std::vector<double> tangencies(const Segment& seg, double t)
{
    const CubicBezier& c = seg.curve;
    const Polynomial p = tangency_polynomial(c, t);
    const double scale = c.dx().magnitude(1.0) + c.dy().magnitude(1.0);
    if (p.magnitude(1.0) <= 1e-13 * scale)
        throw Error(ErrorCode::DegenerateFlat, "segment is a straight line parallel to the sweep direction");
    std::vector<double> out;
    for (const Root& r : real_roots(p, {-tol::attribution, 1.0 + tol::attribution}, tol::root)) {
        if (r.value >= 1.0 - tol::attribution) continue;
        const double s = std::max(r.value, 0.0);
        if (norm(c.velocity(s)) <= 1e-9 * scale) continue;
        if (r.multiplicity >= 2)
            throw Error(ErrorCode::TangentialDegeneracy, "tangency of multiplicity " + std::to_string(r.multiplicity) +
                                                             " at s = " + std::to_string(s));
        out.push_back(s);
    }
    return out;
}

double event_angle(Point direction)
{
    double gamma = std::atan2(direction.y, direction.x);
    if (gamma < 0.0) gamma += std::numbers::pi;
    if (gamma >= std::numbers::pi) gamma -= std::numbers::pi;
    return gamma == 0.0 ? 0.0 : std::numbers::pi - gamma;
}

CuspGeometry cusp_geometry(const Segment& incoming, const Segment& outgoing)
{
    CuspGeometry geo;
    geo.position = outgoing.curve.control()[0];
    geo.direction = normalized(outgoing.curve.start_tangent() - incoming.curve.end_tangent());
    const double len = std::min(incoming.curve.arc_length(0.0, 1.0), outgoing.curve.arc_length(0.0, 1.0));
    geo.epsilon = tol::cusp_offset * len;
    const Point n = perp(geo.direction);
    const Point qin = incoming.curve.at(incoming.curve.param_at_arc_length(geo.epsilon, true));
    const Point qout = outgoing.curve.at(outgoing.curve.param_at_arc_length(geo.epsilon, false));
    geo.incoming_offset = dot(n, qin - geo.position);
    geo.outgoing_offset = dot(n, qout - geo.position);
    return geo;
}

CuspType classify_cusp(const Segment& incoming, const Segment& outgoing)
{
    const CuspGeometry geo = cusp_geometry(incoming, outgoing);
    const double threshold = tol::side * geo.epsilon;
    if (std::abs(geo.incoming_offset) < threshold || std::abs(geo.outgoing_offset) < threshold)
        throw Error(ErrorCode::UndecidableAtTolerance, "cusp side test below tolerance (higher-order cusp)");
    return (geo.incoming_offset > 0.0) != (geo.outgoing_offset > 0.0) ? CuspType::TypeOne : CuspType::TypeTwo;
}

CuspType classify_cusp(const Graphic& g, VertexRef v)
{
    const Component& comp = g.components.at(v.component);
    const Vertex& vx = comp.vertices.at(v.vertex);
    if (vx.kind != VertexKind::Cusp) throw Error(ErrorCode::InvalidGraphic, "vertex is not a cusp");
    return classify_cusp(comp.segments[vx.incoming], comp.segments[vx.outgoing]);
}

std::vector<InflectionSite> inflection_sites(const Graphic& g)
{
    std::vector<InflectionSite> out;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& comp = g.components[ci];
        for (std::size_t si = 0; si < comp.segments.size(); ++si) {
            const Segment& seg = comp.segments[si];
            for (const Inflection& inf : inflections(seg)) {
                if (inf.s <= kVertexBand || inf.s >= 1.0 - kVertexBand) continue;
                out.push_back({{ci, si}, inf.s, std::nullopt, inf.point, seg.curve.velocity(inf.s), seg.fold});
            }
            const Vertex& v = comp.vertices[si];
            if (v.kind != VertexKind::Smooth) continue;
            const Segment& next = comp.segments[v.outgoing];
            const Polynomial ka = seg.curve.curvature_numerator();
            const Polynomial kb = next.curve.curvature_numerator();
            const double before = ka(1.0 - kVertexBand);
            const double after = kb(kVertexBand);
            if ((before > 0.0 && after < 0.0) || (before < 0.0 && after > 0.0))
                out.push_back({{ci, v.outgoing}, 0.0, VertexRef{ci, si}, v.position, next.curve.start_tangent(), next.fold});
        }
    }
    return out;
}

} // namespace rsg
