#include "rsg/reeb_slice.hpp"

#include "rsg/crossings.hpp"
#include "rsg/error.hpp"
#include "rsg/local_queries.hpp"
#include "rsg/sweep.hpp"
#include "rsg/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace rsg {

namespace {

struct Height {
    double value;
    BreakpointKind kind;
};

std::vector<Height> breakpoint_heights(const Graphic& g, double t)
{
    std::vector<Height> out;
    for (const CriticalPoint& cp : critical_points(g, t)) out.push_back({cp.height, BreakpointKind::Tangency});
    for (const Component& comp : g.components)
        for (const Vertex& v : comp.vertices)
            if (v.kind == VertexKind::Cusp) out.push_back({rotated_height(v.position, t), BreakpointKind::Cusp});
    std::sort(out.begin(), out.end(), [](const Height& a, const Height& b) { return a.value < b.value; });
    return out;
}

double graphic_scale(const Graphic& g)
{
    double scale = 1.0;
    for (const Component& comp : g.components)
        for (const Segment& seg : comp.segments)
            for (const Point& p : seg.curve.control()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    return scale;
}

int crossings_on_segment(const Segment& seg, double t, double level)
{
    const Polynomial h = height_polynomial(seg.curve, t) - Polynomial{level};
    if (h.is_zero()) throw Error(ErrorCode::NonGenericLevel, "level line contains a segment");
    const double eta = tol::attribution;
    int count = 0;
    for (const Root& r : real_roots(h, {-eta, 1.0 + eta})) {
        if (r.value >= 1.0 - eta) continue;
        if (r.multiplicity > 1) throw Error(ErrorCode::NonGenericLevel, "level line is tangent to a segment");
        ++count;
    }
    return count;
}

} // namespace

SliceCensus slice_census(const Graphic& g, double t, double level)
{
    const double guard = tol::geom * graphic_scale(g);
    for (const Height& h : breakpoint_heights(g, t))
        if (std::abs(h.value - level) <= guard)
            throw Error(ErrorCode::NonGenericLevel, std::string(h.kind == BreakpointKind::Cusp ? "cusp" : "tangency") +
                                                        " at height " + std::to_string(h.value));
    for (const CrossingPoint& x : find_crossings(g))
        if (std::abs(rotated_height(x.point, t) - level) <= guard)
            throw Error(ErrorCode::NonGenericLevel, "crossing at height " + std::to_string(rotated_height(x.point, t)));

    SliceCensus c;
    c.level = level;
    c.angle = t;
    for (const Component& comp : g.components)
        for (const Segment& seg : comp.segments) {
            const int k = crossings_on_segment(seg, t, level);
            (seg.fold == FoldType::Definite ? c.n_def : c.m_indef) += k;
        }
    return c;
}

SliceEuler slice_euler(const SliceCensus& c)
{
    const int n = c.n_def, m = c.m_indef;
    if ((n + 3 * m) % 2 != 0)
        throw Error(ErrorCode::ParityError,
                    "n + 3m is odd for n = " + std::to_string(n) + ", m = " + std::to_string(m));
    SliceEuler e;
    e.vertices = n + m;
    e.edges = (n + 3 * m) / 2;
    e.chi_reeb = (n - m) / 2;
    e.chi_surface = n - m;
    return e;
}

SliceProfile slice_profile(const Graphic& g, double t)
{
    const std::vector<Height> heights = breakpoint_heights(g, t);
    const double scale = graphic_scale(g);
    for (std::size_t i = 1; i < heights.size(); ++i)
        if (heights[i].value - heights[i - 1].value <= tol::level * scale)
            throw Error(ErrorCode::EventAngle, "two breakpoints share a level");

    std::vector<double> crossing_heights;
    for (const CrossingPoint& x : find_crossings(g)) crossing_heights.push_back(rotated_height(x.point, t));

    SliceProfile profile;
    profile.angle = t;
    for (const Height& h : heights) {
        profile.breakpoints.push_back(h.value);
        profile.kinds.push_back(h.kind);
    }
    const double pad = 1.0 + scale;
    std::vector<double> edges{heights.empty() ? -pad : heights.front().value - pad};
    for (const Height& h : heights) edges.push_back(h.value);
    edges.push_back(edges.back() + pad);

    const double guard = tol::geom * scale;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double lo = edges[i], hi = edges[i + 1];
        double level = 0.5 * (lo + hi);
        for (double f : {0.5, 0.3, 0.7, 0.2, 0.8, 0.1, 0.9}) {
            level = lo + f * (hi - lo);
            const bool clear = std::none_of(crossing_heights.begin(), crossing_heights.end(),
                                            [&](double y) { return std::abs(y - level) <= 2.0 * guard; });
            if (clear) break;
        }
        profile.censuses.push_back(slice_census(g, t, level));
    }

    for (std::size_t i = 0; i < profile.breakpoints.size(); ++i) {
        const int dn = profile.censuses[i + 1].n_def - profile.censuses[i].n_def;
        const int dm = profile.censuses[i + 1].m_indef - profile.censuses[i].m_indef;
        const bool ok = profile.kinds[i] == BreakpointKind::Tangency
                            ? (std::abs(dn) == 2 && dm == 0) || (dn == 0 && std::abs(dm) == 2)
                            : std::abs(dn) == 1 && std::abs(dm) == 1;
        if (!ok)
            throw Error(ErrorCode::ClassificationMismatch, "slice census jumps by (" + std::to_string(dn) + ", " +
                                                               std::to_string(dm) + ") at height " +
                                                               std::to_string(profile.breakpoints[i]));
    }
    return profile;
}

} // namespace rsg
