#include "rsg/crossings.hpp"

#include "rsg/tolerances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

namespace rsg {

namespace {

struct Piece {
    std::array<Point, 4> ctrl;
    double t0;
    double t1;
};

void split(const Piece& p, Piece& left, Piece& right)
{
    const auto& c = p.ctrl;
    const Point a = 0.5 * (c[0] + c[1]), b = 0.5 * (c[1] + c[2]), d = 0.5 * (c[2] + c[3]);
    const Point e = 0.5 * (a + b), f = 0.5 * (b + d);
    const Point m = 0.5 * (e + f);
    const double tm = 0.5 * (p.t0 + p.t1);
    left = {{c[0], a, e, m}, p.t0, tm};
    right = {{m, f, d, c[3]}, tm, p.t1};
}

void box(const Piece& p, Point& lo, Point& hi)
{
    lo = hi = p.ctrl[0];
    for (const Point& q : p.ctrl) {
        lo = {std::min(lo.x, q.x), std::min(lo.y, q.y)};
        hi = {std::max(hi.x, q.x), std::max(hi.y, q.y)};
    }
}

double diag(const Piece& p)
{
    Point lo, hi;
    box(p, lo, hi);
    return norm(hi - lo);
}

bool overlaps(const Piece& a, const Piece& b, double pad)
{
    Point alo, ahi, blo, bhi;
    box(a, alo, ahi);
    box(b, blo, bhi);
    return alo.x <= bhi.x + pad && blo.x <= ahi.x + pad && alo.y <= bhi.y + pad && blo.y <= ahi.y + pad;
}

// All hodograph directions within a cone narrower than 90 degrees: the
// piece is monotone along the cone axis and cannot meet itself.
bool is_simple(const Piece& p)
{
    const std::array<Point, 3> d = {p.ctrl[1] - p.ctrl[0], p.ctrl[2] - p.ctrl[1], p.ctrl[3] - p.ctrl[2]};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (norm(d[i]) > 0.0 && norm(d[j]) > 0.0 && dot(d[i], d[j]) <= 0.0) return false;
    return true;
}

constexpr double kVertexRadius = 1e-4;

struct Hit {
    double s;
    double u;
};

bool newton(const CubicBezier& a, const CubicBezier& b, double& s, double& u, double scale)
{
    for (int it = 0; it < 40; ++it) {
        const Point f = a.at(s) - b.at(u);
        if (norm(f) <= 1e-13 * scale) return true;
        const Point da = a.velocity(s), db = b.velocity(u);
        // Solve [da, -db] [ds, du]^T = -f.
        const double det = cross(da, -db);
        if (std::abs(det) < 1e-300) return false;
        const double ds = cross(-f, -db) / det;
        const double du = cross(da, -f) / det;
        s += ds;
        u += du;
        if (s < -0.5 || s > 1.5 || u < -0.5 || u > 1.5) return false;
    }
    return norm(a.at(s) - b.at(u)) <= 1e-10 * scale;
}

void intersect(const Piece& pa, const Piece& pb, int depth, const CubicBezier& a, const CubicBezier& b, double scale,
               std::vector<Hit>& hits)
{
    if (!overlaps(pa, pb, 1e-9 * scale)) return;
    const double da = diag(pa), db = diag(pb);
    if ((da < 1e-3 * scale && db < 1e-3 * scale) || depth >= 24) {
        double s = 0.5 * (pa.t0 + pa.t1), u = 0.5 * (pb.t0 + pb.t1);
        if (newton(a, b, s, u, scale) && s >= -1e-9 && s <= 1.0 + 1e-9 && u >= -1e-9 && u <= 1.0 + 1e-9)
            hits.push_back({std::clamp(s, 0.0, 1.0), std::clamp(u, 0.0, 1.0)});
        return;
    }
    Piece l, r;
    if (da >= db) {
        split(pa, l, r);
        intersect(l, pb, depth + 1, a, b, scale, hits);
        intersect(r, pb, depth + 1, a, b, scale, hits);
    } else {
        split(pb, l, r);
        intersect(pa, l, depth + 1, a, b, scale, hits);
        intersect(pa, r, depth + 1, a, b, scale, hits);
    }
}

void self_intersect(const Piece& p, int depth, const CubicBezier& c, double scale, std::vector<Hit>& hits)
{
    if (is_simple(p) || depth > 12) return;
    Piece l, r;
    split(p, l, r);
    self_intersect(l, depth + 1, c, scale, hits);
    self_intersect(r, depth + 1, c, scale, hits);
    std::vector<Hit> local;
    intersect(l, r, 0, c, c, scale, local);
    // The split point itself is a trivial solution.
    for (const Hit& h : local)
        if (std::abs(h.s - h.u) > 1e-7) hits.push_back(h);
}

} // namespace

std::vector<CrossingPoint> find_crossings(const Graphic& g)
{
    struct Item {
        SegmentRef ref;
        const CubicBezier* curve;
    };
    std::vector<Item> items;
    double scale = 0.0;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci)
        for (std::size_t si = 0; si < g.components[ci].segments.size(); ++si) {
            const CubicBezier& c = g.components[ci].segments[si].curve;
            items.push_back({{ci, si}, &c});
            for (const Point& p : c.control()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
        }
    scale = std::max(scale, 1.0);

    std::vector<CrossingPoint> out;
    auto record = [&](const Item& ia, const Item& ib, const Hit& h) {
        const Point p = ia.curve->at(h.s);
        // Shared chain vertices of the pair are not crossings. The two germs are
        // tangent there, so Newton stalls short of the vertex and the exclusion
        // radius has to be much wider than the solve tolerance.
        if (ia.ref.component == ib.ref.component) {
            const Component& comp = g.components[ia.ref.component];
            for (const Vertex& v : comp.vertices) {
                const bool touches_a = v.incoming == ia.ref.segment || v.outgoing == ia.ref.segment;
                const bool touches_b = v.incoming == ib.ref.segment || v.outgoing == ib.ref.segment;
                if (touches_a && touches_b && (ia.ref.segment != ib.ref.segment || v.incoming == v.outgoing) &&
                    norm(p - v.position) <= kVertexRadius * scale)
                    return;
            }
        }
        for (const CrossingPoint& cp : out)
            if (cp.a == ia.ref && cp.b == ib.ref && norm(cp.point - p) <= 1e-8 * scale) return;
        const Point ta = normalized(ia.curve->velocity(h.s));
        const Point tb = normalized(ib.curve->velocity(h.u));
        double s = h.s, u = h.u;
        SegmentRef a = ia.ref, b = ib.ref;
        if (a == b && s > u) std::swap(s, u);
        out.push_back({a, s, b, u, p, std::abs(cross(ta, tb))});
    };

    for (std::size_t i = 0; i < items.size(); ++i) {
        const Piece whole_i{items[i].curve->control(), 0.0, 1.0};
        std::vector<Hit> self_hits;
        self_intersect(whole_i, 0, *items[i].curve, scale, self_hits);
        for (const Hit& h : self_hits) record(items[i], items[i], h);
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            std::vector<Hit> hits;
            intersect(whole_i, {items[j].curve->control(), 0.0, 1.0}, 0, *items[i].curve, *items[j].curve, scale, hits);
            for (const Hit& h : hits) record(items[i], items[j], h);
        }
    }
    std::sort(out.begin(), out.end(), [](const CrossingPoint& x, const CrossingPoint& y) {
        return std::tie(x.a, x.s, x.b, x.u) < std::tie(y.a, y.s, y.b, y.u);
    });
    return out;
}

} // namespace rsg
