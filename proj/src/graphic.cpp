#include "rsg/graphic.hpp"

#include "rsg/error.hpp"
#include "rsg/tolerances.hpp"

#include <string>

namespace rsg {

std::string_view to_string(FoldType f) { return f == FoldType::Definite ? "definite" : "indefinite"; }
std::string_view to_string(SheetSide s) { return s == SheetSide::Left ? "left" : "right"; }
std::string_view to_string(VertexKind k) { return k == VertexKind::Smooth ? "smooth" : "cusp"; }
std::string_view to_string(CuspType c) { return c == CuspType::TypeOne ? "type-one" : "type-two"; }
std::string_view to_string(CrossingTag c) { return c == CrossingTag::Entangled ? "entangled" : "unentangled"; }

Point Segment::sheet_normal(double s) const
{
    const Point n = normalized(perp(curve.velocity(s)));
    return sheet == SheetSide::Left ? n : -n;
}

std::size_t Graphic::segment_count() const
{
    std::size_t n = 0;
    for (const auto& c : components) n += c.segments.size();
    return n;
}

Component make_component(std::vector<Segment> segments, const std::vector<VertexKind>& kinds)
{
    const std::size_t n = segments.size();
    if (n == 0) throw Error(ErrorCode::SchemaError, "component without segments");
    if (kinds.size() != n)
        throw Error(ErrorCode::SchemaError, "component has " + std::to_string(n) + " segments but " +
                                                std::to_string(kinds.size()) + " vertices");
    Component c;
    c.vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = (i + 1) % n;
        const Point end = segments[i].curve.control()[3];
        const Point start = segments[next].curve.control()[0];
        if (norm(end - start) > tol::geom)
            throw Error(ErrorCode::ChainError, "segment " + std::to_string(i) + " ends " +
                                                   std::to_string(norm(end - start)) +
                                                   " away from the start of segment " + std::to_string(next));
        c.vertices.push_back({kinds[i], end, i, next});
    }
    c.segments = std::move(segments);
    return c;
}

const Segment& segment_at(const Graphic& g, SegmentRef ref) { return g.components.at(ref.component).segments.at(ref.segment); }

const Vertex& vertex_at(const Graphic& g, VertexRef ref) { return g.components.at(ref.component).vertices.at(ref.vertex); }

Graphic transformed(const Graphic& g, double angle, double scale, Point shift)
{
    Graphic out = g;
    for (auto& comp : out.components) {
        for (auto& seg : comp.segments) seg.curve = seg.curve.transformed(angle, scale, shift);
        for (auto& v : comp.vertices) v.position = scale * rotated(v.position, angle) + shift;
    }
    return out;
}

Graphic mirrored(const Graphic& g)
{
    Graphic out = g;
    for (auto& comp : out.components) {
        for (auto& seg : comp.segments) {
            auto c = seg.curve.control();
            for (auto& p : c) p.y = -p.y;
            seg.curve = CubicBezier(c);
            seg.sheet = seg.sheet == SheetSide::Left ? SheetSide::Right : SheetSide::Left;
        }
        for (auto& v : comp.vertices) v.position.y = -v.position.y;
    }
    return out;
}

bool same_content(const Graphic& a, const Graphic& b)
{
    if (a.components.size() != b.components.size() || a.crossings != b.crossings) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        const auto& ca = a.components[i];
        const auto& cb = b.components[i];
        if (ca.segments.size() != cb.segments.size()) return false;
        for (std::size_t j = 0; j < ca.segments.size(); ++j) {
            const auto& sa = ca.segments[j];
            const auto& sb = cb.segments[j];
            if (sa.curve.control() != sb.curve.control() || sa.fold != sb.fold || sa.sheet != sb.sheet) return false;
            if (ca.vertices[j].kind != cb.vertices[j].kind) return false;
        }
    }
    return true;
}

} // namespace rsg
