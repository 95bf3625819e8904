#ifndef RSG_GRAPHIC_HPP
#define RSG_GRAPHIC_HPP

#include "rsg/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace rsg {

/// Fold type of an edge: definite (u, x^2 + y^2) or indefinite (u, x^2 - y^2).
enum class FoldType { Definite, Indefinite };

/// Side of the edge, relative to traversal, that carries the extra sheet(s)
/// of the Reeb complex: the single 2-cell for a definite edge, the pair of
/// sheets for an indefinite edge.
enum class SheetSide { Left, Right };

enum class VertexKind { Smooth, Cusp };
enum class CuspType { TypeOne, TypeTwo };
enum class CrossingTag { Entangled, Unentangled };

std::string_view to_string(FoldType f);
std::string_view to_string(SheetSide s);
std::string_view to_string(VertexKind k);
std::string_view to_string(CuspType c);
std::string_view to_string(CrossingTag c);

struct Segment {
    CubicBezier curve;
    FoldType fold = FoldType::Definite;
    SheetSide sheet = SheetSide::Left;

    /// Unit normal pointing to the sheet side at parameter s (zero where the
    /// velocity vanishes).
    Point sheet_normal(double s) const;
};

/// Vertex between the end of segment `incoming` and the start of `outgoing`
/// (indices into the owning component).
struct Vertex {
    VertexKind kind = VertexKind::Smooth;
    Point position;
    std::size_t incoming = 0;
    std::size_t outgoing = 0;
};

/// Closed chain: vertices[i] joins segments[i] to segments[(i + 1) % n].
struct Component {
    std::vector<Segment> segments;
    std::vector<Vertex> vertices;
};

struct Graphic {
    std::vector<Component> components;
    std::optional<std::vector<CrossingTag>> crossings;

    std::size_t segment_count() const;
};

struct SegmentRef {
    std::size_t component = 0;
    std::size_t segment = 0;
    friend auto operator<=>(const SegmentRef&, const SegmentRef&) = default;
};

struct VertexRef {
    std::size_t component = 0;
    std::size_t vertex = 0;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Builds a component from segments and vertex kinds, deriving vertex
/// positions and incidence. Throws Error(ChainError) if consecutive segment
/// ends are more than tol::geom apart.
Component make_component(std::vector<Segment> segments, const std::vector<VertexKind>& kinds);

const Segment& segment_at(const Graphic& g, SegmentRef ref);
const Vertex& vertex_at(const Graphic& g, VertexRef ref);

/// Applies p -> scale * rotate(p, angle) + shift to every control point.
Graphic transformed(const Graphic& g, double angle, double scale = 1.0, Point shift = {});
/// Mirror image across the x axis; traversal is kept, so sheet sides swap.
Graphic mirrored(const Graphic& g);

/// Semantic equality: identical control points, labels and crossing tags.
bool same_content(const Graphic& a, const Graphic& b);

} // namespace rsg

#endif
