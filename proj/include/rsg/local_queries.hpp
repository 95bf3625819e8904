#ifndef RSG_LOCAL_QUERIES_HPP
#define RSG_LOCAL_QUERIES_HPP

#include "rsg/graphic.hpp"

#include <optional>
#include <vector>

namespace rsg {

struct Inflection {
    double s = 0.0;
    Point point;
    /// Unoriented tangent slope y'/x'; empty when the tangent is vertical.
    std::optional<double> slope;
};

/// Interior roots of the signed-curvature numerator on (0, 1).
/// Throws Error(DegenerateFlat) when the numerator vanishes identically.
std::vector<Inflection> inflections(const Segment& seg);

/// d/ds of the height after rotating by t: x'(s) sin t + y'(s) cos t.
Polynomial tangency_polynomial(const CubicBezier& c, double t);
/// Height after rotating by t: x(s) sin t + y(s) cos t.
Polynomial height_polynomial(const CubicBezier& c, double t);

/// Parameters in the attribution interval [0, 1) where the tangent becomes
/// horizontal after rotating counterclockwise by t. Points where the velocity
/// itself vanishes are not tangencies and are skipped.
/// Throws Error(TangentialDegeneracy) on a root of multiplicity >= 2 and
/// Error(DegenerateFlat) if the condition holds identically.
std::vector<double> tangencies(const Segment& seg, double t);

/// Rotation angle in [0, pi) at which a tangent direction becomes horizontal.
/// Directions of negative slope map into (0, pi/2).
double event_angle(Point direction);

/// Local picture at a cusp vertex, measured at arc length epsilon along each
/// incident edge. Offsets are signed distances from the common tangent line,
/// positive on the left of `direction` (the direction both edges leave the
/// cusp in).
struct CuspGeometry {
    Point position;
    Point direction;
    double epsilon = 0.0;
    double incoming_offset = 0.0;
    double outgoing_offset = 0.0;
};
CuspGeometry cusp_geometry(const Segment& incoming, const Segment& outgoing);

/// TypeOne iff the tangent line at the cusp separates the two edge germs.
/// Throws Error(UndecidableAtTolerance) if either side offset falls below
/// tol::side * epsilon.
CuspType classify_cusp(const Segment& incoming, const Segment& outgoing);
CuspType classify_cusp(const Graphic& g, VertexRef v);

/// An inflection of the whole chain: an interior curvature root, or a
/// smooth vertex across which the curvature changes sign.
struct InflectionSite {
    SegmentRef segment;
    double s = 0.0;
    std::optional<VertexRef> vertex;
    Point point;
    Point direction;
    FoldType fold = FoldType::Definite;
};
std::vector<InflectionSite> inflection_sites(const Graphic& g);

} // namespace rsg

#endif
