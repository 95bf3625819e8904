#ifndef RSG_BITANGENT_HPP
#define RSG_BITANGENT_HPP

#include "rsg/execution.hpp"
#include "rsg/graphic.hpp"

#include <vector>

namespace rsg {

/// A straight line tangent to the graphic at two distinct points.
struct DoubleTangent {
    /// Rotation angle in [0, pi) at which the line becomes horizontal.
    double angle = 0.0;
    Point direction;
    SegmentRef a;
    double s = 0.0;
    SegmentRef b;
    double u = 0.0;
    Point first;
    Point second;
};

struct BitangentOptions {
    /// Seeds per parameter axis for each segment pair.
    int grid = 64;
    /// Keep only lines of negative slope (angles strictly inside (0, pi/2)).
    bool negative_slope_only = true;
    Execution execution = Execution::Parallel;
};

/// Doubly tangent lines found by 2D Newton on
///   cross(A'(s), B'(u)) = 0,  cross(A'(s), B(u) - A(s)) = 0
/// seeded on a grid x grid lattice per segment pair (a segment is paired
/// with itself too). Touch points use the half-open [0, 1) attribution, and
/// lines are deduplicated at tol::event. Sorted by (angle, a, s, b, u).
///
/// Throws Error(GenericityFailure) when a converged solution has a singular
/// Jacobian, i.e. the bitangents form a continuum.
std::vector<DoubleTangent> doubly_tangent_lines(const Graphic& g, const BitangentOptions& options = {});

} // namespace rsg

#endif
