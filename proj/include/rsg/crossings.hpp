#ifndef RSG_CROSSINGS_HPP
#define RSG_CROSSINGS_HPP

#include "rsg/graphic.hpp"

#include <vector>

namespace rsg {

/// A point where two segment images meet, excluding the shared vertices of
/// chain-adjacent segments. `sine` is |sin| of the angle between the tangents.
struct CrossingPoint {
    SegmentRef a;
    double s = 0.0;
    SegmentRef b;
    double u = 0.0;
    Point point;
    double sine = 0.0;
};

/// All intersections of segment images, including self-intersections of a
/// single segment, ordered by (a, s, b, u).
std::vector<CrossingPoint> find_crossings(const Graphic& g);

} // namespace rsg

#endif
