#ifndef RSG_TESTS_BUILDERS_HPP
#define RSG_TESTS_BUILDERS_HPP

#include "rsg/graphic.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace rsg::build {

/// Closed C1 chain of cubics through points of a polar curve
/// r(theta) = radius * (1 + sum_k amp_k cos(k theta + phase_k)), k = 2, 3, 4,
/// with Hermite control points.
Component radial_component(Point center, double radius, const std::array<double, 3>& amp,
                           const std::array<double, 3>& phase, int segments, double start, FoldType fold,
                           SheetSide sheet);

/// Unit circle from four quarter arcs with junctions at 45, 135, 225 and 315
/// degrees, traversed counterclockwise.
Component circle(Point center, double radius, FoldType fold, SheetSide sheet);

/// A random graphic that passes validation: one to three star-shaped
/// components side by side, at most one of them a definite oval with its
/// sheet inside, optionally a rigid copy of a cusped component.
Graphic random_graphic(std::mt19937_64& rng);

/// Incoming and outgoing segments of the cusp germ (s^2, s^3): the two
/// branches y = -+x^(3/2) sit on opposite sides of the tangent line.
std::pair<Segment, Segment> semicubical_germ(double h);

/// The germ (s^2, s^4 (1 + s)) as two cubic graphs fitted to
/// y = x^2 (1 -+ sqrt(x)); both branches lie above the tangent line.
std::pair<Segment, Segment> quartic_germ(double h);

/// Rigid motion and uniform scaling of a pair of segments.
std::pair<Segment, Segment> moved(const std::pair<Segment, Segment>& germ, double angle, double scale, Point shift);

} // namespace rsg::build

#endif
