#ifndef RSG_TOLERANCES_HPP
#define RSG_TOLERANCES_HPP

namespace rsg::tol {

/// Coincidence of points.
inline constexpr double geom = 1e-9;
/// Tangent alignment at vertices, on the dot product of unit tangents.
inline constexpr double angle = 1e-9;
/// Cusp side test threshold on |offset| / epsilon.
inline constexpr double side = 1e-7;
/// Cusp side test offset, as a fraction of the shorter incident arc length.
inline constexpr double cusp_offset = 1e-4;
/// Event deduplication and tie detection, radians.
inline constexpr double event = 1e-8;
/// Root refinement in segment parameter.
inline constexpr double root = 1e-12;
/// Parameter slack for half-open [0, 1) root attribution.
inline constexpr double attribution = 1e-9;
/// Minimum separation of rotated heights for distinct critical levels.
inline constexpr double level = 1e-12;
/// Floor for the before/after sampling offset around an event.
inline constexpr double delta_floor = 1e-6;

} // namespace rsg::tol

#endif
