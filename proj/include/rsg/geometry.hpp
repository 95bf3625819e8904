#ifndef RSG_GEOMETRY_HPP
#define RSG_GEOMETRY_HPP

#include "rsg/polynomial.hpp"

#include <array>
#include <cmath>

namespace rsg {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline Point normalized(Point a)
{
    const double n = norm(a);
    return n > 0.0 ? (1.0 / n) * a : a;
}
/// Counterclockwise quarter turn; the left normal of a direction.
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point rotated(Point p, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Height after rotating the plane counterclockwise by `angle`, i.e. the
/// vertical coordinate of rotated(p, angle).
inline double rotated_height(Point p, double angle) { return p.x * std::sin(angle) + p.y * std::cos(angle); }

/// Planar cubic Bezier curve on s in [0, 1] with cached monomial forms.
class CubicBezier {
public:
    CubicBezier() = default;
    explicit CubicBezier(const std::array<Point, 4>& control);

    const std::array<Point, 4>& control() const { return control_; }

    Point at(double s) const { return {x_(s), y_(s)}; }
    Point velocity(double s) const { return {dx_(s), dy_(s)}; }
    Point acceleration(double s) const { return {ddx_(s), ddy_(s)}; }

    const Polynomial& x() const { return x_; }
    const Polynomial& y() const { return y_; }
    const Polynomial& dx() const { return dx_; }
    const Polynomial& dy() const { return dy_; }
    const Polynomial& ddx() const { return ddx_; }
    const Polynomial& ddy() const { return ddy_; }

    /// Signed-curvature numerator x'y'' - x''y' (degree <= 2 for a cubic).
    Polynomial curvature_numerator() const;

    /// Unit tangent at s = 0 and s = 1 in the direction of traversal, taken
    /// from the first non-degenerate control-polygon difference so that a
    /// vanishing endpoint velocity still yields the limiting direction.
    Point start_tangent() const;
    Point end_tangent() const;

    double arc_length(double s0, double s1) const;
    /// Parameter at arc length `len` measured from s = 0 (from_end = false)
    /// or back from s = 1 (from_end = true).
    double param_at_arc_length(double len, bool from_end) const;

    CubicBezier rotated(double angle) const;
    CubicBezier transformed(double angle, double scale, Point shift) const;
    CubicBezier reversed() const;

    /// Control-polygon bounding box (contains the curve).
    void bounds(Point& lo, Point& hi) const;

private:
    std::array<Point, 4> control_{};
    Polynomial x_, y_, dx_, dy_, ddx_, ddy_;
};

/// Monomial coefficients (ascending) of one coordinate of a cubic Bezier.
std::array<double, 4> bezier_to_monomial(double p0, double p1, double p2, double p3);
/// Bezier control values for a cubic given in monomial form on [0, 1].
std::array<double, 4> monomial_to_bezier(const std::array<double, 4>& c);

} // namespace rsg

#endif
