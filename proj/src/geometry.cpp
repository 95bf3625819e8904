#include "rsg/geometry.hpp"

#include <algorithm>

namespace rsg {

namespace {

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                          -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                          0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kWeights = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                            0.2223810344533745, 0.1012285362903763};

Point first_nonzero(Point a, Point b, Point c)
{
    const double scale = std::max({norm(a), norm(b), norm(c)});
    for (Point d : {a, b, c})
        if (norm(d) > 1e-14 * scale) return normalized(d);
    return {};
}

} // namespace

std::array<double, 4> bezier_to_monomial(double p0, double p1, double p2, double p3)
{
    return {p0, 3.0 * (p1 - p0), 3.0 * (p0 - 2.0 * p1 + p2), p3 - p0 + 3.0 * (p1 - p2)};
}

std::array<double, 4> monomial_to_bezier(const std::array<double, 4>& c)
{
    return {c[0], c[0] + c[1] / 3.0, c[0] + 2.0 * c[1] / 3.0 + c[2] / 3.0, c[0] + c[1] + c[2] + c[3]};
}

CubicBezier::CubicBezier(const std::array<Point, 4>& control) : control_(control)
{
    const auto& p = control_;
    const auto mx = bezier_to_monomial(p[0].x, p[1].x, p[2].x, p[3].x);
    const auto my = bezier_to_monomial(p[0].y, p[1].y, p[2].y, p[3].y);
    x_ = Polynomial(std::vector<double>(mx.begin(), mx.end()));
    y_ = Polynomial(std::vector<double>(my.begin(), my.end()));
    dx_ = x_.derivative();
    dy_ = y_.derivative();
    ddx_ = dx_.derivative();
    ddy_ = dy_.derivative();
}

Polynomial CubicBezier::curvature_numerator() const { return dx_ * ddy_ - ddx_ * dy_; }

Point CubicBezier::start_tangent() const
{
    const auto& p = control_;
    return first_nonzero(p[1] - p[0], p[2] - p[0], p[3] - p[0]);
}

Point CubicBezier::end_tangent() const
{
    const auto& p = control_;
    return first_nonzero(p[3] - p[2], p[3] - p[1], p[3] - p[0]);
}

double CubicBezier::arc_length(double s0, double s1) const
{
    // Composite rule over 4 panels keeps the error far below the tolerances used.
    constexpr int kPanels = 4;
    double total = 0.0;
    const double h = (s1 - s0) / kPanels;
    for (int k = 0; k < kPanels; ++k) {
        const double a = s0 + k * h;
        for (std::size_t i = 0; i < kNodes.size(); ++i) {
            const double s = a + 0.5 * h * (kNodes[i] + 1.0);
            total += 0.5 * h * kWeights[i] * norm(velocity(s));
        }
    }
    return std::abs(total);
}

double CubicBezier::param_at_arc_length(double len, bool from_end) const
{
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double l = from_end ? arc_length(1.0 - mid, 1.0) : arc_length(0.0, mid);
        if (l < len)
            lo = mid;
        else
            hi = mid;
    }
    const double u = 0.5 * (lo + hi);
    return from_end ? 1.0 - u : u;
}

CubicBezier CubicBezier::rotated(double angle) const { return transformed(angle, 1.0, {}); }

CubicBezier CubicBezier::transformed(double angle, double scale, Point shift) const
{
    std::array<Point, 4> c{};
    for (std::size_t i = 0; i < 4; ++i) c[i] = scale * rsg::rotated(control_[i], angle) + shift;
    return CubicBezier(c);
}

CubicBezier CubicBezier::reversed() const
{
    return CubicBezier({control_[3], control_[2], control_[1], control_[0]});
}

void CubicBezier::bounds(Point& lo, Point& hi) const
{
    lo = hi = control_[0];
    for (const Point& p : control_) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
}

} // namespace rsg
