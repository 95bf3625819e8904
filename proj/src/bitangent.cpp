#include "rsg/bitangent.hpp"

#include "rsg/error.hpp"
#include "rsg/local_queries.hpp"
#include "rsg/tolerances.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace rsg {

namespace {

struct Pair {
    SegmentRef a;
    SegmentRef b;
    const CubicBezier* ca;
    const CubicBezier* cb;
};

struct Solution {
    std::size_t pair;
    double s;
    double u;
    bool singular;
};

// Contact points closer than this are the degenerate limit at an inflection,
// where nearby tangents are parallel to their chord.
constexpr double kMinSeparation = 1e-4;

bool solve(const CubicBezier& a, const CubicBezier& b, double& s, double& u, double scale, bool& singular)
{
    for (int it = 0; it < 32; ++it) {
        const Point pa = a.at(s), pb = b.at(u);
        const Point da = a.velocity(s), db = b.velocity(u);
        const Point dda = a.acceleration(s), ddb = b.acceleration(u);
        const Point w = pb - pa;
        const double f1 = cross(da, db);
        const double f2 = cross(da, w);
        const double j11 = cross(dda, db), j12 = cross(da, ddb);
        const double j21 = cross(dda, w), j22 = cross(da, db);
        const double det = j11 * j22 - j12 * j21;
        const double row1 = std::abs(j11) + std::abs(j12);
        const double row2 = std::abs(j21) + std::abs(j22);
        const double va = norm(da), vb = norm(db), vw = norm(w);
        if (vw <= kMinSeparation * scale) return false;
        if (std::abs(f1) <= 1e-13 * va * vb && std::abs(f2) <= 1e-13 * va * vw) {
            singular = row1 * row2 == 0.0 || std::abs(det) <= 1e-9 * row1 * row2;
            return true;
        }
        if (det == 0.0) return false;
        const double ds = (f1 * j22 - f2 * j12) / det;
        const double du = (j11 * f2 - j21 * f1) / det;
        s -= ds;
        u -= du;
        if (s < -0.25 || s > 1.25 || u < -0.25 || u > 1.25) return false;
    }
    return false;
}

bool attributable(double v) { return v >= -tol::attribution && v < 1.0 - tol::attribution; }

void search_seed_row(const Pair& pr, std::size_t pair_index, int row, int grid, double scale, std::vector<Solution>& out)
{
    const bool same = pr.a == pr.b;
    for (int col = 0; col < grid; ++col) {
        double s = (row + 0.5) / grid;
        double u = (col + 0.5) / grid;
        if (same && u <= s) continue;
        bool singular = false;
        if (!solve(*pr.ca, *pr.cb, s, u, scale, singular)) continue;
        if (!attributable(s) || !attributable(u)) continue;
        s = std::max(s, 0.0);
        u = std::max(u, 0.0);
        if (norm(pr.cb->at(u) - pr.ca->at(s)) <= kMinSeparation * scale) continue;
        if (norm(pr.ca->velocity(s)) <= 1e-9 * scale || norm(pr.cb->velocity(u)) <= 1e-9 * scale) continue;
        if (same && s > u) std::swap(s, u);
        out.push_back({pair_index, s, u, singular});
    }
}

} // namespace

std::vector<DoubleTangent> doubly_tangent_lines(const Graphic& g, const BitangentOptions& options)
{
    std::vector<Pair> pairs;
    std::vector<std::pair<SegmentRef, const CubicBezier*>> segs;
    double scale = 1.0;
    for (std::size_t ci = 0; ci < g.components.size(); ++ci)
        for (std::size_t si = 0; si < g.components[ci].segments.size(); ++si) {
            const CubicBezier& c = g.components[ci].segments[si].curve;
            segs.push_back({{ci, si}, &c});
            for (const Point& p : c.control()) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
        }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i; j < segs.size(); ++j)
            pairs.push_back({segs[i].first, segs[j].first, segs[i].second, segs[j].second});

    const int grid = options.grid;
    const long long work = static_cast<long long>(pairs.size()) * grid;
    std::vector<Solution> found;
    if (options.execution == Execution::Serial) {
        for (long long k = 0; k < work; ++k)
            search_seed_row(pairs[static_cast<std::size_t>(k / grid)], static_cast<std::size_t>(k / grid),
                            static_cast<int>(k % grid), grid, scale, found);
    } else {
        std::vector<std::vector<Solution>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 8)
        for (long long k = 0; k < work; ++k)
            search_seed_row(pairs[static_cast<std::size_t>(k / grid)], static_cast<std::size_t>(k / grid),
                            static_cast<int>(k % grid), grid, scale,
                            per_thread[static_cast<std::size_t>(omp_get_thread_num())]);
        for (auto& v : per_thread) found.insert(found.end(), v.begin(), v.end());
    }

    std::sort(found.begin(), found.end(), [](const Solution& x, const Solution& y) {
        return std::tie(x.pair, x.s, x.u) < std::tie(y.pair, y.s, y.u);
    });

    std::vector<DoubleTangent> lines;
    for (const Solution& sol : found) {
        const Pair& pr = pairs[sol.pair];
        const Point p0 = pr.ca->at(sol.s), p1 = pr.cb->at(sol.u);
        bool duplicate = false;
        for (const DoubleTangent& l : lines) {
            const bool same_points = (norm(l.first - p0) <= 1e-7 * scale && norm(l.second - p1) <= 1e-7 * scale) ||
                                     (norm(l.first - p1) <= 1e-7 * scale && norm(l.second - p0) <= 1e-7 * scale);
            const double da = std::abs(l.angle - event_angle(pr.ca->velocity(sol.s)));
            if (same_points && std::min(da, std::numbers::pi - da) <= tol::event) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        if (sol.singular)
            throw Error(ErrorCode::GenericityFailure, "a continuum of doubly tangent lines touches segments " +
                                                          std::to_string(pr.a.segment) + " and " +
                                                          std::to_string(pr.b.segment));
        const Point dir = normalized(pr.ca->velocity(sol.s));
        lines.push_back({event_angle(dir), dir, pr.a, sol.s, pr.b, sol.u, p0, p1});
    }

    if (options.negative_slope_only)
        std::erase_if(lines, [](const DoubleTangent& l) {
            return !(l.angle > tol::event && l.angle < 0.5 * std::numbers::pi - tol::event);
        });
    std::sort(lines.begin(), lines.end(), [](const DoubleTangent& x, const DoubleTangent& y) {
        return std::tie(x.angle, x.a, x.s, x.b, x.u) < std::tie(y.angle, y.a, y.s, y.b, y.u);
    });
    return lines;
}

} // namespace rsg
