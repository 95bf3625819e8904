#ifndef RSG_REEB_SLICE_HPP
#define RSG_REEB_SLICE_HPP

#include "rsg/graphic.hpp"

#include <vector>

namespace rsg {

/// Transversal crossings of one level line of the rotated graphic.
struct SliceCensus {
    int n_def = 0;
    int m_indef = 0;
    double level = 0.0;
    double angle = 0.0;
};

/// Valence count of the level surface and its Reeb graph. With n + 3m even
/// all four values are integers.
struct SliceEuler {
    int vertices = 0;
    int edges = 0;
    int chi_reeb = 0;
    int chi_surface = 0;
};

/// Crossings of the line {height = level} after rotating by t.
/// Throws Error(NonGenericLevel) if the line passes within tol::geom of a
/// tangency, cusp or crossing, or meets a segment non-transversally.
SliceCensus slice_census(const Graphic& g, double t, double level);

/// V = n + m, E = n/2 + 3m/2, chi_reeb = (n - m)/2, chi_surface = n - m.
/// Throws Error(ParityError) if n + 3m is odd.
SliceEuler slice_euler(const SliceCensus& c);

enum class BreakpointKind { Tangency, Cusp };

struct SliceProfile {
    double angle = 0.0;
    /// Increasing heights where the slice census can change.
    std::vector<double> breakpoints;
    std::vector<BreakpointKind> kinds;
    /// One census per interval, breakpoints.size() + 1 in all.
    std::vector<SliceCensus> censuses;
};

/// Censuses between consecutive tangency and cusp heights. Across a
/// tangency one field changes by 2; across a cusp both change by 1.
/// Throws Error(EventAngle) if t is an event angle and
/// Error(ClassificationMismatch) if a transition breaks that rule.
SliceProfile slice_profile(const Graphic& g, double t);

} // namespace rsg

#endif
