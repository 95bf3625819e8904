#ifndef RSG_VALIDATE_HPP
#define RSG_VALIDATE_HPP

#include "rsg/graphic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rsg {

enum class ViolationKind {
    FoldAlternation,
    SmoothTangent,
    CuspTangent,
    DegenerateFlat,
    VanishingVelocity,
    NonTransversalCrossing,
    CuspOnCrossing,
    SheetMismatch,
    CuspUndecidable,
    TypeTwoFoldOrder,
    EndpointEvent,
    CrossingLabelMismatch,
};

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string location;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const;
};

/// Checks every local axiom of a stable graphic and reports all violations.
///
/// Vertex rules: folds agree and tangents are parallel across smooth
/// vertices; folds alternate and tangents are anti-parallel at cusps.
/// Segments must bend somewhere and keep a nonzero velocity inside (0, 1).
/// Segment images may only meet in transversal double points away from
/// cusps; when crossing labels are given there is one per double point.
///
/// Sheet sides are constant across smooth vertices. At a cusp both edges
/// carry their sheets into the wedge between them, and at a type two cusp
/// the definite edge is the outer one (farther from the tangent line),
/// otherwise a horizontal passage of the cusp could not change the genus.
///
/// The sweep endpoints t = 0 and t = pi/2 must be Morse: no horizontal or
/// vertical inflection or cusp, no two critical points on a common level.
ValidationReport validate(const Graphic& g);

} // namespace rsg

#endif
