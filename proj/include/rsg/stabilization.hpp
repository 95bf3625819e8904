#ifndef RSG_STABILIZATION_HPP
#define RSG_STABILIZATION_HPP

#include <vector>

namespace rsg {

struct Trajectory;

/// A starting genus followed by single stabilizations (+1) and
/// destabilizations (-1).
struct MoveSequence {
    int base_genus = 0;
    std::vector<int> moves;

    int final_genus() const;
    /// Throws Error(InvalidSequence) if a move is not +-1 or a prefix drops
    /// below genus zero.
    void check() const;
};

/// All stabilizations first, then all destabilizations.
struct ReducedSequence {
    int base_genus = 0;
    std::vector<int> moves;
    int peak = 0;

    int final_genus() const;
};

/// Deletes adjacent (-1, +1) pairs, scanning left to right until none remain.
ReducedSequence reduce(const MoveSequence& s);

/// (p + q + c) / 2. Throws Error(ParityViolation) when c and p + q differ in
/// parity and Error(GapViolation) when c < |p - q|.
int common_stab_genus(int p, int q, int c);

/// Base q and the nonzero trajectory steps in angle order.
MoveSequence from_trajectory(const Trajectory& traj);

} // namespace rsg

#endif
