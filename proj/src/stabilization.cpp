#include "rsg/stabilization.hpp"

#include "rsg/error.hpp"
#include "rsg/sweep.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace rsg {

int MoveSequence::final_genus() const { return std::accumulate(moves.begin(), moves.end(), base_genus); }

void MoveSequence::check() const
{
    if (base_genus < 0) throw Error(ErrorCode::InvalidSequence, "negative base genus " + std::to_string(base_genus));
    int genus = base_genus;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (moves[i] != 1 && moves[i] != -1)
            throw Error(ErrorCode::InvalidSequence, "move " + std::to_string(i) + " is " + std::to_string(moves[i]));
        genus += moves[i];
        if (genus < 0)
            throw Error(ErrorCode::InvalidSequence, "destabilization at genus 0 (move " + std::to_string(i) + ")");
    }
}

int ReducedSequence::final_genus() const { return std::accumulate(moves.begin(), moves.end(), base_genus); }

ReducedSequence reduce(const MoveSequence& s)
{
    s.check();
    std::vector<int> moves = s.moves;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> next;
        next.reserve(moves.size());
        for (std::size_t i = 0; i < moves.size(); ++i) {
            if (i + 1 < moves.size() && moves[i] == -1 && moves[i + 1] == 1) {
                ++i;
                changed = true;
                continue;
            }
            next.push_back(moves[i]);
        }
        moves = std::move(next);
    }
    ReducedSequence r;
    r.base_genus = s.base_genus;
    r.peak = s.base_genus;
    for (int m : moves)
        if (m == 1) ++r.peak;
    r.moves = std::move(moves);
    return r;
}

int common_stab_genus(int p, int q, int c)
{
    if (p < 0 || q < 0 || c < 0)
        throw Error(ErrorCode::InvalidSequence, "negative genus or count in (" + std::to_string(p) + ", " +
                                                    std::to_string(q) + ", " + std::to_string(c) + ")");
    if ((p + q + c) % 2 != 0)
        throw Error(ErrorCode::ParityViolation,
                    "c = " + std::to_string(c) + " and p + q = " + std::to_string(p + q) + " differ in parity");
    if (c < std::abs(p - q))
        throw Error(ErrorCode::GapViolation,
                    "c = " + std::to_string(c) + " is below |p - q| = " + std::to_string(std::abs(p - q)));
    return (p + q + c) / 2;
}

MoveSequence from_trajectory(const Trajectory& traj)
{
    MoveSequence s;
    s.base_genus = traj.q();
    for (std::size_t i = 1; i < traj.genera.size(); ++i) {
        const int step = traj.genera[i] - traj.genera[i - 1];
        if (step == 0) continue;
        if (std::abs(step) != 1)
            throw Error(ErrorCode::InvalidSequence, "trajectory step of " + std::to_string(step));
        s.moves.push_back(step);
    }
    s.check();
    return s;
}

} // namespace rsg
