#include "support/oracles.hpp"

#include "rsg/error.hpp"
#include "rsg/shipped_examples.hpp"
#include "rsg/stabilization.hpp"
#include "rsg/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace rsg;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("reduce examples")
{
    const ReducedSequence a = reduce({1, {+1, -1}});
    CHECK(a.moves == std::vector<int>{+1, -1});
    CHECK(a.peak == 2);
    const ReducedSequence b = reduce({2, {-1, +1}});
    CHECK(b.moves.empty());
    CHECK(b.peak == 2);
    CHECK(b.final_genus() == 2);
    const ReducedSequence c = reduce({1, {+1, -1, -1, +1, +1}});
    CHECK(c.moves == std::vector<int>{+1});
    CHECK(c.peak == 2);
    CHECK(c.final_genus() == 2);
    CHECK(oracle::all_reductions({+1, -1, -1, +1, +1}) == std::set<std::vector<int>>{{+1}});
}

TEST_CASE("reduced sequences are monotone and keep the endpoints")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        MoveSequence s{static_cast<int>(rng() % 5), {}};
        const int len = static_cast<int>(rng() % 16);
        int genus = s.base_genus;
        for (int i = 0; i < len; ++i) {
            const int m = (genus == 0 || rng() % 2 == 0) ? +1 : -1;
            s.moves.push_back(m);
            genus += m;
        }
        const ReducedSequence r = reduce(s);
        CHECK(r.final_genus() == s.final_genus());
        CHECK(std::is_sorted(r.moves.begin(), r.moves.end(), std::greater<>()));
        CHECK(r.peak == r.base_genus + static_cast<int>(std::count(r.moves.begin(), r.moves.end(), +1)));
        int max_prefix = s.base_genus, g = s.base_genus;
        for (int m : s.moves) max_prefix = std::max(max_prefix, g += m);
        CHECK(r.peak <= max_prefix);
    }
}

TEST_CASE("invalid move sequences")
{
    CHECK(code_of([] { MoveSequence{0, {-1, +1}}.check(); }) == ErrorCode::InvalidSequence);
    CHECK(code_of([] { MoveSequence{1, {+2}}.check(); }) == ErrorCode::InvalidSequence);
    CHECK(code_of([] { reduce({0, {+1, 0}}); }) == ErrorCode::InvalidSequence);
    CHECK_NOTHROW(MoveSequence{1, {-1, +1}}.check());
}

TEST_CASE("common stabilization genus")
{
    CHECK(common_stab_genus(1, 1, 2) == 2);
    CHECK(common_stab_genus(0, 0, 0) == 0);
    CHECK(common_stab_genus(3, 1, 2) == 3);
    CHECK(code_of([] { common_stab_genus(0, 1, 2); }) == ErrorCode::ParityViolation);
    CHECK(code_of([] { common_stab_genus(4, 0, 2); }) == ErrorCode::GapViolation);
    CHECK(code_of([] { common_stab_genus(-1, 1, 2); }) == ErrorCode::InvalidSequence);
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q)
            for (int c = std::abs(p - q); c < 10; c += 2) CHECK(common_stab_genus(p, q, c) >= std::max(p, q));
}

TEST_CASE("move sequences from trajectories")
{
    const MoveSequence oval = from_trajectory(genus_trajectory(example_graphic("oval")));
    CHECK(oval.base_genus == 0);
    CHECK(oval.moves.empty());
    const Trajectory wt = genus_trajectory(example_graphic("wiggle"));
    const MoveSequence wiggle = from_trajectory(wt);
    CHECK(wiggle.base_genus == wt.q());
    CHECK(wiggle.moves == std::vector<int>{+1, -1});
    Trajectory jump{{0.2}, {1, 3}};
    CHECK(code_of([&] { from_trajectory(jump); }) == ErrorCode::InvalidSequence);
}

TEST_CASE("reduced peak stays within the bound for every shipped example")
{
    for (const std::string& name : example_names()) {
        CAPTURE(name);
        const Graphic g = example_graphic(name);
        const Trajectory t = genus_trajectory(g);
        const ReducedSequence r = reduce(from_trajectory(t));
        const BoundCertificate b = stable_genus_bound(g);
        CHECK(r.peak <= b.bound);
        CHECK(t.peak() <= b.bound);
        CHECK(r.final_genus() == t.p());
    }
}
