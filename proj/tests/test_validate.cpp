#include "support/builders.hpp"

#include "rsg/shipped_examples.hpp"
#include "rsg/sweep.hpp"
#include "rsg/validate.hpp"

#include <doctest.h>

using namespace rsg;

namespace {

Graphic one(Component c)
{
    Graphic g;
    g.components.push_back(std::move(c));
    return g;
}

} // namespace

TEST_CASE("shipped examples and their mirror images are valid")
{
    for (const std::string& name : example_names()) {
        CAPTURE(name);
        CHECK(validate(example_graphic(name)).ok());
        CHECK(validate(mirrored(example_graphic(name))).ok());
    }
}

TEST_CASE("randomized graphics are valid")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) CHECK(validate(build::random_graphic(rng)).ok());
}

TEST_CASE("a cusp joining two definite edges breaks fold alternation")
{
    Graphic g = example_graphic("cusp-pair");
    for (Segment& s : g.components[0].segments) s.fold = FoldType::Definite;
    const ValidationReport r = validate(g);
    CHECK(r.has(ViolationKind::FoldAlternation));
}

TEST_CASE("a fold change at a smooth vertex breaks fold alternation")
{
    Graphic g = example_graphic("oval");
    g.components[0].segments[1].fold = FoldType::Indefinite;
    CHECK(validate(g).has(ViolationKind::FoldAlternation));
}

TEST_CASE("a straight segment is DegenerateFlat")
{
    Graphic g = example_graphic("oval");
    auto ctrl = g.components[0].segments[0].curve.control();
    ctrl[1] = ctrl[0] + (1.0 / 3.0) * (ctrl[3] - ctrl[0]);
    ctrl[2] = ctrl[0] + (2.0 / 3.0) * (ctrl[3] - ctrl[0]);
    g.components[0].segments[0].curve = CubicBezier(ctrl);
    const ValidationReport r = validate(g);
    CHECK(r.has(ViolationKind::DegenerateFlat));
    CHECK(r.has(ViolationKind::SmoothTangent));
}

TEST_CASE("a stationary point inside a segment is VanishingVelocity")
{
    // (s^2, s^3) for s in [-1, 1].
    Segment s;
    s.curve = CubicBezier({Point{1, -1}, Point{-1.0 / 3.0, 1}, Point{-1.0 / 3.0, -1}, Point{1, 1}});
    Component c;
    c.segments = {s};
    c.vertices = {Vertex{VertexKind::Smooth, Point{1, 1}, 0, 0}};
    CHECK(validate(one(c)).has(ViolationKind::VanishingVelocity));
}

TEST_CASE("sheets must face the cusp wedge")
{
    Graphic g = example_graphic("cusp-pair");
    for (Segment& s : g.components[0].segments) s.sheet = SheetSide::Right;
    CHECK(validate(g).has(ViolationKind::SheetMismatch));
}

TEST_CASE("sheets may not flip at a smooth vertex")
{
    Graphic g = example_graphic("oval");
    g.components[0].segments[2].sheet = SheetSide::Right;
    CHECK(validate(g).has(ViolationKind::SheetMismatch));
}

TEST_CASE("the definite edge is the outer edge of a type two cusp")
{
    Graphic g = example_graphic("cusp-pair");
    for (Segment& s : g.components[0].segments)
        s.fold = s.fold == FoldType::Definite ? FoldType::Indefinite : FoldType::Definite;
    const ValidationReport r = validate(g);
    CHECK(r.has(ViolationKind::TypeTwoFoldOrder));
    CHECK_FALSE(r.has(ViolationKind::FoldAlternation));
}

TEST_CASE("tangent components are a non-transversal crossing")
{
    Graphic g;
    g.components.push_back(build::circle({0, 0}, 1.0, FoldType::Definite, SheetSide::Left));
    g.components.push_back(build::circle({2, 0}, 1.0, FoldType::Indefinite, SheetSide::Left));
    CHECK(validate(g).has(ViolationKind::NonTransversalCrossing));
}

TEST_CASE("transversal crossings need matching labels")
{
    Graphic g;
    g.components.push_back(build::circle({0, 0}, 1.0, FoldType::Definite, SheetSide::Left));
    g.components.push_back(build::circle({1.2, 0.3}, 0.8, FoldType::Indefinite, SheetSide::Left));
    ValidationReport r = validate(g);
    CHECK_FALSE(r.has(ViolationKind::NonTransversalCrossing));
    g.crossings = std::vector<CrossingTag>{CrossingTag::Unentangled};
    CHECK(validate(g).has(ViolationKind::CrossingLabelMismatch));
    g.crossings = std::vector<CrossingTag>{CrossingTag::Unentangled, CrossingTag::Entangled};
    CHECK_FALSE(validate(g).has(ViolationKind::CrossingLabelMismatch));
}

TEST_CASE("level ties at the sweep endpoints are EndpointEvents")
{
    Graphic g;
    g.components.push_back(build::circle({0, 0}, 1.0, FoldType::Definite, SheetSide::Left));
    g.components.push_back(build::circle({3, 0}, 1.0, FoldType::Definite, SheetSide::Right));
    CHECK(validate(g).has(ViolationKind::EndpointEvent));
    Graphic shifted = g;
    shifted.components[1] = build::circle({3, 0.4}, 1.0, FoldType::Definite, SheetSide::Right);
    CHECK(validate(shifted).ok());
}

TEST_CASE("a horizontal inflection tangent is an EndpointEvent")
{
    // The wiggle rotated so that its first inflection sits at angle 0.
    const Graphic wiggle = example_graphic("wiggle");
    const Graphic g = transformed(wiggle, event_schedule(wiggle).events.front().angle);
    CHECK(validate(g).has(ViolationKind::EndpointEvent));
}

TEST_CASE("violation kinds have names")
{
    CHECK(to_string(ViolationKind::TypeTwoFoldOrder) == "TypeTwoFoldOrder");
    CHECK(to_string(ViolationKind::EndpointEvent) == "EndpointEvent");
}
