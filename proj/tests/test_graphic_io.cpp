#include "support/builders.hpp"

#include "rsg/error.hpp"
#include "rsg/graphic_io.hpp"
#include "rsg/shipped_examples.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>

using namespace rsg;
using nlohmann::json;

namespace {

ErrorCode parse_error(const std::string& text)
{
    try {
        parse_graphic(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("the oval file has one component of four smooth quarter arcs")
{
    const Graphic g = example_graphic("oval");
    REQUIRE(g.components.size() == 1);
    const Component& c = g.components[0];
    REQUIRE(c.segments.size() == 4);
    REQUIRE(c.vertices.size() == 4);
    const double k = 4.0 * (std::sqrt(2.0) - 1.0) / 3.0;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c.vertices[i].kind == VertexKind::Smooth);
        const auto& ctrl = c.segments[i].curve.control();
        CHECK(norm(ctrl[0]) == doctest::Approx(1.0));
        CHECK(norm(ctrl[1] - ctrl[0]) == doctest::Approx(k));
        CHECK(norm(ctrl[3] - ctrl[2]) == doctest::Approx(k));
        CHECK(c.segments[i].fold == FoldType::Definite);
        CHECK(c.segments[i].sheet == SheetSide::Left);
    }
    CHECK(g.segment_count() == 4);
}

TEST_CASE("parse and serialize round trip")
{
    for (const std::string& name : example_names()) {
        const Graphic g = example_graphic(name);
        const std::string once = serialize(g);
        const Graphic back = parse_graphic(once);
        CHECK(same_content(g, back));
        CHECK(serialize(back) == once);
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Graphic g = build::random_graphic(rng);
        CHECK(same_content(g, parse_graphic(serialize(g))));
    }
}

TEST_CASE("a chain that does not close is a ChainError")
{
    json doc = json::parse(example_source("oval"));
    doc["components"][0]["segments"][3]["bezier"][3] = {0.9, 0.9};
    CHECK(parse_error(doc.dump()) == ErrorCode::ChainError);
}

TEST_CASE("malformed documents are SchemaErrors")
{
    CHECK(parse_error("not json") == ErrorCode::SchemaError);
    CHECK(parse_error("{}") == ErrorCode::SchemaError);
    json doc = json::parse(example_source("oval"));
    doc["components"][0]["segments"][0]["fold"] = "wavy";
    CHECK(parse_error(doc.dump()) == ErrorCode::SchemaError);
    doc = json::parse(example_source("oval"));
    doc["components"][0]["segments"][0]["bezier"].erase(1);
    CHECK(parse_error(doc.dump()) == ErrorCode::SchemaError);
    doc = json::parse(example_source("oval"));
    doc["components"][0]["vertices"].erase(0);
    CHECK(parse_error(doc.dump()) == ErrorCode::SchemaError);
}

TEST_CASE("crossing labels survive the round trip")
{
    json doc = json::parse(example_source("oval"));
    doc["crossings"] = json::array({{{"tag", "entangled"}}, {{"tag", "unentangled"}}});
    const Graphic g = parse_graphic(doc.dump());
    REQUIRE(g.crossings.has_value());
    REQUIRE(g.crossings->size() == 2);
    CHECK((*g.crossings)[0] == CrossingTag::Entangled);
    CHECK((*g.crossings)[1] == CrossingTag::Unentangled);
    CHECK(same_content(g, parse_graphic(serialize(g))));
}

TEST_CASE("files load and save")
{
    const auto dir = std::filesystem::temp_directory_path() / "rsg_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "wiggle.json").string();
    save_graphic(example_graphic("wiggle"), path);
    CHECK(same_content(load_graphic(path), example_graphic("wiggle")));
    try {
        load_graphic((dir / "missing.json").string());
        FAIL("expected Io");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Io);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("transformed and mirrored graphics keep their structure")
{
    const Graphic g = example_graphic("cusp-pair");
    const Graphic t = transformed(g, 0.7, 2.0, {1.0, 3.0});
    const Graphic m = mirrored(g);
    REQUIRE(t.components.size() == g.components.size());
    REQUIRE(m.components.size() == g.components.size());
    for (std::size_t v = 0; v < g.components[0].vertices.size(); ++v) {
        CHECK(t.components[0].vertices[v].kind == g.components[0].vertices[v].kind);
        CHECK(m.components[0].vertices[v].kind == g.components[0].vertices[v].kind);
    }
    CHECK_FALSE(same_content(g, t));
    const Graphic back = transformed(t, -0.7, 0.5, rotated(Point{-0.5, -1.5}, -0.7));
    for (std::size_t i = 0; i < g.components[0].segments.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(norm(back.components[0].segments[i].curve.control()[j] - g.components[0].segments[i].curve.control()[j]) <=
                  1e-12);
}
