#include "cli.hpp"

#include "rsg/shipped_examples.hpp"
#include "rsg/sweep.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

using namespace rsg;
using namespace rsg::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Workspace {
    fs::path dir;
    Workspace()
    {
        dir = fs::temp_directory_path() / ("rsg_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(dir);
        for (const std::string& name : example_names()) cmd_examples_emit(name, dir.string());
    }
    ~Workspace() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / (name + ".json")).string(); }
    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("examples list and emit")
{
    const CommandResult list = cmd_examples_list();
    CHECK(list.exit_code == kExitOk);
    CHECK(list.output == "bitangent-pair\ncusp-pair\noval\nwiggle\n");
    Workspace ws;
    for (const std::string& name : example_names()) {
        CHECK(fs::exists(ws.file(name)));
        CHECK(cmd_validate(ws.file(name), Format::Text).exit_code == kExitOk);
    }
    CHECK(cmd_examples_emit("nonesuch", ws.dir.string()).exit_code == kExitInvalid);
}

TEST_CASE("validate exit codes")
{
    Workspace ws;
    const CommandResult ok = cmd_validate(ws.file("oval"), Format::Json);
    CHECK(ok.exit_code == kExitOk);
    const json doc = json::parse(ok.output);
    CHECK(doc["schema"] == 1);
    CHECK(doc["ok"] == true);
    CHECK(doc["violations"].empty());

    json bad = json::parse(example_source("cusp-pair"));
    for (auto& seg : bad["components"][0]["segments"]) seg["fold"] = "definite";
    const CommandResult fold = cmd_validate(ws.write("bad.json", bad.dump()), Format::Json);
    CHECK(fold.exit_code == kExitInvalid);
    const json report = json::parse(fold.output);
    bool listed = false;
    for (const auto& v : report["violations"]) listed = listed || v["kind"] == "FoldAlternation";
    CHECK(listed);

    CHECK(cmd_validate((ws.dir / "missing.json").string(), Format::Text).exit_code == kExitIo);
    CHECK(cmd_validate(ws.write("garbage.json", "{ nope"), Format::Text).exit_code == kExitIo);
    CHECK(cmd_sweep(ws.file("missing"), Format::Json).exit_code == kExitIo);
    CHECK(cmd_sweep(ws.write("bad2.json", bad.dump()), Format::Json).exit_code == kExitInvalid);
}

TEST_CASE("sweep reports")
{
    Workspace ws;
    SUBCASE("oval")
    {
        const CommandResult r = cmd_sweep(ws.file("oval"), Format::Json);
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        CHECK(doc["events"].empty());
        CHECK(doc["p"] == 0);
        CHECK(doc["q"] == 0);
        CHECK(doc["c"] == 0);
        CHECK(doc["bound"] == 0);
        CHECK(doc["trajectory"]["genera"] == json::array({0}));
    }
    SUBCASE("wiggle")
    {
        const CommandResult r = cmd_sweep(ws.file("wiggle"), Format::Json);
        REQUIRE(r.exit_code == kExitOk);
        const json doc = json::parse(r.output);
        const int q = doc["q"];
        CHECK(doc["p"] == q);
        CHECK(doc["c"] == 2);
        CHECK(doc["bound"] == q + 1);
        CHECK(doc["peak"] == q + 1);
        CHECK(doc["moves"] == json::array({1, -1}));
        CHECK(doc["reduced"]["peak"] == q + 1);
        int nonzero = 0;
        for (const auto& e : doc["events"]) nonzero += e["genus_delta"] != 0;
        CHECK(nonzero == 2);
        CHECK(doc["slices"].size() == doc["trajectory"]["genera"].size());
    }
    SUBCASE("json and text agree")
    {
        for (const std::string& name : example_names()) {
            const json doc = json::parse(cmd_sweep(ws.file(name), Format::Json).output);
            const std::string text = cmd_sweep(ws.file(name), Format::Text).output;
            std::ostringstream summary;
            summary << "p = " << doc["p"] << "  q = " << doc["q"] << "  c = " << doc["c"] << "  peak = " << doc["peak"]
                    << "  bound = " << doc["bound"];
            CHECK(text.find(summary.str()) != std::string::npos);
            std::string genera = "trajectory genera:";
            for (const auto& g : doc["trajectory"]["genera"]) genera += " " + std::to_string(g.get<int>());
            CHECK(text.find(genera + "\n") != std::string::npos);
            for (const auto& e : doc["events"]) CHECK(text.find(e["kind"].get<std::string>()) != std::string::npos);
        }
    }
    SUBCASE("repeated runs are byte identical")
    {
        for (const std::string& name : example_names()) {
            CHECK(cmd_sweep(ws.file(name), Format::Json).output == cmd_sweep(ws.file(name), Format::Json).output);
            CHECK(cmd_sweep(ws.file(name), Format::Text).output == cmd_sweep(ws.file(name), Format::Text).output);
        }
    }
}

TEST_CASE("slice reports")
{
    Workspace ws;
    const json mid = json::parse(cmd_slice(ws.file("oval"), 0.0, 0.0, Format::Json).output);
    CHECK(mid["n_def"] == 2);
    CHECK(mid["m_indef"] == 0);
    CHECK(mid["chi_surface"] == 2);
    const json miss = json::parse(cmd_slice(ws.file("oval"), 0.0, 4.0, Format::Json).output);
    CHECK(miss["n_def"] == 0);
    CHECK(miss["m_indef"] == 0);
    CHECK(miss["chi_surface"] == 0);

    const Graphic wiggle = example_graphic("wiggle");
    const Schedule s = event_schedule(wiggle);
    const double t = 0.5 * (s.events[0].angle + s.events[1].angle);
    const json profile = json::parse(cmd_slice(ws.file("wiggle"), t, std::nullopt, Format::Json).output);
    bool torus = false;
    const auto& bps = profile["breakpoints"];
    for (std::size_t i = 1; i + 1 < profile["censuses"].size(); ++i) {
        const auto& c = profile["censuses"][i];
        if (c["n_def"] != 2 || c["m_indef"] != 2) continue;
        const double level = 0.5 * (bps[i - 1]["level"].get<double>() + bps[i]["level"].get<double>());
        const json one = json::parse(cmd_slice(ws.file("wiggle"), t, level, Format::Json).output);
        CHECK(one["chi_surface"] == 0);
        torus = true;
    }
    CHECK(torus);

    const CommandResult text = cmd_slice(ws.file("oval"), 0.0, 0.0, Format::Text);
    CHECK(text.output.find("chi_surface = 2") != std::string::npos);
    CHECK(cmd_slice(ws.file("oval"), 0.0, -1.0, Format::Json).exit_code == kExitInvalid);
}

TEST_CASE("plots")
{
    Workspace ws;
    const std::string oval_svg = (ws.dir / "oval.svg").string();
    REQUIRE(cmd_plot(ws.file("oval"), oval_svg, std::nullopt).exit_code == kExitOk);
    const std::string oval = slurp(oval_svg);
    CHECK(oval.rfind("<?xml", 0) == 0);
    CHECK(oval.find("<svg") != std::string::npos);
    CHECK(count(oval, "<path") == 1);
    CHECK(count(oval, "Z\"") == 1);
    CHECK(count(oval, "stroke-dasharray") == 0);

    const std::string wiggle_svg = (ws.dir / "wiggle.svg").string();
    REQUIRE(cmd_plot(ws.file("wiggle"), wiggle_svg, std::nullopt).exit_code == kExitOk);
    const std::string wiggle = slurp(wiggle_svg);
    CHECK(count(wiggle, "stroke-dasharray") >= 1);
    CHECK(count(wiggle, "class=\"indefinite\"") >= 1);
    CHECK(count(wiggle, "class=\"inflection\"") == 2);

    const double quarter = std::numbers::pi / 4;
    const std::string rotated_svg = (ws.dir / "rotated.svg").string();
    REQUIRE(cmd_plot(ws.file("wiggle"), rotated_svg, quarter).exit_code == kExitOk);
    const std::string rotated = slurp(rotated_svg);
    CHECK(count(rotated, "class=\"tangency\"") == static_cast<std::size_t>(critical_census(example_graphic("wiggle"), quarter).total()));
    CHECK(count(rotated, "<g id=\"rotated\"") == 1);
    CHECK(cmd_plot(ws.file("missing"), rotated_svg, std::nullopt).exit_code == kExitIo);
}

TEST_CASE("argument parsing")
{
    Workspace ws;
    const std::string path = ws.file("oval");
    std::vector<std::string> args{"graphic", "validate", path, "--format", "json"};
    std::vector<char*> argv;
    for (std::string& a : args) argv.push_back(a.data());
    CHECK(run(static_cast<int>(argv.size()), argv.data()) == kExitOk);
    std::vector<std::string> bad{"graphic", "frobnicate"};
    std::vector<char*> bad_argv;
    for (std::string& a : bad) bad_argv.push_back(a.data());
    CHECK(run(static_cast<int>(bad_argv.size()), bad_argv.data()) == kExitIo);
}
