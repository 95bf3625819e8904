#include "rsg/graphic_io.hpp"

#include "rsg/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rsg {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

const json& member(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) schema(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::string string_member(const json& obj, const char* key, const std::string& where)
{
    const json& v = member(obj, key, where);
    if (!v.is_string()) schema(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Point parse_point(const json& v, const std::string& where)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        schema(where + ": control point must be [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

Segment parse_segment(const json& v, const std::string& where)
{
    const json& bez = member(v, "bezier", where);
    if (!bez.is_array() || bez.size() != 4) schema(where + ": \"bezier\" must list four control points");
    std::array<Point, 4> ctrl{};
    for (std::size_t i = 0; i < 4; ++i) ctrl[i] = parse_point(bez[i], where);

    Segment seg;
    seg.curve = CubicBezier(ctrl);
    const std::string fold = string_member(v, "fold", where);
    if (fold == "definite")
        seg.fold = FoldType::Definite;
    else if (fold == "indefinite")
        seg.fold = FoldType::Indefinite;
    else
        schema(where + ": unknown fold \"" + fold + "\"");
    const std::string sheet = string_member(v, "sheet", where);
    if (sheet == "left")
        seg.sheet = SheetSide::Left;
    else if (sheet == "right")
        seg.sheet = SheetSide::Right;
    else
        schema(where + ": unknown sheet side \"" + sheet + "\"");
    return seg;
}

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Graphic parse_graphic(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema("document must be a JSON object");

    Graphic g;
    const json& comps = member(doc, "components", "document");
    if (!comps.is_array()) schema("\"components\" must be an array");
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const std::string where = "component " + std::to_string(ci);
        const json& segs = member(comps[ci], "segments", where);
        const json& verts = member(comps[ci], "vertices", where);
        if (!segs.is_array() || !verts.is_array()) schema(where + ": segments and vertices must be arrays");
        std::vector<Segment> segments;
        for (std::size_t si = 0; si < segs.size(); ++si)
            segments.push_back(parse_segment(segs[si], where + " segment " + std::to_string(si)));
        std::vector<VertexKind> kinds;
        for (std::size_t vi = 0; vi < verts.size(); ++vi) {
            const std::string kind = string_member(verts[vi], "kind", where + " vertex " + std::to_string(vi));
            if (kind == "smooth")
                kinds.push_back(VertexKind::Smooth);
            else if (kind == "cusp")
                kinds.push_back(VertexKind::Cusp);
            else
                schema(where + ": unknown vertex kind \"" + kind + "\"");
        }
        g.components.push_back(make_component(std::move(segments), kinds));
    }

    if (doc.contains("crossings")) {
        const json& cr = doc.at("crossings");
        if (!cr.is_array()) schema("\"crossings\" must be an array");
        std::vector<CrossingTag> tags;
        for (std::size_t i = 0; i < cr.size(); ++i) {
            const std::string tag = string_member(cr[i], "tag", "crossing " + std::to_string(i));
            if (tag == "entangled")
                tags.push_back(CrossingTag::Entangled);
            else if (tag == "unentangled")
                tags.push_back(CrossingTag::Unentangled);
            else
                schema("crossing " + std::to_string(i) + ": unknown tag \"" + tag + "\"");
        }
        g.crossings = std::move(tags);
    }
    return g;
}

std::string serialize(const Graphic& g)
{
    std::ostringstream out;
    out << "{\n  \"components\": [";
    for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
        const Component& c = g.components[ci];
        out << (ci ? ",\n" : "\n") << "    {\n      \"segments\": [";
        for (std::size_t si = 0; si < c.segments.size(); ++si) {
            const Segment& s = c.segments[si];
            out << (si ? ",\n" : "\n") << "        { \"bezier\": [";
            const auto& ctrl = s.curve.control();
            for (std::size_t k = 0; k < 4; ++k)
                out << (k ? ", " : "") << "[" << fmt17(ctrl[k].x) << ", " << fmt17(ctrl[k].y) << "]";
            out << "], \"fold\": \"" << to_string(s.fold) << "\", \"sheet\": \"" << to_string(s.sheet) << "\" }";
        }
        out << "\n      ],\n      \"vertices\": [";
        for (std::size_t vi = 0; vi < c.vertices.size(); ++vi)
            out << (vi ? ", " : "") << "{ \"kind\": \"" << to_string(c.vertices[vi].kind) << "\" }";
        out << "]\n    }";
    }
    out << "\n  ]";
    if (g.crossings) {
        out << ",\n  \"crossings\": [";
        for (std::size_t i = 0; i < g.crossings->size(); ++i)
            out << (i ? ", " : "") << "{ \"tag\": \"" << to_string((*g.crossings)[i]) << "\" }";
        out << "]";
    }
    out << "\n}\n";
    return out.str();
}

Graphic load_graphic(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graphic(buf.str());
}

void save_graphic(const Graphic& g, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << serialize(g);
}

} // namespace rsg
