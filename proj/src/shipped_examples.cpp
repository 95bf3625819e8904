#include "rsg/shipped_examples.hpp"

#include "rsg/error.hpp"
#include "rsg/graphic_io.hpp"

#include <algorithm>
#include <string>

namespace rsg {

namespace embedded {
struct Entry {
    std::string_view name;
    std::string_view json;
};
std::vector<Entry> entries();
} // namespace embedded

std::vector<std::string> example_names()
{
    std::vector<std::string> names;
    for (const auto& e : embedded::entries()) names.emplace_back(e.name);
    std::sort(names.begin(), names.end());
    return names;
}

std::string_view example_source(std::string_view name)
{
    for (const auto& e : embedded::entries())
        if (e.name == name) return e.json;
    throw Error(ErrorCode::UnknownExample, "no shipped example named '" + std::string(name) + "'");
}

Graphic example_graphic(std::string_view name) { return parse_graphic(example_source(name)); }

} // namespace rsg
