#ifndef RSG_SHIPPED_EXAMPLES_HPP
#define RSG_SHIPPED_EXAMPLES_HPP

#include "rsg/graphic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rsg {

/// Names of the graphics bundled with the library, sorted.
std::vector<std::string> example_names();

/// Bundled JSON text. Throws Error(UnknownExample).
std::string_view example_source(std::string_view name);

Graphic example_graphic(std::string_view name);

} // namespace rsg

#endif
