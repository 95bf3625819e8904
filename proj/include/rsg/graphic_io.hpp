#ifndef RSG_GRAPHIC_IO_HPP
#define RSG_GRAPHIC_IO_HPP

#include "rsg/graphic.hpp"

#include <string>
#include <string_view>

namespace rsg {

/// Parses the JSON graphic document. Throws Error(SchemaError) on malformed
/// input and Error(ChainError) when a component does not close up.
Graphic parse_graphic(std::string_view text);

/// Emits the JSON graphic document with 17 significant digits per coordinate.
std::string serialize(const Graphic& g);

Graphic load_graphic(const std::string& path);
void save_graphic(const Graphic& g, const std::string& path);

} // namespace rsg

#endif
