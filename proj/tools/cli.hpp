#ifndef RSG_TOOLS_CLI_HPP
#define RSG_TOOLS_CLI_HPP

#include "rsg/graphic.hpp"

#include <optional>
#include <string>

namespace rsg::cli {

enum class Format { Json, Text };

/// Exit code plus the text destined for stdout and stderr.
struct CommandResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

CommandResult cmd_validate(const std::string& path, Format format);
CommandResult cmd_sweep(const std::string& path, Format format);
CommandResult cmd_slice(const std::string& path, double angle, std::optional<double> level, Format format);
CommandResult cmd_plot(const std::string& path, const std::string& out, std::optional<double> angle);
CommandResult cmd_examples_list();
CommandResult cmd_examples_emit(const std::string& name, const std::string& dir);

/// SVG 1.1 drawing of the graphic, with a rotated copy and its horizontal
/// tangencies when an angle is given.
std::string render_svg(const Graphic& g, std::optional<double> angle);

/// Parses argv and dispatches; the return value is the process exit code.
int run(int argc, char** argv);

} // namespace rsg::cli

#endif
