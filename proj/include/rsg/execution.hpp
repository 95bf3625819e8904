#ifndef RSG_EXECUTION_HPP
#define RSG_EXECUTION_HPP

namespace rsg {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical, deterministically ordered results.
enum class Execution { Serial, Parallel };

} // namespace rsg

#endif
