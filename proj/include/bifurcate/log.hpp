#pragma once

#include <spdlog/spdlog.h>

namespace bifurcate {

/// Diagnostics logger on stderr. Level comes from BIFURCATE_LOG
/// (off | info | debug), default off.
spdlog::logger& log();

}  // namespace bifurcate
