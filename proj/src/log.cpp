#include "bifurcate/log.hpp"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>

namespace bifurcate {

spdlog::logger& log() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto l = std::make_shared<spdlog::logger>("bifurcate", std::make_shared<spdlog::sinks::stderr_sink_st>());
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::off);
    if (const char* env = std::getenv("BIFURCATE_LOG")) {
      const std::string_view v(env);
      if (v == "info") l->set_level(spdlog::level::info);
      if (v == "debug") l->set_level(spdlog::level::debug);
    }
    return l;
  }();
  return *logger;
}

}  // namespace bifurcate
