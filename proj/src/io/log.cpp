#include "ofdrshape/io/log.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>

namespace ofdrshape::io {

void init_logging() {
  auto logger = spdlog::stderr_color_mt("ofdrshape");
  logger->set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("OFDRSHAPE_LOG")) {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  spdlog::set_default_logger(logger);
}

}  // namespace ofdrshape::io
