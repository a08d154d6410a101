#pragma once

namespace ofdrshape::io {

/// Configures the default spdlog logger on stderr. Level comes from OFDRSHAPE_LOG
/// (trace|debug|info|warn|error|critical|off); default warn.
void init_logging();

}  // namespace ofdrshape::io
