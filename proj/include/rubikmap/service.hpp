#pragma once

#include <string>

#include "httplib.h"

#include "rubikmap/error.hpp"
#include "rubikmap/session.hpp"

namespace rubikmap {

/// Registers the /api routes on `server`. The store must outlive it.
/// Endpoints and bodies are described in docs/api.md.
void install_routes(httplib::Server &server, SessionStore &store);

/// HTTP status used for a service error code.
int http_status(ErrorCode code);

} // namespace rubikmap
