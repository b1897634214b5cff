#pragma once

#include <stdexcept>
#include <string>

namespace rk {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// endpoint/vertex id outside [0, n)
struct invalid_vertex : error {
    using error::error;
};

struct self_loop : error {
    using error::error;
};

// bad construction parameter (e.g. C_n with n < 3)
struct bad_parameter : error {
    using error::error;
};

struct unknown_family : error {
    using error::error;
};

// operation requires a connected graph
struct disconnected_error : error {
    using error::error;
};

// exact search asked for an order beyond its cap
struct cap_exceeded : error {
    using error::error;
};

// engine preconditions (degree bounds, set sizes) not met; message names the
// violated hypothesis and the offending vertex where applicable
struct hypothesis_violated : error {
    using error::error;
};

struct parts_too_small : error {
    using error::error;
};

struct codec_error : error {
    explicit codec_error(const std::string& what, long line = -1)
        : error(what), line(line) {}
    long line; // 1-based input line, -1 if unknown
};

} // namespace rk
