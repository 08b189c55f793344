#pragma once

#include <stdexcept>
#include <string>

namespace scldpc {

struct UnsupportedConstruction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad CCSpec: names the offending connection edge.
struct InvalidSpec : std::invalid_argument {
    explicit InvalidSpec(const std::string& msg, int edge_index = -1)
        : std::invalid_argument(msg), edge(edge_index) {}
    int edge;
};

// A local encoding solve came out singular for this lift; retry with another seed.
struct ReLiftRequired : std::runtime_error {
    explicit ReLiftRequired(const std::string& msg, int position_key)
        : std::runtime_error(msg), position(position_key) {}
    int position;
};

struct FitFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace scldpc
