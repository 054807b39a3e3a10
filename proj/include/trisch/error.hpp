#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trisch {

// Domain errors carry a stable machine-readable kind ("NotCoprime",
// "RouteMismatch", ...) next to the human-readable message. The CLI maps
// kinds to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace trisch
