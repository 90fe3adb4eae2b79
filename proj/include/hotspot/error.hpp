#pragma once

#include <stdexcept>
#include <string>

namespace hotspot {

// Exit-code policy for the CLI: ValidationError -> 1, IoError -> 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by STIndex::build when two records share an id.
struct DuplicateIdError : ValidationError {
    explicit DuplicateIdError(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace hotspot
