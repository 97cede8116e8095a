#pragma once

#include <stdexcept>
#include <string>

namespace hv {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the element parser; offset is 1-based into the input text.
struct parse_error : error {
    parse_error(const std::string& what, size_t offset_)
        : error(what + " at offset " + std::to_string(offset_)), offset(offset_) {}
    size_t offset;
};

}  // namespace hv
