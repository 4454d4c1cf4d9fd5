#pragma once

#include <stdexcept>
#include <string>

namespace gmf {

// Precondition violations (bad input, unknown names, malformed descriptors).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation would exceed its memory or search budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gmf
