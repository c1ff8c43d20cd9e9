#pragma once

#include <stdexcept>
#include <string>

namespace unidist {

// Thrown when an input violates a documented precondition or schema clause.
// The message names the violated clause.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a search would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant failure (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& clause) {
    if (!cond) throw ValidationError(clause);
}

} // namespace unidist
