// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace preclude {

// Base class for all errors raised by this library.
class preclude_error : public std::runtime_error {
public:
    explicit preclude_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph input: self-loop, duplicate edge, endpoint out of range, size cap.
class invalid_graph_error : public preclude_error {
public:
    explicit invalid_graph_error(const std::string& what) : preclude_error(what) {}
};

// Edge-list text that cannot be parsed.
class parse_error : public preclude_error {
public:
    explicit parse_error(const std::string& what) : preclude_error(what) {}
};

// A routine was called on a graph that violates its precondition
// (odd order, not bipartite, not regular, unbalanced sides, no perfect matching, ...).
class precondition_error : public preclude_error {
public:
    explicit precondition_error(const std::string& what) : preclude_error(what) {}
};

// An enumeration exceeded its configured cap.
class cap_exceeded_error : public preclude_error {
public:
    explicit cap_exceeded_error(const std::string& what) : preclude_error(what) {}
};

// A generator was asked for a family it does not know, or bad parameters.
class invalid_spec_error : public preclude_error {
public:
    explicit invalid_spec_error(const std::string& what) : preclude_error(what) {}
};

// Two independent pipelines disagreed on a value that must match exactly.
class verification_error : public preclude_error {
public:
    explicit verification_error(const std::string& what) : preclude_error(what) {}
};

} // namespace preclude
