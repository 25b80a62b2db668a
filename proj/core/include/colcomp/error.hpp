#pragma once

#include <stdexcept>
#include <string>

namespace colcomp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violations of graph construction invariants (self-loops, duplicate or
// out-of-range edges).
struct GraphError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

struct DisconnectedGraphError : Error {
    using Error::Error;
};

struct NotACaterpillarError : Error {
    using Error::Error;
};

struct NotANecklaceError : Error {
    using Error::Error;
};

struct AmbiguousBackboneError : Error {
    using Error::Error;
};

// An operation was called outside its documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

struct InvalidSolutionError : Error {
    using Error::Error;
};

struct InvalidPartitionError : Error {
    using Error::Error;
};

// The oracle exceeded its node budget; distinct from "no solution within the
// depth bound", which is reported as an empty optional.
struct SearchLimitError : Error {
    using Error::Error;
};

struct InstanceTooLargeError : Error {
    using Error::Error;
};

}  // namespace colcomp
