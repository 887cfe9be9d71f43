#pragma once

#include <stdexcept>
#include <string>

namespace corrseq {

// Violated operation precondition (bad argument, length mismatch, ...).
// The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// File / stream problems. The CLI maps this to exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A continued-fraction expansion of a rational ran out of partial quotients
// before the requested depth.
class ExpansionTerminated : public PreconditionError {
public:
    ExpansionTerminated(const std::string& what, int achieved)
        : PreconditionError(what), achieved_depth(achieved) {}
    int achieved_depth;
};

} // namespace corrseq
