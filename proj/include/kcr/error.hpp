#pragma once

#include <stdexcept>
#include <string>

namespace kcr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range vertex, loop edge, violated precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class CyclicGraph : public Error {
public:
    CyclicGraph() : Error("graph contains a directed cycle") {}
};

/// A target is not reachable from its source where a path is required.
class Unreachable : public Error {
public:
    using Error::Error;
};

/// A search gave up because it hit its configured state or enumeration cap.
/// Distinct from a NO answer.
class ResourceExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace kcr
