#pragma once

#include <stdexcept>
#include <string>

namespace dsclust {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Focal element of a piece of evidence is the empty set.
struct EmptyFocal : Error {
    EmptyFocal() : Error("focal element must be a nonempty subset of the frame") {}
};

// Basic probability mass outside the open interval (0,1).
struct MassOutOfRange : Error {
    explicit MassOutOfRange(double mass)
        : Error("mass " + std::to_string(mass) + " outside the open interval (0,1)") {}
};

// A conflict of 1 has infinite weight -log(1-c).
struct ConflictAtOne : Error {
    ConflictAtOne() : Error("conflict >= 1 has no finite weight of evidence") {}
};

// Problem instance exceeds an enumeration bound.
struct TooLarge : Error {
    using Error::Error;
};

// Transfer target equals the evidence's current cluster.
struct SameCluster : Error {
    SameCluster() : Error("transfer target equals the current cluster") {}
};

struct UnknownMethod : Error {
    explicit UnknownMethod(const std::string& name) : Error("unknown method: " + name) {}
};

struct UnknownFormat : Error {
    explicit UnknownFormat(const std::string& name) : Error("unknown format: " + name) {}
};

// Size parameter outside the supported range.
struct BadSize : Error {
    using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
    using Error::Error;
};

// Invalid command line.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace dsclust
