#pragma once

#include <stdexcept>
#include <string>

namespace alphacen {

// Malformed input text (edge lists, GML, label files). CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Missing or inconsistent data (unknown dataset, unreadable file,
// ground-truth gaps). CLI exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (divergent series, singular system, dangling random-walk
// node, non-convergent eigensolve). CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alphacen
