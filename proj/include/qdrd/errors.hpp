#pragma once

#include <stdexcept>
#include <string>

namespace qdrd {

// Shape/argument violations (mismatched dimensions, bad bit index, ...).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Rank deficiency detected during factorization, or an exactly zero pivot.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// |X|^n exceeds the configured exhaustive-enumeration cap.
class EnumerationCapError : public std::runtime_error {
public:
    explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or unwritable output.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qdrd
