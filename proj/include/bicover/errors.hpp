#ifndef BICOVER_ERRORS_HPP
#define BICOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicover {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A bicoloring/cover whose length does not match the hypergraph.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Malformed input: broken invariants, improper colorings, bad matchings.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// Refusal because an instance exceeds a configured resource cap.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

} // namespace bicover

#endif // BICOVER_ERRORS_HPP
