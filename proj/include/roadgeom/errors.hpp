#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roadgeom {

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates the data model (dangling ids, count mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Geometric configuration the algorithms do not handle (overlapping segments, duplicate circles).
class DegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A post-condition or proven bound failed; always a bug signal.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace roadgeom
