#pragma once

#include <stdexcept>
#include <string>

namespace qrel {

/// Parameter outside its documented range.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Matrix handed to a Hermitian-only routine violates the symmetry tolerance.
class NotHermitianError : public std::runtime_error {
public:
    explicit NotHermitianError(const std::string& what) : std::runtime_error(what) {}
};

/// Root bracketing failed: the function keeps one sign on the search interval.
class NoRootError : public std::runtime_error {
public:
    explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Well-formed config with an out-of-range or unknown value; names the key.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// render_svg was handed nothing to draw.
class EmptyDataError : public std::runtime_error {
public:
    explicit EmptyDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qrel
