#pragma once

#include <stdexcept>
#include <string>

namespace sofd {

/// Thrown when a field update produces non-finite values.
class instability_error : public std::runtime_error {
public:
    explicit instability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files; carries a 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace sofd
