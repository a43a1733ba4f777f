#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coword {

// Base for errors that point at a 1-based line of a text input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MalformedRecordError : public ParseError {
public:
    using ParseError::ParseError;
};

class EncodingError : public ParseError {
public:
    using ParseError::ParseError;
};

class GraphFileError : public ParseError {
public:
    using ParseError::ParseError;
};

class DimensionMismatchError : public std::invalid_argument {
public:
    DimensionMismatchError(std::size_t matrix_dim, std::size_t vocab_size)
        : std::invalid_argument("matrix dimension " + std::to_string(matrix_dim) +
                                " does not match vocabulary size " + std::to_string(vocab_size)) {}
};

class SpecGapError : public std::invalid_argument {
public:
    explicit SpecGapError(std::uint32_t k)
        : std::invalid_argument("layer ranges leave shell k=" + std::to_string(k) + " uncovered"),
          k_(k) {}

    std::uint32_t k() const noexcept { return k_; }

private:
    std::uint32_t k_;
};

class SpecOverlapError : public std::invalid_argument {
public:
    explicit SpecOverlapError(std::uint32_t k)
        : std::invalid_argument("layer ranges cover shell k=" + std::to_string(k) + " more than once"),
          k_(k) {}

    std::uint32_t k() const noexcept { return k_; }

private:
    std::uint32_t k_;
};

class OracleTooLargeError : public std::invalid_argument {
public:
    explicit OracleTooLargeError(std::size_t node_count, std::size_t limit)
        : std::invalid_argument("brute-force oracle limited to " + std::to_string(limit) +
                                " nodes, got " + std::to_string(node_count)) {}
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace coword
