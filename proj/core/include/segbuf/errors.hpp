#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segbuf {

/// Malformed input text (JSON syntax, unknown event kind, wrong field types).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that violates a domain invariant. The message names the field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A send decision that a diligent algorithm could not have made.
class DiligenceError : public std::runtime_error {
public:
    DiligenceError(std::size_t send_index, const std::string& what)
        : std::runtime_error("send " + std::to_string(send_index) + ": " + what),
          send_index_(send_index) {}

    std::size_t send_index() const noexcept { return send_index_; }

private:
    std::size_t send_index_;
};

/// The exact oracle refuses instances whose state space exceeds the configured cap.
class OracleLimitError : public std::runtime_error {
public:
    explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace segbuf
