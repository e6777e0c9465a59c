#ifndef MINK3_ERRORS_HPP
#define MINK3_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mink3 {

// Malformed input text (files, inline scalars, CLI payloads).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates an operation's precondition
// (non-symmetric ball, singular matrix, mixed scalar fields, ...).
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : InvalidInput {
  explicit FieldMismatch(const std::string& what) : InvalidInput(what) {}
};

// A proved theorem failed on concrete data. Always a bug, never a data
// condition; callers must not catch and continue.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mink3

#endif  // MINK3_ERRORS_HPP
