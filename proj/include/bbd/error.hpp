#pragma once

#include <stdexcept>
#include <string>

namespace bbd {

/// Failure categories; the CLI maps them onto its exit codes.
enum class ErrorKind {
  Parse,         // malformed input text or document
  Precondition,  // an operation was called outside its contract
  Invariant,     // a structural or theorem-level check failed
  Resource,      // an iteration cap was hit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorKind::Invariant, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

}  // namespace bbd
