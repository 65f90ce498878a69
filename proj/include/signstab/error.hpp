#pragma once

#include <stdexcept>
#include <string>

namespace signstab {

/**
 * Base class of every domain error raised by the engine.
 *
 * name() is a stable identifier ("SignCoherenceViolation", ...) that the
 * command-line front end reports alongside the message.
 */
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed textual input (scalar literals, JSON documents).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

class ArithmeticError : public Error {
 public:
  ArithmeticError(std::string name, const std::string& what)
      : Error(std::move(name), what) {}
};

class SeedError : public Error {
 public:
  SeedError(std::string name, const std::string& what)
      : Error(std::move(name), what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

}  // namespace signstab
