#pragma once

#include <stdexcept>
#include <string>

namespace dwl {

// Bad arguments, malformed structures, violated preconditions.
class InvalidInputError : public std::invalid_argument {
public:
  explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

// Instance exceeds a configured exact-computation cap.
class CapabilityError : public std::runtime_error {
public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Text format errors; carries a 1-based line number (0 = header/unknown).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// JSON schema violations; carries a JSON-path-ish location.
class SchemaError : public std::runtime_error {
public:
  SchemaError(const std::string& what, const std::string& path)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace dwl
