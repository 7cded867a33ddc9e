#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mathlod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(format(message, line, column)), message_(message), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0 && column == 0) return message;
    if (line == 0) return "column " + std::to_string(column) + ": " + message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A caller broke a precondition (bad value, missing denotation, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Enumeration caps exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Symbol mapping incomplete or inconsistent with the ontology.
class MappingError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values (thresholds, empty term lists, files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class SerializationError : public Error {
 public:
  using Error::Error;
};

/// Well-formed RDF whose vocabulary usage contradicts a model invariant.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An ontology with error-severity violations was used where a valid one is
/// required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Phrase or instance cannot be matched against the lexicon.
class LexiconError : public Error {
 public:
  using Error::Error;
};

class AmbiguityError : public Error {
 public:
  AmbiguityError(const std::string& message, std::vector<std::string> candidates)
      : Error(message), candidates_(std::move(candidates)) {}

  const std::vector<std::string>& candidates() const noexcept {
    return candidates_;
  }

 private:
  std::vector<std::string> candidates_;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace mathlod
