#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vba {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A domain (variable set) precondition was violated, e.g. projecting to a
/// superset of the label.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Valuations from two different concrete algebras were mixed.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

/// Configurations that disagree on a shared variable were merged.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// A labeled tree is disconnected or contains a cycle.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Tree, order or factor inputs do not fit together.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// No node of a join tree covers the requested query domain.
class QueryDomainError : public Error {
 public:
  using Error::Error;
};

/// An extension set was empty during solution construction.
class NoSolution : public Error {
 public:
  NoSolution(std::size_t node, const std::string& what)
      : Error(what), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// Brute-force enumeration would exceed the configured state budget.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vba
