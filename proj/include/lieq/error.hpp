#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& what_kind, const std::string& name)
      : Error("unknown " + what_kind + ": " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateName : public Error {
 public:
  explicit DuplicateName(const std::string& name) : Error("duplicate generator name: " + name) {}
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class TermCapExceeded : public Error {
 public:
  explicit TermCapExceeded(std::size_t cap)
      : Error("rewriting exceeded term cap of " + std::to_string(cap) + " terms") {}
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lieq
