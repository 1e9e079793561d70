#pragma once

#include <stdexcept>
#include <string>

namespace dc {

// Everything the library throws for bad mathematical input derives from
// domain_error; the CLI maps it to exit status 1.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class precondition_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class decode_error : public domain_error {
 public:
  decode_error(const std::string& what, std::size_t index)
      : domain_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class shape_datum_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class compose_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class box_too_small : public domain_error {
 public:
  using domain_error::domain_error;
};

class not_cancellable : public domain_error {
 public:
  using domain_error::domain_error;
};

class lift_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class size_error : public domain_error {
 public:
  using domain_error::domain_error;
};

class parse_error : public domain_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : domain_error(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

// Missing or inconsistent arguments; exit status 2 in the CLI.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dc
