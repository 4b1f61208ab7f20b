#ifndef SENET_ERRORS_HPP
#define SENET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace senet {

// Bad caller-supplied data (out-of-range ids, overlapping sets, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The operation is undefined for this graph (disconnected, empty, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Instance exceeds an exhaustive-enumeration limit.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace senet

#endif
