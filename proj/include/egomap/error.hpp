#pragma once

#include <stdexcept>
#include <string>

namespace egomap {

enum class ErrorKind {
  InvalidInput,     // violated precondition or malformed in-memory data
  Parse,            // malformed input file
  UndefinedMetric,  // metric requested on an empty denominator (0/0)
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace egomap
