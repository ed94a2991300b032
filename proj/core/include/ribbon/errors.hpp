#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

// Malformed input text (graph files, Gauss codes). CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract. CLI exit code 1.
class precondition_error : public std::logic_error {
 public:
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ribbon
