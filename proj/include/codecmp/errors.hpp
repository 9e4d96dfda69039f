#pragma once

#include <stdexcept>
#include <string>

namespace codecmp {

/// Invalid input or violated precondition. The CLI maps this to exit code 2.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource guard (index width, memory, LP size) would be exceeded.
/// The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace codecmp
