#pragma once

#include <stdexcept>
#include <string>

namespace veronormal {

// Invalid mathematical input: bad degrees, base points, non-injective
// presentations. The CLI maps this to exit code 2.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or malformed files, bad polynomial strings. Exit code 3.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace veronormal
