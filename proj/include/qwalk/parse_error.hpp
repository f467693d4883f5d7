#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwalk {

// Error with a byte offset into the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qwalk
