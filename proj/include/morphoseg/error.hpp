#pragma once

#include <stdexcept>
#include <string>

namespace morphoseg {

// All library failures surface as this exception with a human-readable message.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace morphoseg
