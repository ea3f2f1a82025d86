#pragma once

#include <stdexcept>
#include <string>

namespace invga {

/// Every failure this library can diagnose is thrown as an Error with a
/// human-readable message. The CLI maps it to stderr + nonzero exit.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace invga
