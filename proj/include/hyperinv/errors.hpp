#pragma once

#include <stdexcept>
#include <string>

namespace hyperinv {

/// Requested computation exceeds the configured work budget (see config.hpp).
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion or division demanded from a (near-)singular object.
class SingularError : public std::domain_error {
public:
  explicit SingularError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input document (file + location diagnostics in the message).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperinv
