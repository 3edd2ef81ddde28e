#pragma once

#include <stdexcept>
#include <string>

namespace touchloc {

// Error classes map 1:1 onto CLI exit codes (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad or inconsistent configuration / arguments. Exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Geometric preconditions violated (no contact possible, empty mesh, ...).
// Exit code 3.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// File I/O, parse and corruption errors. Exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

// Numerical failures (divergence, empty posterior support, ...). Exit code 5.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace touchloc
