#ifndef G52_ERRORS_HPP
#define G52_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g52 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSkew : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

struct InvalidFamily : Error {
  using Error::Error;
};

struct NotExponentialFamily : Error {
  using Error::Error;
};

struct NotInV : Error {
  using Error::Error;
};

struct LeftV : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace g52

#endif
