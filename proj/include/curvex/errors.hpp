#pragma once

#include <stdexcept>
#include <string>

namespace curvex {

// Base of every error raised by the library. Subclasses are grouped by how the
// CLI maps them to exit codes: InputError -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::string source, int line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// A record parsed fine but violates a domain invariant. `invariant` is a short
// stable name such as "d = sum(a_i)".
class ValidationError : public InputError {
 public:
  ValidationError(int family, std::string invariant, const std::string& detail)
      : InputError(format(family, invariant, detail)),
        family_(family),
        invariant_(std::move(invariant)) {}

  int family() const { return family_; }
  const std::string& invariant() const { return invariant_; }

 private:
  static std::string format(int family, const std::string& invariant,
                            const std::string& detail) {
    std::string out = "family ";
    out += family > 0 ? std::to_string(family) : std::string("?");
    out += ": violates ";
    out += invariant;
    if (!detail.empty()) {
      out += " (" + detail + ")";
    }
    return out;
  }

  int family_;
  std::string invariant_;
};

class CountError : public InputError {
 public:
  using InputError::InputError;
};

class NotFoundError : public InputError {
 public:
  using InputError::InputError;
};

// An operation was called outside its domain (wrong case tag, bad index...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A mathematical fact that should hold for every family failed to hold.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// The "Fails" column of a surface-method row disagrees with the lemma engine.
class TableMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvex
