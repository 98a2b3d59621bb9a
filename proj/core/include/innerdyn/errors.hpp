#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace innerdyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (|z| > 1, Im w <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Precision escalation reached max_bits without two consecutive runs agreeing.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, long max_bits)
      : Error(what), max_bits_(max_bits) {}
  long max_bits() const noexcept { return max_bits_; }

 private:
  long max_bits_;
};

/// The arc-pullback sine identity produced a value outside [-1, 1] beyond roundoff.
class FormulaOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A boundary point is in (or within tolerance of) the singular set of a map.
class SingularPoint : public Error {
 public:
  explicit SingularPoint(const std::string& what, std::optional<int> step = std::nullopt)
      : Error(what), step_(step) {}
  std::optional<int> step() const noexcept { return step_; }

 private:
  std::optional<int> step_;
};

class NotBoundaryConverging : public Error {
 public:
  using Error::Error;
};

class NotConverging : public Error {
 public:
  using Error::Error;
};

class WindowTooShort : public Error {
 public:
  using Error::Error;
};

class UnhealthyRun : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownSeries : public Error {
 public:
  using Error::Error;
};

}  // namespace innerdyn
