#pragma once

#include <stdexcept>
#include <string>

namespace orlicz_wiener {

/// Base of every error raised by the library. `kind()` is a stable tag used
/// in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Argument outside the mathematical domain (negative x, nonpositive lambda, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Inconsistent configuration: malformed spec strings, index-class mismatch,
/// grid too small for the requested band.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

/// A weight sequence whose declared Delta_2 constant is contradicted by data.
class InvalidWeightError : public Error {
 public:
  explicit InvalidWeightError(const std::string& what) : Error("invalid-weight", what) {}
};

class VanishingSymbolError : public Error {
 public:
  explicit VanishingSymbolError(const std::string& what) : Error("vanishing-symbol", what) {}
};

/// Argument jumps between neighbouring grid points too large to unwrap reliably.
class UnderResolvedError : public Error {
 public:
  explicit UnderResolvedError(const std::string& what) : Error("under-resolved", what) {}
};

/// Nonzero winding number: the symbol has no continuous logarithm.
class IndexObstructionError : public Error {
 public:
  IndexObstructionError(int kappa, const std::string& what)
      : Error("index-obstruction", what), kappa_(kappa) {}
  int kappa() const noexcept { return kappa_; }

 private:
  int kappa_;
};

/// Factorization residual above tolerance; caller should raise M and the grid size.
class TruncationError : public Error {
 public:
  TruncationError(double residual, const std::string& what)
      : Error("truncation-insufficient", what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace orlicz_wiener
