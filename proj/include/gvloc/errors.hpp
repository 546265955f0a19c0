#pragma once
#include <stdexcept>
#include <string>

namespace gvloc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedGroup : Error {
  explicit UnsupportedGroup(const std::string& what) : Error("unsupported group: " + what) {}
};

struct NotDominant : Error {
  NotDominant() : Error("weight is not dominant integral") {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

struct Mismatch : Error {
  explicit Mismatch(const std::string& what) : Error("mismatch: " + what) {}
};

struct BadIndex : Error {
  explicit BadIndex(const std::string& what) : Error("bad index: " + what) {}
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& what) : Error("out of domain: " + what) {}
};

struct QuadratureError : Error {
  explicit QuadratureError(const std::string& what) : Error("quadrature did not converge: " + what) {}
};

struct SingularParameter : Error {
  explicit SingularParameter(const std::string& what) : Error("singular parameter: " + what) {}
};

struct SingularValue : Error {
  explicit SingularValue(const std::string& what) : Error("singular value: " + what) {}
};

struct UnknownCocycle : Error {
  explicit UnknownCocycle(const std::string& name) : Error("unknown cocycle: " + name) {}
};

struct NonConvergent : Error {
  explicit NonConvergent(const std::string& what) : Error("series not convergent: " + what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace gvloc
