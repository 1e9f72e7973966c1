#pragma once

#include <stdexcept>
#include <string>

namespace fibconv {

// Base of every error the library raises. `kind()` is a stable short tag used
// in the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& d) : Error("InvalidParameter", d) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& d) : Error("DivisionByZero", d) {}
};

struct NotAPowerSeries : Error {
  explicit NotAPowerSeries(const std::string& d) : Error("NotAPowerSeries", d) {}
};

struct UnknownSequence : Error {
  explicit UnknownSequence(const std::string& name)
      : Error("UnknownSequence", "unknown sequence '" + name + "'") {}
};

struct ManifestError : Error {
  explicit ManifestError(const std::string& d) : Error("ManifestError", d) {}
};

}  // namespace fibconv
