#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace kellerscope {

// Maps to CLI exit code 1.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Resource cap or timeout hit; message names the cap. CLI exit code 2.
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A certified internal cross-check failed. CLI exit code 3.
class InternalError : public std::runtime_error {
public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

struct Caps {
  int factor_degree = 32;   // univariate factorization degree cap
  int ext_degree = 8;       // total extension degree over the base field
  int tower_height = 3;     // nested extensions
  double timeout_seconds = 60.0;

  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void check_deadline(const char* where) const {
    std::chrono::duration<double> used = std::chrono::steady_clock::now() - started;
    if (used.count() > timeout_seconds)
      throw CapacityError(std::string("timeout of ") + std::to_string(timeout_seconds) +
                          "s exceeded in " + where);
  }
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace kellerscope
