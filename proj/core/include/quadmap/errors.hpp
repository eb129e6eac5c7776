#pragma once

#include <stdexcept>
#include <string>

namespace quadmap {

struct InvalidConstants : std::runtime_error {
  explicit InvalidConstants(const std::string& what) : std::runtime_error(what) {}
};

struct NoFeasibleEpsilon : std::runtime_error {
  explicit NoFeasibleEpsilon(const std::string& what) : std::runtime_error(what) {}
};

struct IndeterminacyHit : std::runtime_error {
  explicit IndeterminacyHit(const std::string& what) : std::runtime_error(what) {}
};

struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quadmap
