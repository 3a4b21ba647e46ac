#pragma once

#include <stdexcept>
#include <string>

namespace qlk {

// Bad input: malformed braid text, out-of-range labels, invalid options.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured budget (order, spin cutoff, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed; names the identity.
class ConsistencyError : public std::runtime_error {
 public:
  ConsistencyError(const std::string& identity, const std::string& detail)
      : std::runtime_error(identity + ": " + detail), identity_(identity) {}
  const std::string& identity() const { return identity_; }

 private:
  std::string identity_;
};

}  // namespace qlk
