#pragma once

#include <stdexcept>
#include <string>

namespace secnoma {

/// Label of a user inside the SIC-ordered pair. User m has the weaker AP
/// channel and is decoded last; user n is decoded first.
enum class UserId { m, n };

inline const char* to_string(UserId u) { return u == UserId::m ? "m" : "n"; }

class NonPositivePower : public std::invalid_argument {
 public:
  explicit NonPositivePower(const std::string& what) : std::invalid_argument(what) {}
};

/// No finite positive power meets the outage constraint for this partition.
class InfeasiblePartition : public std::runtime_error {
 public:
  InfeasiblePartition(UserId user, double margin, const std::string& what)
      : std::runtime_error(what), user_(user), margin_(margin) {}

  UserId user() const { return user_; }
  /// Value of the (nonpositive) power denominator that failed.
  double margin() const { return margin_; }

 private:
  UserId user_;
  double margin_;
};

class InfeasibleProblem : public std::runtime_error {
 public:
  InfeasibleProblem(UserId user, double margin, const std::string& what)
      : std::runtime_error(what), user_(user), margin_(margin) {}

  UserId user() const { return user_; }
  double margin() const { return margin_; }

 private:
  UserId user_;
  double margin_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace secnoma
