#pragma once

#include <stdexcept>
#include <string>

namespace hyperjacobi {

// Parameters outside the region where a formula is defined.
class DomainViolation : public std::domain_error {
 public:
  explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

// A Pochhammer or Gamma argument sits on a pole (non-positive integer).
class PoleError : public DomainViolation {
 public:
  explicit PoleError(const std::string& what) : DomainViolation(what) {}
};

// The series is not summable at the requested argument.
class Divergent : public DomainViolation {
 public:
  explicit Divergent(const std::string& what) : DomainViolation(what) {}
};

class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

// Tail criterion not met within the term cap.
class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& what) : std::invalid_argument(what) {}
};

class OrderOutOfRange : public std::out_of_range {
 public:
  explicit OrderOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Sampler gave up: too many guard rejections.
class UnsatisfiableDomain : public std::runtime_error {
 public:
  explicit UnsatisfiableDomain(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperjacobi
