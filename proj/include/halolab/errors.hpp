#pragma once

#include <stdexcept>
#include <string>

namespace halolab {

/// Base class for all halolab errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two elements were combined under incompatible group descriptors.
class DescriptorMismatch : public Error {
public:
  explicit DescriptorMismatch(const std::string& msg) : Error(msg) {}
};

/// An enumeration or ball exceeded its configured cap.
class ResourceLimit : public Error {
public:
  ResourceLimit(const std::string& msg, long long achieved)
      : Error(msg), achieved_(achieved) {}
  /// Largest radius/level that was completed before the cap was hit.
  long long achieved() const { return achieved_; }

private:
  long long achieved_;
};

/// Operation called with inputs outside its contract.
class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

/// A tiling construction could not match cardinalities or sides.
class ConstructionError : public Error {
public:
  explicit ConstructionError(const std::string& msg) : Error(msg) {}
};

/// An odometer rewrite did not resolve within the configured depth.
class TruncationError : public Error {
public:
  TruncationError(const std::string& msg, int depth) : Error(msg), depth_(depth) {}
  int depth() const { return depth_; }

private:
  int depth_;
};

/// Internal invariant violated (corrupt state).
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace halolab
