#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

class NotInImageError : public DomainError {
 public:
  explicit NotInImageError(const std::string& what) : DomainError(what) {}
};

class InconsistentCountsError : public DomainError {
 public:
  explicit InconsistentCountsError(const std::string& what) : DomainError(what) {}
};

class GenericityError : public Error {
 public:
  explicit GenericityError(const std::string& what) : Error(what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace steinberg
