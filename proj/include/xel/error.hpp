#pragma once

#include <stdexcept>
#include <string>

namespace xel {

/// Base of every error raised by the library. `code()` is a stable
/// machine-readable token (e.g. "NOT_FOUND", "DANGLING_ACTIVITY_REF").
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class NotFoundError : public Error {
 public:
  NotFoundError(const std::string& what_kind, std::string id)
      : Error("NOT_FOUND", what_kind + " '" + id + "' not found"),
        id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

}  // namespace xel
