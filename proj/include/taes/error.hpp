#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace taes {

// All library failures carry a stable machine-readable code ("MissingColumn",
// "DuplicateId", ...) next to the human-readable message. The CLI prints the
// code on stderr and maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace taes
