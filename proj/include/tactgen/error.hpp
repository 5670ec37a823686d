#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tactgen {

// Every failure raised by the library carries a stable rule/error code and,
// where it makes sense, a slash-separated path into the input structure.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message, std::string path = {})
      : std::runtime_error(compose(code, message, path)),
        code_(std::move(code)),
        path_(std::move(path)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

 private:
  static std::string compose(const std::string& code, const std::string& message,
                             const std::string& path) {
    std::string out = code;
    if (!path.empty()) out += " at " + path;
    if (!message.empty()) out += ": " + message;
    return out;
  }

  std::string code_;
  std::string path_;
};

}  // namespace tactgen
