#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

// Domain error with a stable machine-readable code plus a free-form detail
// string. The CLI maps these to exit status 1 and a JSON error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

[[noreturn]] inline void fail(std::string code, std::string detail) {
    throw Error(std::move(code), std::move(detail));
}

}  // namespace toric
