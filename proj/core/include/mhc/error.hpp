#pragma once

#include <stdexcept>
#include <string>

namespace mhc {

/// Failure raised by library operations whose preconditions do not hold.
/// `code()` is a stable, machine-readable identifier such as "unknown-symbol".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace mhc
