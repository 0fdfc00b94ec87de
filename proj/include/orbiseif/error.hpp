#pragma once

#include <stdexcept>
#include <string>

namespace orbiseif {

// Domain error with a stable machine-readable code ("syntax", "semantic",
// "scope", "unsupported", "closure", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace orbiseif
