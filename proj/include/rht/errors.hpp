#pragma once

#include <stdexcept>
#include <string>

namespace rht {

// All recoverable failures carry a stable kind tag so callers (CLI, bindings)
// can map them to structured reports without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Expression / input text failures. position is a 0-based offset into the text.
class ParseError : public Error {
public:
    ParseError(std::string kind, const std::string& msg, std::size_t position)
        : Error(std::move(kind), msg), pos_(position) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace rht
