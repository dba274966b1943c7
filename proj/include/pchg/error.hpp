#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pchg {

// Error categories; numeric values double as CLI exit codes.
enum class errc {
    validation = 2,
    not_perfect = 3,
    not_a_covering = 4,
    guard = 5,
    io = 6,
    internal = 7,
};

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    error(errc code, std::string message, std::string detail_json)
        : std::runtime_error(std::move(message)),
          code_(code),
          detail_json_(std::move(detail_json)) {}

    errc code() const noexcept { return code_; }

    // Optional machine-readable payload (JSON text), e.g. a witness pair.
    const std::string& detail_json() const noexcept { return detail_json_; }

private:
    errc code_;
    std::string detail_json_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

[[noreturn]] inline void fail(errc code, const std::string& message,
                              const std::string& detail_json) {
    throw error(code, message, detail_json);
}

} // namespace pchg
