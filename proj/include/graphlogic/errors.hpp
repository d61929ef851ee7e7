#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace graphlogic {

// Input that violates a documented precondition (bad ids, malformed sets, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text; line/col are 1-based, col 0 when unknown.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line_, int col_ = 0)
        : std::runtime_error(msg + " (line " + std::to_string(line_) +
                             (col_ > 0 ? ", col " + std::to_string(col_) : std::string()) + ")"),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

// A search refused up front because the instance exceeds a configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DeadlineExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mandatory internal checker failed. Indicates a bug, never bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Soft deadline for long searches. Default-constructed: no limit.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double secs) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(secs));
        return d;
    }

    bool expired() const {
        return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
    }

    void check(const char* what) const {
        if (expired()) throw DeadlineExceeded(std::string("deadline exceeded during ") + what);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace graphlogic
