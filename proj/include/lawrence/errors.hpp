#ifndef LAWRENCE_ERRORS_HPP
#define LAWRENCE_ERRORS_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lawrence {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configured resource limit was hit. Never a silent truncation: callers get
/// the limit name and whatever partial state the thrower chose to attach.
struct cap_exceeded : std::runtime_error {
    cap_exceeded(std::string cap, const std::string& detail)
        : std::runtime_error(cap + " exceeded: " + detail), cap_name(std::move(cap)) {}
    std::string cap_name;
};

struct Caps {
    std::size_t max_fiber_points = 2'000'000;
    std::size_t max_basis_elements = 2'000'000;
    std::optional<std::size_t> max_r;
    std::optional<std::chrono::seconds> time_limit;
};

/// Wall-clock budget shared by the stages of one computation.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(std::optional<std::chrono::seconds> limit) {
        if (limit) end_ = std::chrono::steady_clock::now() + *limit;
    }
    void check(const char* where) const {
        if (end_ && std::chrono::steady_clock::now() > *end_)
            throw cap_exceeded("time-limit", where);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

}  // namespace lawrence

#endif
