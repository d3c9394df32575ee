#ifndef WICKS_ERRORS_HPP
#define WICKS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wicks {

// Domain error hierarchy. Every throwing operation documents which of these
// it can raise; diagnostic (report-style) operations never throw.

struct MalformedWord : std::runtime_error {
    explicit MalformedWord(const std::string& msg) : std::runtime_error(msg) {}
};

struct OrientationError : std::runtime_error {
    int letter_id;
    OrientationError(const std::string& msg, int id)
        : std::runtime_error(msg), letter_id(id) {}
};

struct GenusMismatch : std::runtime_error {
    explicit GenusMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonIntegerGenus : std::runtime_error {
    explicit NonIntegerGenus(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadSite : std::runtime_error {
    explicit BadSite(const std::string& msg) : std::runtime_error(msg) {}
};

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoSuchAutomorphism : std::runtime_error {
    explicit NoSuchAutomorphism(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonInteger : std::runtime_error {
    explicit NonInteger(const std::string& msg) : std::runtime_error(msg) {}
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalOverflow : std::runtime_error {
    explicit NumericalOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositive : std::runtime_error {
    explicit NonPositive(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wicks

#endif
