#pragma once

#include <stdexcept>
#include <string>

namespace rislink {

// Malformed numeric input: non-finite values, zero sizes, dimension mismatches.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is finite but outside the validity range of an empirical model.
class OutOfModelRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A channel coefficient is exactly zero, so no phase can be aligned to it.
class DegenerateChannel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hardware cost of the requested elements exceeds the RIS power budget.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad or incomplete experiment configuration. Carries the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace rislink
