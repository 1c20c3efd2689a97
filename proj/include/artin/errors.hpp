#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace artin
{

// Raised when an operation's input violates a documented precondition.
class precondition_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive search would exceed the configured budget.
class budget_exceeded : public std::runtime_error
{
public:
    budget_exceeded(const std::string &what, double state_space)
        : std::runtime_error(what), state_space_(state_space)
    {
    }

    double state_space() const noexcept
    {
        return state_space_;
    }

private:
    double state_space_;
};

// A count or budget for messages: "1024", "2.5e+20".
inline std::string count_text(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace artin
