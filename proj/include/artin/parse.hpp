#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <artin/errors.hpp>
#include <artin/series.hpp>

namespace artin
{

class parse_error : public precondition_error
{
public:
    parse_error(const std::string &msg, std::size_t position)
        : precondition_error(msg + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept
    {
        return position_;
    }

private:
    std::size_t position_;
};

// Exact polynomial in named variables. Terms whose degree in the first
// `truncated_vars` variables exceeds `trunc` are dropped.
struct Polynomial {
    using Exponents = std::vector<std::uint16_t>;

    std::vector<std::string> names;
    Field field;
    std::size_t truncated_vars = 0;
    std::optional<unsigned> trunc;
    std::map<Exponents, Scalar> terms;
};

// Grammar: integers, identifiers from `names`, + - * / ^, parentheses, unary
// minus. Division is only by nonzero constants; exponents are nonnegative
// integers.
Polynomial parse_polynomial(const std::string &text, const std::vector<std::string> &names,
                            const Field &field, std::size_t truncated_vars = 0,
                            std::optional<unsigned> trunc = std::nullopt);

TruncatedSeries parse_poly(const std::string &text, const RingSpec &ring);

// "a;b;c" or "a,b,c"; separators inside () or [] are kept.
std::vector<std::string> split_list(const std::string &text);

// Sparse, GradedLess order, explicit coefficients: "T1^2*T2 + 3*T3", "0".
std::string format_series(const TruncatedSeries &s);

} // namespace artin
