#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <artin/field.hpp>

namespace artin
{

// Exponent vector of a monomial T1^e1 ... TN^eN.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> exponents);

    static Monomial one(std::size_t num_vars)
    {
        return Monomial(std::vector<std::uint16_t>(num_vars, 0));
    }
    static Monomial variable(std::size_t num_vars, std::size_t index, unsigned power = 1);

    const std::vector<std::uint16_t> &exponents() const noexcept
    {
        return exps_;
    }
    unsigned degree() const noexcept
    {
        return degree_;
    }
    std::size_t num_vars() const noexcept
    {
        return exps_.size();
    }
    std::uint16_t operator[](std::size_t i) const
    {
        return exps_[i];
    }

    Monomial operator*(const Monomial &other) const;
    bool divides(const Monomial &other) const;
    // Requires divides(other).
    Monomial quotient_of(const Monomial &other) const;

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::uint16_t> exps_;
    unsigned degree_ = 0;
};

// Graded order used for every iteration and for printing: ascending total
// degree, then lexicographic with T1 > T2 > ... inside one degree.
struct GradedLess {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const noexcept;
};

// All monomials of degree <= D in N variables, in GradedLess order.
class MonomialTable
{
public:
    MonomialTable(std::size_t num_vars, unsigned trunc);

    std::size_t size() const noexcept
    {
        return monomials_.size();
    }
    const Monomial &operator[](std::size_t idx) const
    {
        return monomials_[idx];
    }
    std::size_t index_of(const Monomial &m) const;
    // Number of monomials of degree < d.
    std::size_t degree_offset(unsigned d) const
    {
        return offsets_[d];
    }
    // Number of monomials of degree exactly d.
    std::size_t degree_count(unsigned d) const
    {
        return offsets_[d + 1] - offsets_[d];
    }
    unsigned trunc() const noexcept
    {
        return trunc_;
    }

    // Shared table for (N, D); built once per process.
    static const MonomialTable &get(std::size_t num_vars, unsigned trunc);

private:
    unsigned trunc_;
    std::vector<Monomial> monomials_;
    std::vector<std::size_t> offsets_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// The ambient truncated local ring k[T1..TN]/m^(D+1). Cheap to copy.
class RingSpec
{
public:
    RingSpec(std::size_t num_vars, Field field, unsigned trunc);
    RingSpec(std::vector<std::string> var_names, Field field, unsigned trunc);

    std::size_t num_vars() const noexcept
    {
        return data_->names.size();
    }
    const Field &field() const noexcept
    {
        return data_->field;
    }
    unsigned trunc() const noexcept
    {
        return data_->trunc;
    }
    const std::vector<std::string> &var_names() const noexcept
    {
        return data_->names;
    }
    // Built on first use; throws when the coefficient space is unreasonably large.
    const MonomialTable &monomials() const;

    friend bool operator==(const RingSpec &a, const RingSpec &b)
    {
        return a.data_ == b.data_
               || (a.data_->names == b.data_->names && a.data_->field == b.data_->field
                   && a.data_->trunc == b.data_->trunc);
    }

private:
    struct Data {
        std::vector<std::string> names;
        Field field;
        unsigned trunc;
    };
    std::shared_ptr<const Data> data_;
};

std::vector<std::string> default_var_names(std::size_t n);

// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned n, unsigned k);

} // namespace artin
