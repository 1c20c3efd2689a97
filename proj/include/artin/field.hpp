#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace artin
{

// Field elements are always mpq_class. Over F_p they are kept as integers in
// [0, p); over Q they are canonical rationals.
using Scalar = mpq_class;

// Coefficient field: the rationals (characteristic 0) or a prime field F_p
// with p < 2^31.
class Field
{
public:
    Field() = default;

    static Field rationals()
    {
        return Field{};
    }
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const noexcept
    {
        return p_;
    }
    bool is_prime_field() const noexcept
    {
        return p_ != 0;
    }

    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class &v) const;
    // Brings an arbitrary rational into canonical form for this field.
    // Throws if the denominator is not invertible mod p.
    Scalar normalize(const Scalar &v) const;

    Scalar add(const Scalar &a, const Scalar &b) const;
    Scalar sub(const Scalar &a, const Scalar &b) const;
    Scalar mul(const Scalar &a, const Scalar &b) const;
    Scalar neg(const Scalar &a) const;
    Scalar inv(const Scalar &a) const;

    static bool is_zero(const Scalar &a)
    {
        return sgn(a) == 0;
    }

    // Symmetric integer representative over F_p, the rational itself over Q.
    Scalar display_value(const Scalar &a) const;
    std::string to_string(const Scalar &a) const;

    friend bool operator==(const Field &, const Field &) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}

    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

} // namespace artin
