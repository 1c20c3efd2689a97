#include <artin/errors.hpp>
#include <artin/field.hpp>

namespace artin
{

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p)) {
        throw precondition_error("field characteristic must be 0 or a prime below 2^31, got "
                                 + std::to_string(p));
    }
    return Field(p);
}

namespace
{

Scalar reduce_int(const mpz_class &v, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return Scalar(r);
}

} // namespace

Scalar Field::from_int(long v) const
{
    return from_mpz(mpz_class(v));
}

Scalar Field::from_mpz(const mpz_class &v) const
{
    if (p_ == 0) {
        return Scalar(v);
    }
    return reduce_int(v, p_);
}

Scalar Field::normalize(const Scalar &v) const
{
    if (p_ == 0) {
        Scalar r(v);
        r.canonicalize();
        return r;
    }
    const Scalar num = reduce_int(v.get_num(), p_);
    const Scalar den = reduce_int(v.get_den(), p_);
    if (is_zero(den)) {
        throw precondition_error("denominator " + v.get_den().get_str() + " is not invertible mod "
                                 + std::to_string(p_));
    }
    return mul(num, inv(den));
}

Scalar Field::add(const Scalar &a, const Scalar &b) const
{
    if (p_ == 0) {
        return a + b;
    }
    mpz_class s = a.get_num() + b.get_num();
    if (s >= p_) {
        s -= p_;
    }
    return Scalar(s);
}

Scalar Field::sub(const Scalar &a, const Scalar &b) const
{
    if (p_ == 0) {
        return a - b;
    }
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0) {
        s += p_;
    }
    return Scalar(s);
}

Scalar Field::mul(const Scalar &a, const Scalar &b) const
{
    if (p_ == 0) {
        return a * b;
    }
    return reduce_int(a.get_num() * b.get_num(), p_);
}

Scalar Field::neg(const Scalar &a) const
{
    if (p_ == 0) {
        return -a;
    }
    if (is_zero(a)) {
        return a;
    }
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar &a) const
{
    if (is_zero(a)) {
        throw std::domain_error("division by zero in field");
    }
    if (p_ == 0) {
        return 1 / a;
    }
    mpz_class r;
    const mpz_class mod(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
    return Scalar(r);
}

Scalar Field::display_value(const Scalar &a) const
{
    if (p_ == 0) {
        return a;
    }
    if (a.get_num() > p_ / 2) {
        return Scalar(a.get_num() - p_);
    }
    return a;
}

std::string Field::to_string(const Scalar &a) const
{
    return display_value(a).get_str();
}

} // namespace artin
