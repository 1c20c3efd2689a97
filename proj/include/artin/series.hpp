#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <artin/ring.hpp>

namespace artin
{

// An order value: either exact, or "at least D+1" (which covers infinity,
// e.g. the order of zero in the truncated algebra).
class ExtOrder
{
public:
    static ExtOrder exact(unsigned n)
    {
        return ExtOrder(true, n);
    }
    static ExtOrder at_least(unsigned n)
    {
        return ExtOrder(false, n);
    }

    bool is_exact() const noexcept
    {
        return exact_;
    }
    // The exact value, or the lower bound for an AtLeast order.
    unsigned value() const noexcept
    {
        return value_;
    }

    // AtLeast absorbs: AtLeast(n) + x = AtLeast(n).
    friend ExtOrder operator+(const ExtOrder &a, const ExtOrder &b);

    friend bool operator==(const ExtOrder &, const ExtOrder &) = default;
    friend std::strong_ordering operator<=>(const ExtOrder &a, const ExtOrder &b);

    // "3" or ">=9".
    std::string to_string() const;

private:
    ExtOrder(bool exact, unsigned v) : exact_(exact), value_(v) {}

    bool exact_;
    unsigned value_;
};

// Element of k[T1..TN]/m^(D+1): a sparse map from monomials of degree <= D to
// nonzero coefficients. Values are immutable once built; all operations
// return new series.
class TruncatedSeries
{
public:
    using TermMap = std::map<Monomial, Scalar, GradedLess>;

    explicit TruncatedSeries(RingSpec ring) : ring_(std::move(ring)) {}

    static TruncatedSeries constant(const RingSpec &ring, const Scalar &c);
    static TruncatedSeries constant(const RingSpec &ring, long c)
    {
        return constant(ring, ring.field().from_int(c));
    }
    static TruncatedSeries variable(const RingSpec &ring, std::size_t index);
    static TruncatedSeries term(const RingSpec &ring, const Monomial &m, const Scalar &c);

    const RingSpec &ring() const noexcept
    {
        return ring_;
    }
    const TermMap &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    // Coefficient of m (zero when absent).
    Scalar coefficient(const Monomial &m) const;

    // Adds c*m in place; drops the term when it exceeds the truncation.
    void add_term(const Monomial &m, const Scalar &c);

    TruncatedSeries operator+(const TruncatedSeries &other) const;
    TruncatedSeries operator-(const TruncatedSeries &other) const;
    TruncatedSeries operator*(const TruncatedSeries &other) const;
    TruncatedSeries operator-() const;
    TruncatedSeries scaled(const Scalar &c) const;
    TruncatedSeries times_monomial(const Monomial &m) const;

    // a^0 = 1.
    TruncatedSeries pow(unsigned e) const;

    // Minimal total degree of a stored term; AtLeast(D+1) for zero.
    ExtOrder ord() const;
    // Degree-d terms only. Requires d <= D.
    TruncatedSeries homogeneous_part(unsigned d) const;
    // Lowest-degree homogeneous part. Throws for zero.
    TruncatedSeries initial_form() const;
    // Terms of degree < d (the class modulo m^d).
    TruncatedSeries jet_below(unsigned d) const;
    // Highest degree of a stored term (0 for zero).
    unsigned max_degree() const;

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const TruncatedSeries &other) const;

    RingSpec ring_;
    TermMap terms_;
};

// Minimal order over the components of a vector (AtLeast(D+1) if all zero).
ExtOrder vector_ord(const std::vector<TruncatedSeries> &v);

} // namespace artin
