#include <cmath>

#include <artin/errors.hpp>
#include <artin/sampling.hpp>

namespace artin
{

long uniform_int(Rng &rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

TruncatedSeries random_series(const RingSpec &ring, unsigned min_deg, unsigned max_deg, Rng &rng,
                              long height, double density)
{
    const auto &table = ring.monomials();
    max_deg = std::min(max_deg, ring.trunc());
    TruncatedSeries s(ring);
    if (min_deg > max_deg) {
        return s;
    }
    std::bernoulli_distribution keep(density);
    const std::size_t lo = table.degree_offset(min_deg);
    const std::size_t hi = table.degree_offset(max_deg + 1);
    while (s.is_zero()) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            if (!keep(rng)) {
                continue;
            }
            const long c = uniform_int(rng, -height, height);
            if (c != 0) {
                s.add_term(table[idx], ring.field().from_int(c));
            }
        }
    }
    return s;
}

std::vector<TruncatedSeries> monomial_elements(const RingSpec &ring, unsigned lo, unsigned hi)
{
    const auto &table = ring.monomials();
    hi = std::min(hi, ring.trunc());
    std::vector<TruncatedSeries> out;
    if (lo > hi) {
        return out;
    }
    const Scalar one = ring.field().from_int(1);
    for (std::size_t idx = table.degree_offset(lo); idx < table.degree_offset(hi + 1); ++idx) {
        out.push_back(TruncatedSeries::term(ring, table[idx], one));
    }
    return out;
}

std::vector<TruncatedSeries> projective_elements(const RingSpec &ring, unsigned lo, unsigned hi,
                                                 double budget)
{
    const Field &field = ring.field();
    if (!field.is_prime_field()) {
        throw precondition_error("exhaustive sampling requires a prime field");
    }
    const auto &table = ring.monomials();
    hi = std::min(hi, ring.trunc());
    if (lo > hi) {
        return {};
    }
    const std::size_t first = table.degree_offset(lo);
    const std::size_t count = table.degree_offset(hi + 1) - first;
    const std::uint32_t p = field.characteristic();
    const double total = (std::pow(double(p), double(count)) - 1) / (p - 1);
    if (total > budget) {
        throw budget_exceeded("exhaustive sampling needs " + count_text(total)
                                  + " elements, budget is " + count_text(budget),
                              total);
    }
    std::vector<TruncatedSeries> out;
    // Leading position `lead` has coefficient 1; positions after it are free.
    for (std::size_t lead = 0; lead < count; ++lead) {
        const std::size_t free = count - lead - 1;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            TruncatedSeries s(ring);
            s.add_term(table[first + lead], field.from_int(1));
            for (std::size_t k = 0; k < free; ++k) {
                if (digits[k] != 0) {
                    s.add_term(table[first + lead + 1 + k], field.from_int(digits[k]));
                }
            }
            out.push_back(std::move(s));
            std::size_t k = 0;
            while (k < free && ++digits[k] == p) {
                digits[k++] = 0;
            }
            if (k == free) {
                break;
            }
        }
    }
    return out;
}

} // namespace artin
