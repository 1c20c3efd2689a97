#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <artin/series.hpp>

namespace artin::detail
{

using Jet = std::vector<std::uint64_t>;

// Dense arithmetic in F_p[T]/m^(D+1), indexed by the monomial table.
class DenseRing
{
public:
    explicit DenseRing(const RingSpec &ring)
        : table_(ring.monomials()), p_(ring.field().characteristic()), trunc_(ring.trunc()),
          size_(table_.size()), product_(size_ * size_, -1)
    {
        for (std::size_t a = 0; a < size_; ++a) {
            for (std::size_t b = 0; b < size_; ++b) {
                if (table_[a].degree() + table_[b].degree() <= trunc_) {
                    product_[a * size_ + b] = long(table_.index_of(table_[a] * table_[b]));
                }
            }
        }
    }

    std::size_t size() const
    {
        return size_;
    }
    std::uint64_t p() const
    {
        return p_;
    }
    const MonomialTable &table() const
    {
        return table_;
    }
    // First index of degree > limit.
    std::size_t end_of(unsigned limit) const
    {
        return table_.degree_offset(std::min(limit, trunc_) + 1);
    }

    Jet from_series(const TruncatedSeries &s) const
    {
        Jet j(size_, 0);
        for (const auto &[m, c] : s.terms()) {
            j[table_.index_of(m)] = c.get_num().get_ui();
        }
        return j;
    }
    TruncatedSeries to_series(const RingSpec &ring, const Jet &j) const
    {
        TruncatedSeries s(ring);
        for (std::size_t k = 0; k < size_; ++k) {
            if (j[k] != 0) {
                s.add_term(table_[k], ring.field().from_int(long(j[k])));
            }
        }
        return s;
    }

    Jet mul(const Jet &a, const Jet &b, unsigned limit) const
    {
        Jet out(size_, 0);
        const std::size_t end = end_of(limit);
        for (std::size_t ia = 0; ia < end; ++ia) {
            if (a[ia] == 0) {
                continue;
            }
            const unsigned da = table_[ia].degree();
            const std::size_t end_b = end_of(limit - da);
            for (std::size_t ib = 0; ib < end_b; ++ib) {
                if (b[ib] != 0) {
                    const std::size_t k = std::size_t(product_[ia * size_ + ib]);
                    out[k] = (out[k] + a[ia] * b[ib]) % p_;
                }
            }
        }
        return out;
    }

    // Lowest degree of a nonzero entry up to limit, or limit+1.
    unsigned order(const Jet &a, unsigned limit) const
    {
        const std::size_t end = end_of(limit);
        for (std::size_t k = 0; k < end; ++k) {
            if (a[k] != 0) {
                return table_[k].degree();
            }
        }
        return limit + 1;
    }

private:
    const MonomialTable &table_;
    std::uint64_t p_;
    unsigned trunc_;
    std::size_t size_;
    std::vector<long> product_;
};

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1u) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1u;
    }
    return r;
}

} // namespace artin::detail
