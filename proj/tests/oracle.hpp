#pragma once

// Independent reference computations for the tests: dense matrices, their own
// monomial enumeration and Gaussian elimination. Nothing here touches the
// echelon or subspace code of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include <artin/series.hpp>

namespace oracle
{

using Exps = std::vector<int>;

struct Column {
    std::size_t component;
    Exps exps;
    int degree;
    bool operator<(const Column &o) const
    {
        return std::tie(component, exps) < std::tie(o.component, o.exps);
    }
};

inline void enumerate(int nvars, int max_deg, Exps &cur, int pos, int used, std::vector<Exps> &out)
{
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; used + e <= max_deg; ++e) {
        cur[pos] = e;
        enumerate(nvars, max_deg, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

inline std::vector<Exps> all_monomials(int nvars, int max_deg)
{
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    enumerate(nvars, max_deg, cur, 0, 0, out);
    return out;
}

inline int degree(const Exps &e)
{
    int d = 0;
    for (int x : e) {
        d += x;
    }
    return d;
}

// Vectors of truncated polynomials as exponent maps over Q or F_p.
using Poly = std::map<Exps, mpq_class>;
using PolyVec = std::vector<Poly>;

inline Poly from_series(const artin::TruncatedSeries &s)
{
    Poly p;
    for (const auto &[m, c] : s.terms()) {
        p[Exps(m.exponents().begin(), m.exponents().end())] = c;
    }
    return p;
}

inline PolyVec from_series(const std::vector<artin::TruncatedSeries> &v)
{
    PolyVec out;
    for (const auto &s : v) {
        out.push_back(from_series(s));
    }
    return out;
}

class Ambient
{
public:
    Ambient(int nvars, int trunc, std::size_t arity, std::uint32_t p = 0)
        : nvars_(nvars), trunc_(trunc), arity_(arity), p_(p)
    {
        for (std::size_t c = 0; c < arity; ++c) {
            for (const auto &e : all_monomials(nvars, trunc)) {
                index_[{c, e, degree(e)}] = cols_.size();
                cols_.push_back({c, e, degree(e)});
            }
        }
    }

    int trunc() const
    {
        return trunc_;
    }
    int nvars() const
    {
        return nvars_;
    }

    mpq_class reduce(mpq_class v) const
    {
        if (p_ == 0) {
            return v;
        }
        mpz_class num = v.get_num() % p_;
        mpz_class den = v.get_den() % p_;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
        mpz_class r = (num * inv) % p_;
        if (r < 0) {
            r += p_;
        }
        return mpq_class(r);
    }

    std::vector<mpq_class> dense(const PolyVec &v) const
    {
        std::vector<mpq_class> row(cols_.size(), 0);
        for (std::size_t c = 0; c < v.size(); ++c) {
            for (const auto &[e, coef] : v[c]) {
                if (degree(e) <= trunc_) {
                    row[index_.at({c, e, degree(e)})] += coef;
                }
            }
        }
        for (auto &x : row) {
            x = reduce(x);
        }
        return row;
    }

    // u * v for a monomial u, truncated.
    PolyVec shift(const PolyVec &v, const Exps &u) const
    {
        PolyVec out(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) {
            for (const auto &[e, coef] : v[c]) {
                Exps s(e);
                for (int k = 0; k < nvars_; ++k) {
                    s[k] += u[k];
                }
                if (degree(s) <= trunc_) {
                    out[c][s] += coef;
                }
            }
        }
        return out;
    }

    // Spanning set of m^j * M as dense rows.
    std::vector<std::vector<mpq_class>> module_rows(const std::vector<PolyVec> &gens, int j) const
    {
        std::vector<std::vector<mpq_class>> rows;
        for (const auto &u : all_monomials(nvars_, trunc_)) {
            if (degree(u) < j) {
                continue;
            }
            for (const auto &g : gens) {
                rows.push_back(dense(shift(g, u)));
            }
        }
        return rows;
    }

    // Rank of the rows restricted to columns of degree < below.
    std::size_t rank_below(std::vector<std::vector<mpq_class>> rows, int below) const
    {
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            if (cols_[k].degree < below) {
                keep.push_back(k);
            }
        }
        std::size_t rank = 0;
        for (std::size_t kc : keep) {
            std::size_t piv = rank;
            while (piv < rows.size() && rows[piv][kc] == 0) {
                ++piv;
            }
            if (piv == rows.size()) {
                continue;
            }
            std::swap(rows[piv], rows[rank]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][kc] == 0) {
                    continue;
                }
                const mpq_class factor = rows[r][kc] / rows[rank][kc];
                for (std::size_t k : keep) {
                    rows[r][k] = reduce(rows[r][k] - factor * rows[rank][k]);
                }
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank(const std::vector<std::vector<mpq_class>> &rows) const
    {
        return rank_below(rows, trunc_ + 1);
    }

    // dim(X ∩ m^i) = dim X - rank of X projected to degrees < i.
    std::size_t dim_cap_m_power(const std::vector<std::vector<mpq_class>> &rows, int i) const
    {
        return rank(rows) - rank_below(rows, i);
    }

private:
    int nvars_;
    int trunc_;
    std::size_t arity_;
    std::uint32_t p_;
    std::vector<Column> cols_;
    std::map<Column, std::size_t> index_;
};

// max { n <= D+1 : x in I + m^n }.
inline int nu(const Ambient &amb, const std::vector<Poly> &ideal, const Poly &x)
{
    std::vector<PolyVec> gens;
    for (const auto &g : ideal) {
        gens.push_back({g});
    }
    auto rows = amb.module_rows(gens, 0);
    auto with_x = rows;
    with_x.push_back(amb.dense({x}));
    for (int n = amb.trunc() + 1; n >= 0; --n) {
        if (amb.rank_below(with_x, n) == amb.rank_below(rows, n)) {
            return n;
        }
    }
    return 0;
}

// Artin-Rees index by sweeping every i <= cert and every j <= i:
// M ∩ m^i ⊆ m^j M exactly when both intersections with m^i have equal dimension.
inline int ar_index(const Ambient &amb, const std::vector<PolyVec> &gens, int cert)
{
    const auto full = amb.module_rows(gens, 0);
    std::vector<std::vector<std::vector<mpq_class>>> powers;
    for (int j = 0; j <= cert; ++j) {
        powers.push_back(amb.module_rows(gens, j));
    }
    int i0 = 0;
    for (int i = 0; i <= cert; ++i) {
        const std::size_t target = amb.dim_cap_m_power(full, i);
        int best = 0;
        for (int j = 0; j <= i; ++j) {
            if (amb.dim_cap_m_power(powers[j], i) == target) {
                best = j;
            }
        }
        i0 = std::max(i0, i - best);
    }
    return i0;
}

} // namespace oracle
