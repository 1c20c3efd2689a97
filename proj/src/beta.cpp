#include <algorithm>
#include <cmath>

#include <artin/beta.hpp>
#include <artin/dense_jets.hpp>
#include <artin/errors.hpp>

namespace artin
{

PolySystem PolySystem::from_polynomials(const RingSpec &ring,
                                        const std::vector<std::string> &unknown_names,
                                        const std::vector<Polynomial> &polys)
{
    const std::size_t n_vars = ring.num_vars();
    PolySystem sys{ring, unknown_names, {}};
    for (const auto &p : polys) {
        if (p.names.size() != n_vars + unknown_names.size()) {
            throw precondition_error("polynomial variables do not match ring and unknowns");
        }
        std::map<Polynomial::Exponents, TruncatedSeries> grouped;
        for (const auto &[e, c] : p.terms) {
            Polynomial::Exponents te(e.begin(), e.begin() + long(n_vars));
            Polynomial::Exponents xe(e.begin() + long(n_vars), e.end());
            auto it = grouped.try_emplace(xe, TruncatedSeries(ring)).first;
            it->second.add_term(Monomial(te), ring.field().normalize(c));
        }
        Equation eq;
        for (auto &[xe, coeff] : grouped) {
            if (!coeff.is_zero()) {
                eq.push_back({xe, std::move(coeff)});
            }
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

PolySystem PolySystem::parse(const RingSpec &ring, const std::vector<std::string> &unknown_names,
                             const std::vector<std::string> &equations)
{
    std::vector<std::string> names = ring.var_names();
    names.insert(names.end(), unknown_names.begin(), unknown_names.end());
    std::vector<Polynomial> polys;
    for (const auto &text : equations) {
        polys.push_back(
            parse_polynomial(text, names, ring.field(), ring.num_vars(), ring.trunc()));
    }
    return from_polynomials(ring, unknown_names, polys);
}

std::vector<TruncatedSeries> PolySystem::evaluate(const std::vector<TruncatedSeries> &x) const
{
    if (x.size() != unknowns.size()) {
        throw precondition_error("expected " + std::to_string(unknowns.size()) + " unknowns");
    }
    std::vector<TruncatedSeries> out;
    for (const auto &eq : equations) {
        TruncatedSeries acc(ring);
        for (const auto &t : eq) {
            TruncatedSeries v = t.coefficient;
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (t.unknown_exponents[k] > 0) {
                    v = v * x[k].pow(t.unknown_exponents[k]);
                }
            }
            acc = acc + v;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

namespace
{

using detail::DenseRing;
using detail::Jet;
using detail::pow_mod;

// Affine solution set of J v = rhs over F_p.
struct LinearSolver {
    std::uint64_t p;
    std::vector<std::vector<std::uint64_t>> matrix; // rows = equations
    std::size_t cols;

    std::optional<std::vector<std::uint64_t>> solve(std::vector<std::uint64_t> rhs,
                                                    std::vector<std::vector<std::uint64_t>> *kernel) const
    {
        auto m = matrix;
        const std::size_t rows = m.size();
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t sel = r;
            while (sel < rows && m[sel][c] == 0) {
                ++sel;
            }
            if (sel == rows) {
                continue;
            }
            std::swap(m[sel], m[r]);
            std::swap(rhs[sel], rhs[r]);
            const std::uint64_t inv = pow_mod(m[r][c], p - 2, p);
            for (auto &v : m[r]) {
                v = v * inv % p;
            }
            rhs[r] = rhs[r] * inv % p;
            for (std::size_t o = 0; o < rows; ++o) {
                if (o != r && m[o][c] != 0) {
                    const std::uint64_t f = m[o][c];
                    for (std::size_t k = 0; k < cols; ++k) {
                        m[o][k] = (m[o][k] + (p - f) * m[r][k]) % p;
                    }
                    rhs[o] = (rhs[o] + (p - f) * rhs[r]) % p;
                }
            }
            pivots.push_back(c);
            ++r;
        }
        for (std::size_t o = r; o < rows; ++o) {
            if (rhs[o] != 0) {
                return std::nullopt;
            }
        }
        std::vector<std::uint64_t> sol(cols, 0);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            sol[pivots[k]] = rhs[k];
        }
        if (kernel) {
            kernel->clear();
            for (std::size_t c = 0; c < cols; ++c) {
                if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) {
                    continue;
                }
                std::vector<std::uint64_t> v(cols, 0);
                v[c] = 1;
                for (std::size_t k = 0; k < pivots.size(); ++k) {
                    v[pivots[k]] = (p - m[k][c]) % p;
                }
                kernel->push_back(std::move(v));
            }
        }
        return sol;
    }
};

class BetaSearch
{
public:
    BetaSearch(const PolySystem &sys, unsigned i, double budget)
        : sys_(sys), ring_(sys.ring), i_(i), budget_(budget), n_(sys.unknowns.size())
    {
        for (const auto &eq : sys.equations) {
            std::vector<DenseTerm> terms;
            for (const auto &t : eq) {
                terms.push_back({t.unknown_exponents, ring_.from_series(t.coefficient)});
            }
            equations_.push_back(std::move(terms));
        }
    }

    BetaResult run()
    {
        const unsigned trunc = sys_.ring.trunc();
        const unsigned top = std::min(i_, trunc);
        const std::size_t per_unknown = ring_.end_of(top);
        const std::size_t digits = per_unknown * n_;
        const double p = double(ring_.p());
        BetaResult res;
        res.i = i_;
        res.state_space = std::pow(p, double(digits));
        if (res.state_space > budget_) {
            throw budget_exceeded("beta search over " + count_text(res.state_space)
                                      + " jet classes exceeds budget " + count_text(budget_),
                                  res.state_space);
        }
        x_.assign(n_, Jet(ring_.size(), 0));
        std::vector<std::uint64_t> odo(digits, 0);
        bool best_set = false;
        while (true) {
            for (std::size_t k = 0; k < n_; ++k) {
                std::fill(x_[k].begin(), x_[k].end(), 0);
                for (std::size_t idx = 0; idx < per_unknown; ++idx) {
                    x_[k][idx] = odo[k * per_unknown + idx];
                }
            }
            ++res.classes;
            const std::optional<unsigned> v = classify(top);
            if (!v) {
                ++res.good_classes;
            } else if (!best_set || *v > res.beta) {
                best_set = true;
                res.beta = *v;
                std::vector<TruncatedSeries> jet;
                for (const auto &xk : x_) {
                    jet.push_back(ring_.to_series(sys_.ring, xk).jet_below(top + 1));
                }
                res.worst_class = jet;
                if (res.beta >= trunc) {
                    break;
                }
            }
            std::size_t k = 0;
            while (k < digits && ++odo[k] == ring_.p()) {
                odo[k++] = 0;
            }
            if (k == digits) {
                break;
            }
        }
        res.nodes = nodes_;
        return res;
    }

private:
    struct DenseTerm {
        Polynomial::Exponents exps;
        Jet coeff;
    };

    std::vector<Jet> evaluate(unsigned limit) const
    {
        std::vector<Jet> out;
        for (const auto &eq : equations_) {
            Jet acc(ring_.size(), 0);
            for (const auto &t : eq) {
                Jet v = t.coeff;
                for (std::size_t k = 0; k < n_; ++k) {
                    for (unsigned e = 0; e < t.exps[k]; ++e) {
                        v = ring_.mul(v, x_[k], limit);
                    }
                }
                const std::size_t end = ring_.end_of(limit);
                for (std::size_t idx = 0; idx < end; ++idx) {
                    acc[idx] = (acc[idx] + v[idx]) % ring_.p();
                }
            }
            out.push_back(std::move(acc));
        }
        return out;
    }

    unsigned order(const std::vector<Jet> &vals, unsigned limit) const
    {
        unsigned o = limit + 1;
        for (const auto &v : vals) {
            o = std::min(o, ring_.order(v, limit));
        }
        return o;
    }

    // Constant-term Jacobian of the system at the constant parts of x.
    LinearSolver jacobian() const
    {
        const std::uint64_t p = ring_.p();
        LinearSolver js{p, {}, n_};
        for (const auto &eq : equations_) {
            std::vector<std::uint64_t> row(n_, 0);
            for (const auto &t : eq) {
                if (t.coeff[0] == 0) {
                    continue;
                }
                for (std::size_t k = 0; k < n_; ++k) {
                    if (t.exps[k] == 0) {
                        continue;
                    }
                    std::uint64_t v = t.coeff[0] * (t.exps[k] % p) % p;
                    for (std::size_t l = 0; l < n_; ++l) {
                        const unsigned e = t.exps[l] - (l == k ? 1 : 0);
                        v = v * pow_mod(x_[l][0], e, p) % p;
                    }
                    row[k] = (row[k] + v) % p;
                }
            }
            js.matrix.push_back(std::move(row));
        }
        return js;
    }

    // Empty for a class containing an exact solution, else the largest
    // order of f(x) over the class.
    std::optional<unsigned> classify(unsigned top)
    {
        const unsigned trunc = sys_.ring.trunc();
        const unsigned o = order(evaluate(top), top);
        if (top >= trunc) {
            return o > trunc ? std::nullopt : std::optional<unsigned>(o);
        }
        if (o <= top) {
            return o;
        }
        jac_ = jacobian();
        jac_zero_ = std::all_of(jac_.matrix.begin(), jac_.matrix.end(), [](const auto &row) {
            return std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; });
        });
        return descend(top + 1);
    }

    std::optional<unsigned> descend(unsigned d)
    {
        if (++nodes_ > budget_) {
            throw budget_exceeded("beta search exceeded " + count_text(budget_) + " nodes",
                                  double(nodes_));
        }
        const unsigned trunc = sys_.ring.trunc();
        const std::uint64_t p = ring_.p();
        const std::vector<Jet> vals = evaluate(d);
        const auto &table = ring_.table();
        const std::size_t lo = table.degree_offset(d);
        const std::size_t cnt = table.degree_count(d);

        bool rhs_zero = true;
        std::vector<std::vector<std::uint64_t>> particular;
        std::vector<std::vector<std::uint64_t>> kernel;
        bool solvable = true;
        for (std::size_t m = 0; m < cnt; ++m) {
            std::vector<std::uint64_t> rhs;
            for (const auto &v : vals) {
                rhs.push_back((p - v[lo + m]) % p);
                rhs_zero = rhs_zero && v[lo + m] == 0;
            }
            auto sol = jac_.solve(rhs, m == 0 ? &kernel : nullptr);
            if (!sol) {
                solvable = false;
                break;
            }
            particular.push_back(std::move(*sol));
        }
        std::optional<unsigned> best;
        if (!(jac_zero_ && rhs_zero)) {
            best = d;
        }
        if (!solvable) {
            return best;
        }
        if (d == trunc) {
            return std::nullopt;
        }
        const std::size_t free = cnt * kernel.size();
        std::vector<std::uint64_t> odo(free, 0);
        std::optional<unsigned> result = best;
        while (true) {
            for (std::size_t m = 0; m < cnt; ++m) {
                for (std::size_t k = 0; k < n_; ++k) {
                    std::uint64_t v = particular[m][k];
                    for (std::size_t b = 0; b < kernel.size(); ++b) {
                        v = (v + odo[m * kernel.size() + b] * kernel[b][k]) % p;
                    }
                    x_[k][lo + m] = v;
                }
            }
            const std::optional<unsigned> child = descend(d + 1);
            if (!child) {
                result = std::nullopt;
                break;
            }
            result = std::max(result.value_or(0), *child);
            std::size_t k = 0;
            while (k < free && ++odo[k] == p) {
                odo[k++] = 0;
            }
            if (k == free) {
                break;
            }
        }
        for (std::size_t k = 0; k < n_; ++k) {
            std::fill(x_[k].begin() + long(lo), x_[k].begin() + long(lo + cnt), 0);
        }
        return result;
    }

    const PolySystem &sys_;
    DenseRing ring_;
    unsigned i_;
    double budget_;
    std::size_t n_;
    std::vector<std::vector<DenseTerm>> equations_;
    std::vector<Jet> x_;
    LinearSolver jac_;
    bool jac_zero_ = false;
    std::size_t nodes_ = 0;
};

} // namespace

BetaResult beta_lower_bound_bruteforce(const PolySystem &system, unsigned i, double budget)
{
    if (!system.ring.field().is_prime_field()) {
        throw precondition_error("exhaustive search requires a prime field");
    }
    if (system.unknowns.empty() || system.equations.empty()) {
        throw precondition_error("system needs unknowns and equations");
    }
    if (i > system.ring.trunc()) {
        throw precondition_error("i exceeds truncation");
    }
    return BetaSearch(system, i, budget).run();
}

} // namespace artin
