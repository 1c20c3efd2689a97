#include <algorithm>
#include <set>

#include <artin/errors.hpp>
#include <artin/solvers.hpp>
#include <artin/subspace.hpp>

namespace artin
{

namespace
{

TruncatedSeries dot(const std::vector<TruncatedSeries> &f, const std::vector<TruncatedSeries> &x)
{
    TruncatedSeries s(f.front().ring());
    for (std::size_t j = 0; j < f.size(); ++j) {
        s = s + f[j] * x[j];
    }
    return s;
}

} // namespace

bool monomial_regular(const std::vector<TruncatedSeries> &f)
{
    std::set<std::size_t> used;
    for (const auto &g : f) {
        if (g.is_zero()) {
            return false;
        }
        const TruncatedSeries in = g.initial_form();
        if (in.terms().size() != 1) {
            return false;
        }
        const Monomial &m = in.terms().begin()->first;
        for (std::size_t v = 0; v < m.num_vars(); ++v) {
            if (m[v] > 0 && !used.insert(v).second) {
                return false;
            }
        }
    }
    return true;
}

SolveCertificate solve_linear_regular(const std::vector<TruncatedSeries> &f,
                                      const std::vector<TruncatedSeries> &x, unsigned i,
                                      bool assume_regular)
{
    if (f.empty()) {
        throw precondition_error("need at least one generator");
    }
    if (f.size() != x.size()) {
        throw precondition_error("arity mismatch: " + std::to_string(f.size()) + " generators, "
                                 + std::to_string(x.size()) + " unknowns");
    }
    const RingSpec &ring = f.front().ring();
    const unsigned trunc = ring.trunc();
    std::vector<unsigned> of;
    for (const auto &g : f) {
        if (!(g.ring() == ring)) {
            throw precondition_error("incompatible rings");
        }
        if (g.is_zero()) {
            throw precondition_error("generators must be nonzero");
        }
        of.push_back(g.ord().value());
    }
    for (const auto &v : x) {
        if (!(v.ring() == ring)) {
            throw precondition_error("incompatible rings");
        }
    }
    if (!std::is_sorted(of.begin(), of.end())) {
        throw precondition_error("generators must be sorted by nondecreasing order");
    }
    const bool checked = monomial_regular(f);
    if (!checked && !assume_regular) {
        throw precondition_error("initial forms are not monomials in disjoint variables; "
                                 "regularity must be asserted");
    }
    const unsigned e = of.back();
    if (i + e > trunc) {
        throw precondition_error("i + ord(f_n) = " + std::to_string(i + e) + " exceeds truncation "
                                 + std::to_string(trunc));
    }
    const unsigned target = i + e + 1;
    const ExtOrder res = dot(f, x).ord();
    if (res.is_exact() && res.value() < target) {
        throw precondition_error("approximation level insufficient: residual order "
                                 + res.to_string() + " < " + std::to_string(target));
    }

    std::vector<TruncatedSeries> initial;
    for (const auto &g : f) {
        initial.push_back(g.initial_form());
    }
    const auto &table = ring.monomials();
    SolveCertificate cert;
    cert.input = x;
    cert.level_i = i;
    cert.regularity_assumed = !checked;

    std::vector<TruncatedSeries> cur = x;
    unsigned last_mu = 0;
    while (true) {
        unsigned mu = trunc + 1;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!cur[j].is_zero()) {
                mu = std::min(mu, of[j] + cur[j].ord().value());
            }
        }
        if (mu >= target) {
            break;
        }
        if (cert.correction_steps > 0 && mu <= last_mu) {
            throw std::logic_error("correction did not raise the order");
        }
        last_mu = mu;
        std::vector<std::size_t> active;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (!cur[j].is_zero() && of[j] + cur[j].ord().value() == mu) {
                active.push_back(j);
            }
        }
        // Unknowns: coefficients of z(a,b), a < b in `active`, homogeneous of
        // degree mu - ord f_a - ord f_b.
        struct Unknown {
            std::size_t a, b;
            const Monomial *u;
        };
        const CoefficientSpace space(ring, active.size());
        std::vector<Unknown> unknowns;
        std::vector<SparseVec> columns;
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const long d = long(mu) - long(of[active[a]]) - long(of[active[b]]);
                if (d < 0) {
                    continue;
                }
                for (std::size_t idx = table.degree_offset(d); idx < table.degree_offset(d + 1);
                     ++idx) {
                    std::vector<TruncatedSeries> col(active.size(), TruncatedSeries(ring));
                    col[b] = initial[active[a]].times_monomial(table[idx]);
                    col[a] = -initial[active[b]].times_monomial(table[idx]);
                    unknowns.push_back({a, b, &table[idx]});
                    columns.push_back(space.encode(col));
                }
            }
        }
        std::vector<TruncatedSeries> rhs;
        for (std::size_t j : active) {
            rhs.push_back(cur[j].homogeneous_part(mu - of[j]));
        }
        const auto sol = solve_combination(ring.field(), space.ncols(), columns, space.encode(rhs));
        if (!sol) {
            throw precondition_error("non-regular initial forms detected at degree "
                                     + std::to_string(mu));
        }
        std::vector<std::vector<TruncatedSeries>> z(
            active.size(), std::vector<TruncatedSeries>(active.size(), TruncatedSeries(ring)));
        for (std::size_t k = 0; k < unknowns.size(); ++k) {
            const auto &unk = unknowns[k];
            z[unk.a][unk.b].add_term(*unk.u, (*sol)[k]);
            z[unk.b][unk.a].add_term(*unk.u, ring.field().neg((*sol)[k]));
        }
        for (std::size_t b = 0; b < active.size(); ++b) {
            TruncatedSeries corr(ring);
            for (std::size_t a = 0; a < active.size(); ++a) {
                if (!z[a][b].is_zero()) {
                    corr = corr + f[active[a]] * z[a][b];
                }
            }
            cur[active[b]] = cur[active[b]] - corr;
        }
        ++cert.correction_steps;
    }

    for (std::size_t j = 0; j < f.size(); ++j) {
        cert.output.push_back(x[j] - cur[j]);
        cert.proximity.push_back(cur[j].ord());
        cert.required_proximity.push_back(i + e - of[j] + 1);
    }
    cert.residual_order = dot(f, cert.output).ord();
    return cert;
}

void check_fx_hy_shape(unsigned k, const TruncatedSeries &f)
{
    const RingSpec &ring = f.ring();
    if (k < 1) {
        throw precondition_error("k must be at least 1");
    }
    if (k + 1 > ring.trunc()) {
        throw precondition_error("k + 1 exceeds truncation");
    }
    const Monomial lead = Monomial::variable(ring.num_vars(), 0, k);
    const TruncatedSeries lead_term = TruncatedSeries::term(ring, lead, ring.field().from_int(1));
    if (!(f.homogeneous_part(k) == lead_term) || f.ord() != ExtOrder::exact(k)) {
        throw precondition_error("f must have initial form T1^" + std::to_string(k));
    }
    const TruncatedSeries g = f - lead_term;
    if (g.ord() != ExtOrder::exact(k + 1)) {
        throw precondition_error("f - T1^k must have order k+1");
    }
    const TruncatedSeries g_initial = g.initial_form();
    const auto &terms = g_initial.terms();
    const bool coprime = std::any_of(terms.begin(), terms.end(),
                                     [](const auto &t) { return t.first[0] == 0; });
    if (!coprime) {
        throw precondition_error("T1 divides the initial form of f - T1^k");
    }
}

DivisionByF divide_by_f(unsigned k, const TruncatedSeries &f, const TruncatedSeries &h)
{
    check_fx_hy_shape(k, f);
    const RingSpec &ring = f.ring();
    const Monomial lead = Monomial::variable(ring.num_vars(), 0, k);
    DivisionByF out{TruncatedSeries(ring), h};
    for (unsigned d = k; d <= ring.trunc(); ++d) {
        TruncatedSeries q(ring);
        const TruncatedSeries part = out.remainder.homogeneous_part(d);
        for (const auto &[m, c] : part.terms()) {
            if (lead.divides(m)) {
                q.add_term(lead.quotient_of(m), c);
            }
        }
        if (!q.is_zero()) {
            out.quotient = out.quotient + q;
            out.remainder = out.remainder - q * f;
        }
    }
    return out;
}

SolveCertificate solve_fx_hy(unsigned k, const TruncatedSeries &f, const TruncatedSeries &h,
                             const TruncatedSeries &x, const TruncatedSeries &y, unsigned i)
{
    const RingSpec &ring = f.ring();
    for (const auto *s : {&h, &x, &y}) {
        if (!(s->ring() == ring)) {
            throw precondition_error("incompatible rings");
        }
    }
    const DivisionByF div = divide_by_f(k, f, h);
    if (div.remainder.is_zero()) {
        throw precondition_error("h lies in (f) at this truncation");
    }
    const TruncatedSeries &hr = div.remainder;
    const unsigned nu_h = hr.ord().value();
    const unsigned bound = i + std::max(k, nu_h + 1);
    if (bound + 1 > ring.trunc()) {
        throw precondition_error("i + max(k, nu(h)+1) + 1 = " + std::to_string(bound + 1)
                                 + " exceeds truncation " + std::to_string(ring.trunc()));
    }
    const ExtOrder res = (f * x + h * y).ord();
    if (res.is_exact() && res.value() < bound + 1) {
        throw precondition_error("approximation level insufficient: residual order "
                                 + res.to_string() + " < " + std::to_string(bound + 1));
    }

    const Monomial lead = Monomial::variable(ring.num_vars(), 0, k);
    const TruncatedSeries hr_initial = hr.initial_form();
    SolveCertificate cert;
    cert.input = {x, y};
    cert.level_i = i;

    TruncatedSeries xc = x + div.quotient * y;
    TruncatedSeries yc = y;
    TruncatedSeries z(ring);
    while (!xc.is_zero() && xc.ord().value() + k < bound + 1) {
        const unsigned ox = xc.ord().value();
        if (yc.is_zero() || yc.ord().value() + nu_h != ox + k) {
            throw precondition_error("elimination failed at degree " + std::to_string(ox)
                                     + ": initial terms do not cancel");
        }
        TruncatedSeries z0(ring);
        const TruncatedSeries y_low = yc.initial_form();
        for (const auto &[m, c] : y_low.terms()) {
            if (!lead.divides(m)) {
                throw precondition_error("elimination failed at degree " + std::to_string(ox)
                                         + ": T1^k does not divide the initial form of y");
            }
            z0.add_term(lead.quotient_of(m), ring.field().neg(c));
        }
        if (!(xc.homogeneous_part(ox) == hr_initial * z0)) {
            throw precondition_error("elimination failed at degree " + std::to_string(ox)
                                     + ": initial form of x is not in(h') z0");
        }
        xc = xc - hr * z0;
        yc = yc + f * z0;
        z = z + z0;
        ++cert.correction_steps;
    }
    const TruncatedSeries xbar = h * z;
    const TruncatedSeries ybar = -(f * z);
    cert.output = {xbar, ybar};
    cert.proximity = {(xbar - x).ord(), (ybar - y).ord()};
    cert.required_proximity = {i + 1, i + 1};
    cert.residual_order = (f * xbar + h * ybar).ord();
    return cert;
}

} // namespace artin
