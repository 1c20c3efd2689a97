#include <cmath>

#include <artin/dense_jets.hpp>
#include <artin/errors.hpp>
#include <artin/witnesses.hpp>

namespace artin
{

WitnessFamily monomial_witness_family(unsigned i, const RingSpec &ring)
{
    if (ring.num_vars() < 3) {
        throw precondition_error("witness family needs at least 3 variables");
    }
    if (i < 1) {
        throw precondition_error("i must be at least 1");
    }
    if (i * i > ring.trunc()) {
        throw precondition_error("truncation too small: i^2 = " + std::to_string(i * i) + " > D = "
                                 + std::to_string(ring.trunc()));
    }
    const Field &field = ring.field();
    const std::size_t n = ring.num_vars();
    const Scalar one = field.from_int(1);
    auto mono = [&](std::size_t var, unsigned e) {
        return TruncatedSeries::term(ring, Monomial::variable(n, var, e), one);
    };
    WitnessFamily w(ring);
    w.i = i;
    w.x1 = mono(0, i);
    w.x2 = mono(1, i);
    const TruncatedSeries t1t2 = mono(0, 1) * mono(1, 1);
    w.x3 = t1t2 - mono(2, i);
    TruncatedSeries x3_power = TruncatedSeries::constant(ring, 1);
    for (unsigned k = 1; k <= i; ++k) {
        const Scalar c = field.from_mpz(binomial(i, k));
        if (Field::is_zero(c)) {
            w.vanishing_binomials.push_back(k);
        }
        w.x4 = w.x4 + (x3_power * mono(2, i * (i - k))).scaled(c);
        x3_power = x3_power * w.x3;
    }
    w.residual = w.x1 * w.x2 - w.x3 * w.x4;
    w.residual_order = w.residual.ord();
    w.x3_congruent = (w.x3 - t1t2).jet_below(i).is_zero();
    const Monomial t1t2_mono = t1t2.terms().begin()->first;
    w.x1_initial_coprime = true;
    const TruncatedSeries x1_low = w.x1.initial_form();
    for (const auto &[m, c] : x1_low.terms()) {
        if (t1t2_mono.divides(m)) {
            w.x1_initial_coprime = false;
        }
    }
    return w;
}

IrreducibilityCertificate irreducibility_exhaustive(unsigned i, std::uint32_t p, double budget)
{
    if (i < 1) {
        throw precondition_error("i must be at least 1");
    }
    const RingSpec ring(3, Field::prime(p), i);
    const detail::DenseRing dense(ring);
    const auto &table = ring.monomials();
    const std::size_t lo = table.degree_offset(1);
    const std::size_t hi = table.degree_offset(i);
    const std::size_t coeffs = hi - lo;

    IrreducibilityCertificate cert;
    cert.i = i;
    cert.p = p;
    cert.search_space_size = std::pow(double(p), double(2 * coeffs));
    cert.method = "exhaustive over pairs of non-units with parts of degree 1.."
                  + std::to_string(i - 1) + " over F_" + std::to_string(p);
    if (cert.search_space_size > budget) {
        throw budget_exceeded("irreducibility search over "
                                  + count_text(cert.search_space_size)
                                  + " pairs exceeds budget " + count_text(budget),
                              cert.search_space_size);
    }
    const Scalar one = ring.field().from_int(1);
    const TruncatedSeries target =
        TruncatedSeries::term(ring, Monomial({1, 1, 0}), one)
        - TruncatedSeries::term(ring, Monomial::variable(3, 2, i), one);
    const detail::Jet goal = dense.from_series(target);

    std::vector<detail::Jet> elements;
    std::vector<std::uint64_t> odo(coeffs, 0);
    while (true) {
        detail::Jet e(dense.size(), 0);
        for (std::size_t k = 0; k < coeffs; ++k) {
            e[lo + k] = odo[k];
        }
        elements.push_back(std::move(e));
        std::size_t k = 0;
        while (k < coeffs && ++odo[k] == p) {
            odo[k++] = 0;
        }
        if (k == coeffs) {
            break;
        }
    }
    for (const auto &x : elements) {
        for (const auto &y : elements) {
            if (dense.mul(x, y, i) == goal) {
                if (!cert.counterexample) {
                    cert.counterexample = {dense.to_series(ring, x), dense.to_series(ring, y)};
                }
                ++cert.factorizations_found;
            }
        }
    }
    return cert;
}

LowerBoundReport lower_bound_certificate(unsigned i_max, const RingSpec &ring,
                                         const std::vector<std::uint32_t> &primes, double budget)
{
    if (i_max * i_max > ring.trunc()) {
        throw precondition_error("truncation too small: i_max^2 = " + std::to_string(i_max * i_max)
                                 + " > D = " + std::to_string(ring.trunc()));
    }
    LowerBoundReport rep;
    for (unsigned i = 1; i <= i_max; ++i) {
        LowerBoundEntry entry{monomial_witness_family(i, ring), std::nullopt, long(i * i) - 1};
        for (std::uint32_t p : primes) {
            try {
                entry.certificate = irreducibility_exhaustive(i, p, budget);
                break;
            } catch (const budget_exceeded &) {
            }
        }
        rep.entries.push_back(std::move(entry));
    }
    rep.statement = "for each listed i, f(x) in m^(i^2) with x3 congruent to T1*T2 - T3^i, so the "
                    "Artin function of X1*X2 - X3*X4 satisfies beta(i) >= i^2 - 1";
    return rep;
}

} // namespace artin
