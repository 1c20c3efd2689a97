#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <artin/series.hpp>

namespace artin
{

struct WitnessFamily {
    explicit WitnessFamily(const RingSpec &ring) : x1(ring), x2(ring), x3(ring), x4(ring), residual(ring)
    {
    }

    unsigned i = 0;
    TruncatedSeries x1, x2, x3, x4;
    // x1*x2 - x3*x4, computed by multiplication.
    TruncatedSeries residual;
    ExtOrder residual_order = ExtOrder::at_least(0);
    // k in [1, i] with C(i, k) = 0 in the coefficient field.
    std::vector<unsigned> vanishing_binomials;
    // x3 = T1*T2 mod m^i.
    bool x3_congruent = false;
    // T1*T2 does not divide in(x1).
    bool x1_initial_coprime = false;
};

// x1 = T1^i, x2 = T2^i, x3 = T1 T2 - T3^i and
// x4 = sum_{k=1..i} C(i,k) x3^(k-1) T3^(i(i-k)), so x1 x2 - x3 x4 = T3^(i^2).
WitnessFamily monomial_witness_family(unsigned i, const RingSpec &ring);

struct IrreducibilityCertificate {
    unsigned i = 0;
    std::uint32_t p = 0;
    double search_space_size = 0;
    std::size_t factorizations_found = 0;
    std::optional<std::pair<TruncatedSeries, TruncatedSeries>> counterexample;
    std::string method;
};

// Exhaustive search over non-units x, y of F_p[[T1,T2,T3]] (parts of degree
// 1..i-1) for x*y = T1*T2 - T3^i mod m^(i+1).
IrreducibilityCertificate irreducibility_exhaustive(unsigned i, std::uint32_t p,
                                                    double budget = 1e7);

struct LowerBoundEntry {
    WitnessFamily family;
    std::optional<IrreducibilityCertificate> certificate;
    // i^2 - 1.
    long lower_bound;
};

struct LowerBoundReport {
    std::vector<LowerBoundEntry> entries;
    std::string statement;
};

// Families for i = 1..i_max plus irreducibility certificates over F_p for p
// in `primes` whenever p^(2 * #coefficients) fits the budget.
LowerBoundReport lower_bound_certificate(unsigned i_max, const RingSpec &ring,
                                         const std::vector<std::uint32_t> &primes = {2},
                                         double budget = 1e7);

} // namespace artin
