#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <artin/series.hpp>

namespace artin
{

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
long uniform_int(Rng &rng, long lo, long hi);

// Random series supported in degrees [min_deg, max_deg] with integer
// coefficients in [-height, height]; each monomial is present with
// probability `density`. Never returns zero when min_deg <= D.
TruncatedSeries random_series(const RingSpec &ring, unsigned min_deg, unsigned max_deg, Rng &rng,
                              long height = 3, double density = 0.5);

// All monomials of degrees [lo, hi] as series, in GradedLess order.
std::vector<TruncatedSeries> monomial_elements(const RingSpec &ring, unsigned lo, unsigned hi);

// Every nonzero element supported in degrees [lo, hi] over F_p whose first
// nonzero coefficient (GradedLess order) is 1. Throws budget_exceeded when
// there are more than `budget` of them.
std::vector<TruncatedSeries> projective_elements(const RingSpec &ring, unsigned lo, unsigned hi,
                                                 double budget);

} // namespace artin
