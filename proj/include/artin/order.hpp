#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <artin/subspace.hpp>

namespace artin
{

// nu_I(x) = max { n : x in I + m^n }, evaluated against a fixed ideal.
class OrderFunction
{
public:
    explicit OrderFunction(const IdealSpec &ideal);

    const IdealSpec &ideal() const noexcept
    {
        return ideal_;
    }
    const Subspace &ideal_span() const noexcept
    {
        return span_;
    }
    ExtOrder operator()(const TruncatedSeries &x) const;

private:
    IdealSpec ideal_;
    Subspace span_;
};

ExtOrder nu(const IdealSpec &ideal, const TruncatedSeries &x);

struct NuBarSample {
    unsigned n;
    ExtOrder nu;
};

struct NuBarEstimate {
    // max over exact samples of nu(x^n)/n; empty when every sample is AtLeast.
    std::optional<Scalar> estimate;
    std::vector<NuBarSample> samples;
    // Some nu(x^n) was AtLeast(D+1) and was left out of the max.
    bool saw_at_least = false;
    // n_max * estimate exceeds D.
    bool truncation_limited = false;
};

NuBarEstimate nu_bar_estimate(const IdealSpec &ideal, const TruncatedSeries &x, unsigned n_max);

struct IclSampling {
    enum class Mode { monomials_only, random_rational, exhaustive_prime };
    Mode mode = Mode::monomials_only;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    // Cap on the number of scanned pairs (and enumerated elements).
    double budget = 5e6;
};

struct IclPair {
    TruncatedSeries g;
    TruncatedSeries h;
    ExtOrder nu_g;
    ExtOrder nu_h;
    ExtOrder nu_gh;
};

struct IclReport {
    IdealSpec ideal;
    Scalar a;
    // Empty means "unbounded-at-truncation".
    std::optional<long> b_min;
    std::vector<IclPair> attaining_pairs;
    std::vector<IclPair> violations;
    unsigned scan_degree = 0;
    std::size_t elements = 0;
    std::size_t pairs_scanned = 0;
    std::string certified_note;
};

IclReport icl_scan(const IdealSpec &ideal, unsigned deg_max, const Scalar &a,
                   const IclSampling &sampling = {});

struct IclEnvelopePoint {
    Scalar a;
    std::optional<long> b_min;
};

// b_min for a in {1, 3/2, 2}, sharing one set of order computations.
std::vector<IclEnvelopePoint> icl_envelope(const IdealSpec &ideal, unsigned deg_max,
                                           const IclSampling &sampling = {});

struct ValuationCheck {
    bool holds = true;
    std::optional<IclPair> counterexample;
    std::size_t pairs_scanned = 0;
};

ValuationCheck valuation_check(const IdealSpec &ideal, unsigned deg_max,
                               const IclSampling &sampling = {});

} // namespace artin
