#pragma once

#include <optional>
#include <vector>

#include <artin/subspace.hpp>

namespace artin
{

struct ArWitness {
    unsigned i;
    // Element of M ∩ m^i outside m^(i-i0+1) M.
    std::vector<TruncatedSeries> element;
};

struct ArIndexResult {
    unsigned i0 = 0;
    unsigned certified_up_to = 0;
    std::optional<ArWitness> tight_witness;
    // shifts[i] = i - max { j : M ∩ m^i ⊆ m^j M }.
    std::vector<unsigned> shifts;
    ModuleSpec module;
};

// Smallest i0 with M ∩ m^i ⊆ m^max(i-i0,0) M for all i up to the certified
// range D - (max generator degree). `check_up_to` narrows the range.
ArIndexResult artin_rees_index(const ModuleSpec &module,
                               std::optional<unsigned> check_up_to = std::nullopt);
ArIndexResult artin_rees_index(const IdealSpec &ideal,
                               std::optional<unsigned> check_up_to = std::nullopt);

struct StablePoint {
    unsigned i;
    // Smallest L with J ∩ m^L ⊆ m^i J, or certified_up_to + 1 as a lower
    // bound when no L in range works.
    unsigned l_min;
    bool l_min_found;
    // Inclusion at L = i + ceil(a nu + b); empty when L is out of range.
    std::optional<bool> holds;
};

struct StableEntry {
    TruncatedSeries x;
    ExtOrder nu;
    // Set when x lies in I; nothing is checked.
    bool skipped = false;
    unsigned certified_up_to = 0;
    std::vector<StablePoint> points;
};

struct StableGridPoint {
    Scalar a;
    long b_min;
    // Some L_min was only a lower bound, so b_min is a lower bound too.
    bool lower_bound_only;
};

struct StableArReport {
    Scalar a;
    long b;
    std::vector<StableEntry> entries;
    bool all_hold = true;
    std::size_t checks = 0;
    std::vector<StableGridPoint> grid;
};

// Checks ((x)+I) ∩ m^(i + a nu_I(x) + b) ⊆ ((x)+I) m^i for each x.
StableArReport stable_ar_scan(const IdealSpec &ideal, const std::vector<TruncatedSeries> &xs,
                              const Scalar &a, long b);

} // namespace artin
