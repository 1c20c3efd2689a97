#pragma once

#include <string>
#include <vector>

#include <artin/series.hpp>

namespace artin
{

struct SolveCertificate {
    std::vector<TruncatedSeries> input;
    std::vector<TruncatedSeries> output;
    unsigned level_i = 0;
    // ord(output_j - input_j) and the exponent each must reach.
    std::vector<ExtOrder> proximity;
    std::vector<unsigned> required_proximity;
    ExtOrder residual_order = ExtOrder::at_least(0);
    // Regularity of the initial forms was asserted by the caller, not checked.
    bool regularity_assumed = false;
    unsigned correction_steps = 0;
};

// True when every initial form is a single monomial and their variable
// supports are pairwise disjoint.
bool monomial_regular(const std::vector<TruncatedSeries> &f);

// Exact solution of sum f_j X_j = 0 near x, for generators with regular
// initial forms sorted by order. Requires sum f_j x_j in m^(i+ord f_n+1).
SolveCertificate solve_linear_regular(const std::vector<TruncatedSeries> &f,
                                      const std::vector<TruncatedSeries> &x, unsigned i,
                                      bool assume_regular = false);

// f = T1^k + g with ord g = k+1 and T1 not dividing in(g).
void check_fx_hy_shape(unsigned k, const TruncatedSeries &f);

// h = q f + r where no term of r is divisible by T1^k (requires the shape above).
struct DivisionByF {
    TruncatedSeries quotient;
    TruncatedSeries remainder;
};
DivisionByF divide_by_f(unsigned k, const TruncatedSeries &f, const TruncatedSeries &h);

// Exact solution of f X + h Y = 0 near (x, y). Requires
// f x + h y in m^(i + max(k, nu_(f)(h)+1) + 1).
SolveCertificate solve_fx_hy(unsigned k, const TruncatedSeries &f, const TruncatedSeries &h,
                             const TruncatedSeries &x, const TruncatedSeries &y, unsigned i);

} // namespace artin
