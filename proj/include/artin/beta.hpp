#pragma once

#include <optional>
#include <string>
#include <vector>

#include <artin/parse.hpp>
#include <artin/series.hpp>

namespace artin
{

// Polynomial equations in unknowns X_1..X_n with coefficients in the
// truncated ring: each equation is a sum of c(T) * X^e.
struct PolySystem {
    struct Term {
        Polynomial::Exponents unknown_exponents;
        TruncatedSeries coefficient;
    };
    using Equation = std::vector<Term>;

    RingSpec ring;
    std::vector<std::string> unknowns;
    std::vector<Equation> equations;

    // `polys` are over the names ring vars followed by `unknown_names`.
    static PolySystem from_polynomials(const RingSpec &ring,
                                       const std::vector<std::string> &unknown_names,
                                       const std::vector<Polynomial> &polys);
    static PolySystem parse(const RingSpec &ring, const std::vector<std::string> &unknown_names,
                            const std::vector<std::string> &equations);

    std::vector<TruncatedSeries> evaluate(const std::vector<TruncatedSeries> &x) const;
};

struct BetaResult {
    unsigned i = 0;
    unsigned beta = 0;
    double state_space = 0;
    std::size_t classes = 0;
    std::size_t good_classes = 0;
    std::size_t nodes = 0;
    // A jet (mod m^(i+1)) with no exact solution attaining beta.
    std::optional<std::vector<TruncatedSeries>> worst_class;
};

// beta_D(i): the smallest beta such that every x with f(x) in m^(beta+1)
// has an exact truncated solution y with y = x mod m^(i+1). Exhaustive over
// F_p; budget bounds both the number of jet classes and search nodes.
BetaResult beta_lower_bound_bruteforce(const PolySystem &system, unsigned i, double budget = 2e7);

} // namespace artin
