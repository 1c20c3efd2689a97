#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace artin
{

enum class BoundFormula {
    prop43i,
    prop43ii,
    thm45,
    cor48_artin,
    ex433,
    ex434,
    lem64,
    lem66,
    prop72,
    prop73,
    prop74,
    lin31,
};

const std::vector<BoundFormula> &all_bound_formulas();
std::string formula_name(BoundFormula f);
BoundFormula formula_from_name(const std::string &name);
// Parameter names the formula reads, e.g. {"a", "nu", "iI", "b"}.
const std::vector<std::string> &formula_parameters(BoundFormula f);
std::string formula_expression(BoundFormula f);

// Named constants; unset entries are reported as missing when needed.
// Keys: a, b, c, iI, iP, iJn, n, t, ord_g, max_ord, nu, k.
using BoundParams = std::map<std::string, mpq_class>;

// Exact evaluation; non-integral rational values are rounded down.
mpz_class evaluate_bound(BoundFormula f, const BoundParams &params, long i);

struct CrossCheckPoint {
    long i;
    mpz_class measured;
    mpz_class bound;
    bool within;
};

struct CrossCheckReport {
    BoundFormula formula;
    std::vector<CrossCheckPoint> points;
    bool all_within = true;
};

CrossCheckReport cross_check_bound(BoundFormula f, const BoundParams &params,
                                   const std::vector<std::pair<long, mpz_class>> &empirical);

// Smallest i >= 0 with i^2 - 1 > alpha*i + beta.
long quadratic_exceeds_affine(const mpq_class &alpha, const mpq_class &beta);

} // namespace artin
