#include <doctest.h>

#include <artin/bounds.hpp>
#include <artin/errors.hpp>

using namespace artin;

namespace
{

BoundParams base_params()
{
    return {{"a", 1}, {"b", 0}, {"c", 0}, {"iI", 0}, {"iP", 0}, {"iJn", 0}, {"n", 1},
            {"t", 1}, {"ord_g", 0}, {"max_ord", 0}, {"nu", 0}, {"k", 1}};
}

// Small grids for every constant; integral where a formula needs integers.
std::vector<mpq_class> grid_for(BoundFormula f, const std::string &key)
{
    if (key == "a" && f == BoundFormula::prop74) {
        return {1, 2, 3};
    }
    if (key == "a") {
        return {1, mpq_class(3, 2), 2, 3};
    }
    if (key == "n" || key == "t" || key == "k") {
        return {1, 2, 3, 4, 5, 8};
    }
    return {0, mpq_class(1, 2), 1, 2, 3, 5};
}

} // namespace

TEST_SUITE("bounds_calc")
{
    TEST_CASE("catalog values")
    {
        CHECK(evaluate_bound(BoundFormula::cor48_artin, {{"max_ord", 2}}, 5) == 16);
        CHECK(evaluate_bound(BoundFormula::lem66, {{"n", 2}, {"iI", 1}, {"c", 0}}, 4) == 6);
        CHECK(evaluate_bound(BoundFormula::prop74, {{"a", 2}, {"t", 1}, {"n", 1}}, 10) == 5);
        CHECK(evaluate_bound(BoundFormula::lin31, {{"iI", 3}}, 4) == 7);
        CHECK(evaluate_bound(BoundFormula::ex434, {{"k", 2}, {"nu", 1}}, 3) == 5);
        // (2a)^(floor(log2 5)+1) (i+iP+iI) + b (1 + 2a + (2a)^2) with a = 1, b = 1.
        CHECK(evaluate_bound(BoundFormula::lem64,
                             {{"a", 1}, {"n", 5}, {"iP", 1}, {"iI", 1}, {"b", 1}}, 2)
              == 8 * 4 + 7);
        CHECK(evaluate_bound(BoundFormula::prop43ii, {{"a", 1}, {"c", 1}, {"iI", 2}, {"b", 1}}, 1)
              == 8);
        CHECK(evaluate_bound(BoundFormula::thm45,
                             {{"a", mpq_class(3, 2)}, {"nu", 1}, {"iI", 0}, {"b", 0}}, 0)
              == 1);
    }

    TEST_CASE("names round trip")
    {
        for (BoundFormula f : all_bound_formulas()) {
            CHECK(formula_from_name(formula_name(f)) == f);
            CHECK_FALSE(formula_expression(f).empty());
        }
        CHECK(all_bound_formulas().size() == 12);
        CHECK_THROWS_AS(formula_from_name("nope"), precondition_error);
    }

    TEST_CASE("missing and invalid parameters")
    {
        try {
            evaluate_bound(BoundFormula::lem66, {{"n", 2}, {"c", 0}}, 4);
            FAIL("expected an error");
        } catch (const precondition_error &e) {
            CHECK(std::string(e.what()).find("iI") != std::string::npos);
        }
        CHECK_THROWS_AS(evaluate_bound(BoundFormula::thm45, {{"a", mpq_class(1, 2)}, {"nu", 0}, {"iI", 0}, {"b", 0}}, 1),
                        precondition_error);
        CHECK_THROWS_AS(evaluate_bound(BoundFormula::lin31, {{"iI", 0}}, -1), precondition_error);
    }

    TEST_CASE("degenerate ICL bound equals the linear one")
    {
        for (long i = 0; i <= 30; ++i) {
            for (int ii = 0; ii <= 4; ++ii) {
                CHECK(evaluate_bound(BoundFormula::prop43i, {{"a", 1}, {"b", 0}, {"nu", 0}, {"iI", ii}}, i)
                      == evaluate_bound(BoundFormula::lin31, {{"iI", ii}}, i));
            }
        }
    }

    TEST_CASE("monotone in i over constant grids")
    {
        for (BoundFormula f : all_bound_formulas()) {
            for (const auto &key : formula_parameters(f)) {
                for (const auto &v : grid_for(f, key)) {
                    BoundParams p = base_params();
                    p[key] = v;
                    mpz_class prev = evaluate_bound(f, p, 0);
                    for (long i = 1; i <= 50; ++i) {
                        const mpz_class cur = evaluate_bound(f, p, i);
                        CHECK_MESSAGE(cur >= prev, formula_name(f), " ", key);
                        prev = cur;
                    }
                }
            }
        }
    }

    TEST_CASE("monotone in each constant, with the known exceptions")
    {
        for (BoundFormula f : all_bound_formulas()) {
            for (const auto &key : formula_parameters(f)) {
                const auto grid = grid_for(f, key);
                // n*ceil(x/n) is not monotone in n; the last formula subtracts t(a+n)
                // and divides by n*t.
                const bool exception = (f == BoundFormula::lem66 && key == "n")
                                       || f == BoundFormula::prop74;
                if (exception) {
                    continue;
                }
                for (long i = 0; i <= 20; ++i) {
                    for (std::size_t g = 1; g < grid.size(); ++g) {
                        BoundParams lo = base_params();
                        BoundParams hi = base_params();
                        lo[key] = grid[g - 1];
                        hi[key] = grid[g];
                        CHECK_MESSAGE(evaluate_bound(f, lo, i) <= evaluate_bound(f, hi, i),
                                      formula_name(f), " ", key);
                    }
                }
            }
        }
    }

    TEST_CASE("the known exceptions are real")
    {
        CHECK(evaluate_bound(BoundFormula::lem66, {{"n", 4}, {"iI", 0}, {"c", 0}}, 5)
              > evaluate_bound(BoundFormula::lem66, {{"n", 5}, {"iI", 0}, {"c", 0}}, 5));
        CHECK(evaluate_bound(BoundFormula::prop74, {{"a", 1}, {"n", 1}, {"t", 1}}, 10)
              > evaluate_bound(BoundFormula::prop74, {{"a", 1}, {"n", 2}, {"t", 1}}, 10));
    }

    TEST_CASE("lem66 stays below the radical bound")
    {
        for (int n = 1; n <= 6; ++n) {
            for (int c = 0; c <= 3; ++c) {
                for (int ii = 0; ii <= 4; ++ii) {
                    const BoundParams p{{"n", n}, {"c", c}, {"iI", ii}};
                    for (long i = 0; i <= 100; ++i) {
                        CHECK(evaluate_bound(BoundFormula::lem66, p, i)
                              <= evaluate_bound(BoundFormula::prop72, p, i));
                    }
                }
            }
        }
    }

    TEST_CASE("cross check")
    {
        std::vector<std::pair<long, mpz_class>> measured;
        for (long i = 0; i <= 3; ++i) {
            measured.emplace_back(i, i + 1);
        }
        const auto ok = cross_check_bound(BoundFormula::lin31, {{"iI", 1}}, measured);
        CHECK(ok.all_within);
        measured.emplace_back(4, 9);
        const auto bad = cross_check_bound(BoundFormula::lin31, {{"iI", 1}}, measured);
        CHECK_FALSE(bad.all_within);
        CHECK_FALSE(bad.points.back().within);
        const auto icl = cross_check_bound(BoundFormula::ex433, {{"nu", 0}, {"ord_g", 1}}, {{0, 1}});
        CHECK(icl.all_within);
    }

    TEST_CASE("quadratic growth beats every affine candidate")
    {
        CHECK(quadratic_exceeds_affine(10, 5) == 11);
        CHECK(quadratic_exceeds_affine(0, 0) == 2);
        for (int alpha = 0; alpha <= 20; ++alpha) {
            for (int beta = 0; beta <= 20; ++beta) {
                const long i = quadratic_exceeds_affine(alpha, beta);
                CHECK(i * i - 1 > alpha * i + beta);
                if (i > 0) {
                    CHECK((i - 1) * (i - 1) - 1 <= alpha * (i - 1) + beta);
                }
            }
        }
    }
}
