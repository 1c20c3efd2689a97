#include <doctest.h>

#include <artin/errors.hpp>
#include <artin/parse.hpp>
#include <artin/witnesses.hpp>

using namespace artin;

TEST_SUITE("witnesses")
{
    TEST_CASE("degenerate and small families")
    {
        const RingSpec r(default_var_names(3), Field::rationals(), 9);
        const auto w1 = monomial_witness_family(1, r);
        CHECK(format_series(w1.x4) == "1");
        CHECK(format_series(w1.residual) == "T3");
        const auto w2 = monomial_witness_family(2, RingSpec(default_var_names(3), Field::rationals(), 6));
        CHECK(format_series(w2.x4) == "T1*T2 + T3^2");
        CHECK(format_series(w2.residual) == "T3^4");
        CHECK(w2.residual_order == ExtOrder::exact(4));
        const auto w3 = monomial_witness_family(3, r);
        CHECK(format_series(w3.residual) == "T3^9");
        CHECK_THROWS_AS(monomial_witness_family(4, r), precondition_error);
    }

    TEST_CASE("families up to i = 6")
    {
        const RingSpec r(default_var_names(3), Field::rationals(), 36);
        for (unsigned i = 1; i <= 6; ++i) {
            const auto w = monomial_witness_family(i, r);
            CHECK(w.residual_order == ExtOrder::exact(i * i));
            const std::string expected = i == 1 ? "T3" : "T3^" + std::to_string(i * i);
            CHECK(format_series(w.residual) == expected);
            CHECK(w.residual == w.x1 * w.x2 - w.x3 * w.x4);
            CHECK(w.x3_congruent);
            CHECK((i == 1 || w.x1_initial_coprime));
            CHECK(w.vanishing_binomials.empty());
        }
    }

    TEST_CASE("vanishing binomials are flagged in small characteristic")
    {
        const RingSpec r(default_var_names(3), Field::prime(2), 16);
        const auto w = monomial_witness_family(4, r);
        CHECK_FALSE(w.vanishing_binomials.empty());
        CHECK(w.residual == w.x1 * w.x2 - w.x3 * w.x4);
    }

    TEST_CASE("exhaustive irreducibility certificates")
    {
        const auto a = irreducibility_exhaustive(2, 2);
        CHECK(a.search_space_size == 64);
        CHECK(a.factorizations_found == 0);
        const auto b = irreducibility_exhaustive(2, 3);
        CHECK(b.search_space_size == 729);
        CHECK(b.factorizations_found == 0);
        const auto c = irreducibility_exhaustive(3, 2);
        CHECK(c.search_space_size == 262144);
        CHECK(c.factorizations_found == 0);
        const auto again = irreducibility_exhaustive(2, 3);
        CHECK(again.search_space_size == b.search_space_size);
        CHECK(again.factorizations_found == b.factorizations_found);
        CHECK_THROWS_AS(irreducibility_exhaustive(3, 3, 1000), budget_exceeded);
    }

    TEST_CASE("lower bound report")
    {
        const RingSpec r(default_var_names(3), Field::rationals(), 9);
        const auto rep = lower_bound_certificate(3, r);
        REQUIRE(rep.entries.size() == 3);
        for (unsigned i = 1; i <= 3; ++i) {
            CHECK(rep.entries[i - 1].family.residual_order == ExtOrder::exact(i * i));
            CHECK(rep.entries[i - 1].lower_bound == long(i * i) - 1);
        }
        CHECK(rep.statement.find("i^2 - 1") != std::string::npos);
        const auto one = lower_bound_certificate(1, r);
        CHECK(one.entries.front().family.residual_order == ExtOrder::exact(1));
        CHECK_THROWS_AS(lower_bound_certificate(4, r), precondition_error);
    }
}
