#include <doctest.h>

#include <artin/errors.hpp>
#include <artin/order.hpp>
#include <artin/parse.hpp>
#include <artin/sampling.hpp>

#include "instances.hpp"
#include "oracle.hpp"

using namespace artin;

namespace
{

RingSpec ring_of(std::size_t n, unsigned trunc, std::uint32_t p = 0)
{
    return RingSpec(default_var_names(n), p == 0 ? Field::rationals() : Field::prime(p), trunc);
}

IdealSpec ideal_of(const RingSpec &r, const std::string &gens)
{
    std::vector<TruncatedSeries> g;
    for (const auto &s : split_list(gens)) {
        g.push_back(parse_poly(s, r));
    }
    return IdealSpec(r, g);
}

} // namespace

TEST_SUITE("order_theory")
{
    TEST_CASE("order function on the cusp")
    {
        const RingSpec r = ring_of(2, 8);
        const OrderFunction nu_i(ideal_of(r, "T1^2 - T2^3"));
        CHECK(nu_i(parse_poly("T1", r)) == ExtOrder::exact(1));
        CHECK(nu_i(parse_poly("T1^2", r)) == ExtOrder::exact(3));
        CHECK(nu_i(parse_poly("T2*(T1^2 - T2^3)", r)) == ExtOrder::at_least(9));
    }

    TEST_CASE("zero ideal gives the order")
    {
        const RingSpec r = ring_of(3, 6);
        Rng rng(5);
        const IdealSpec zero(r, {});
        for (int k = 0; k < 20; ++k) {
            const auto x = random_series(r, 0, 6, rng);
            CHECK(nu(zero, x) == x.ord());
        }
    }

    TEST_CASE("order function agrees with the membership sweep")
    {
        Rng rng(99);
        for (int trial = 0; trial < 6; ++trial) {
            const RingSpec r = ring_of(2, 7);
            std::vector<TruncatedSeries> gens{random_series(r, 2, 3, rng, 2, 0.5)};
            const IdealSpec ideal(r, gens);
            const OrderFunction nu_i(ideal);
            const oracle::Ambient amb(2, 7, 1);
            std::vector<oracle::Poly> og{oracle::from_series(gens[0])};
            for (int k = 0; k < 8; ++k) {
                const auto x = random_series(r, 1, 4, rng, 2, 0.3);
                CHECK(int(nu_i(x).value()) == oracle::nu(amb, og, oracle::from_series(x)));
            }
        }
    }

    TEST_CASE("superadditivity and the ultrametric inequality")
    {
        Rng rng(31);
        const RingSpec r = ring_of(2, 8);
        const OrderFunction nu_i(ideal_of(r, "T1^2 + T2^3"));
        for (int k = 0; k < 60; ++k) {
            const auto x = random_series(r, 1, 4, rng, 2, 0.4);
            const auto y = random_series(r, 1, 4, rng, 2, 0.4);
            CHECK(nu_i(x) + nu_i(y) <= nu_i(x * y));
            CHECK(std::min(nu_i(x), nu_i(y)) <= nu_i(x + y));
        }
    }

    TEST_CASE("nu bar estimate")
    {
        const RingSpec r = ring_of(2, 12);
        const IdealSpec cusp = ideal_of(r, "T1^2 - T2^3");
        const auto est = nu_bar_estimate(cusp, parse_poly("T1", r), 4);
        REQUIRE(est.estimate);
        CHECK(*est.estimate == mpq_class(3, 2));
        CHECK(est.samples[1].nu == ExtOrder::exact(3));
        CHECK(est.samples[3].nu == ExtOrder::exact(6));
        CHECK(*est.estimate >= est.samples[0].nu.value());
        const auto plain = nu_bar_estimate(IdealSpec(r, {}), parse_poly("T1", r), 5);
        CHECK(*plain.estimate == 1);
        CHECK_THROWS_AS(nu_bar_estimate(cusp, parse_poly("T1", r), 0), precondition_error);
    }

    TEST_CASE("icl scan: cusp with an odd-order tail")
    {
        const RingSpec r = ring_of(2, 8);
        const auto rep = icl_scan(ideal_of(r, "T1^2 + T2^3"), 3, 1);
        REQUIRE(rep.b_min);
        CHECK(*rep.b_min == 1);
        REQUIRE_FALSE(rep.attaining_pairs.empty());
        CHECK(format_series(rep.attaining_pairs.front().g) == "T1");
        CHECK(format_series(rep.attaining_pairs.front().h) == "T1");
        CHECK(rep.attaining_pairs.front().nu_gh == ExtOrder::exact(3));
        CHECK(rep.violations.empty());
    }

    TEST_CASE("icl scan: sphere is a valuation")
    {
        const RingSpec r = ring_of(3, 8);
        const IdealSpec sphere = ideal_of(r, "T1^2 + T2^2 + T3^2");
        const auto rep = icl_scan(sphere, 3, 1);
        REQUIRE(rep.b_min);
        CHECK(*rep.b_min == 0);
        CHECK(valuation_check(sphere, 3).holds);
    }

    TEST_CASE("icl scan: reducible ideal")
    {
        const RingSpec r = ring_of(2, 8);
        const auto rep = icl_scan(ideal_of(r, "T1*T2"), 3, 2);
        CHECK_FALSE(rep.b_min);
        REQUIRE_FALSE(rep.violations.empty());
        const auto &v = rep.violations.front();
        CHECK(format_series(v.g) == "T1");
        CHECK(format_series(v.h) == "T2");
        CHECK_FALSE(v.nu_gh.is_exact());
    }

    TEST_CASE("valuation check")
    {
        const RingSpec r = ring_of(2, 8);
        const auto vc = valuation_check(ideal_of(r, "T1^2 - T2^3"), 3);
        CHECK_FALSE(vc.holds);
        REQUIRE(vc.counterexample);
        CHECK(format_series(vc.counterexample->g) == "T1");
        CHECK(format_series(vc.counterexample->h) == "T1");
        CHECK(valuation_check(IdealSpec(r, {}), 3).holds);
    }

    TEST_CASE("random and exhaustive sampling")
    {
        const RingSpec r = ring_of(2, 8);
        const IdealSpec cusp = ideal_of(r, "T1^2 + T2^3");
        IclSampling s;
        s.mode = IclSampling::Mode::random_rational;
        s.count = 15;
        s.seed = 4;
        const auto a = icl_scan(cusp, 3, 1, s);
        const auto b = icl_scan(cusp, 3, 1, s);
        CHECK(a.b_min == b.b_min);
        CHECK(a.pairs_scanned == b.pairs_scanned);
        CHECK(*a.b_min >= 1);

        const RingSpec r2 = ring_of(2, 4, 2);
        IclSampling ex;
        ex.mode = IclSampling::Mode::exhaustive_prime;
        const auto e = icl_scan(ideal_of(r2, "T1^2 + T2^3"), 2, 1, ex);
        CHECK(e.elements > 0);
        IclSampling tight = ex;
        tight.budget = 3;
        CHECK_THROWS_AS(icl_scan(ideal_of(r2, "T1^2 + T2^3"), 2, 1, tight), budget_exceeded);
        CHECK_THROWS_AS(icl_scan(cusp, 3, 1, ex), precondition_error);
    }

    TEST_CASE("envelope decreases in the slope")
    {
        const RingSpec r = ring_of(2, 8);
        const auto env = icl_envelope(ideal_of(r, "T1^2 + T2^3"), 3);
        REQUIRE(env.size() == 3);
        CHECK(*env[0].b_min == 1);
        CHECK(*env[1].b_min <= *env[0].b_min);
        CHECK(*env[2].b_min <= *env[1].b_min);
    }

    TEST_CASE("order function depends only on the ideal")
    {
        Rng rng(404);
        const RingSpec r = ring_of(2, 7);
        for (int trial = 0; trial < 5; ++trial) {
            const IdealSpec ideal = instances::random_ideal(rng, r);
            const OrderFunction a(ideal);
            const OrderFunction b(instances::augmented(rng, ideal, 2));
            CHECK(a.ideal_span() == b.ideal_span());
            for (int k = 0; k < 10; ++k) {
                const auto x = random_series(r, 0, 5, rng, 2, 0.3);
                CHECK(a(x) == b(x));
            }
        }
    }

    TEST_CASE("scan range precondition")
    {
        const RingSpec r = ring_of(2, 5);
        CHECK_THROWS_AS(icl_scan(ideal_of(r, "T1^2"), 3, 1), precondition_error);
    }
}
