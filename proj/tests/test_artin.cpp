#include <doctest.h>

#include <artin/artin_rees.hpp>
#include <artin/beta.hpp>
#include <artin/errors.hpp>
#include <artin/order.hpp>
#include <artin/parse.hpp>
#include <artin/sampling.hpp>
#include <artin/solvers.hpp>

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

std::vector<std::string> formatted(const std::vector<TruncatedSeries> &v)
{
    std::vector<std::string> out;
    for (const auto &s : v) {
        out.push_back(format_series(s));
    }
    return out;
}

TruncatedSeries dot(const std::vector<TruncatedSeries> &f, const std::vector<TruncatedSeries> &x)
{
    TruncatedSeries s(f.front().ring());
    for (std::size_t j = 0; j < f.size(); ++j) {
        s = s + f[j] * x[j];
    }
    return s;
}

void check_certificate(const SolveCertificate &c)
{
    CHECK_FALSE(c.residual_order.is_exact());
    REQUIRE(c.proximity.size() == c.required_proximity.size());
    for (std::size_t j = 0; j < c.proximity.size(); ++j) {
        CHECK(c.proximity[j] >= ExtOrder::exact(c.required_proximity[j]));
        CHECK(c.proximity[j] >= ExtOrder::exact(c.level_i + 1));
        CHECK(c.proximity[j] == (c.output[j] - c.input[j]).ord());
    }
}

} // namespace

TEST_SUITE("artin_core")
{
    TEST_CASE("Artin-Rees index of principal ideals")
    {
        const RingSpec r = ring_of(2, 8);
        const auto a = artin_rees_index(ideal_of(r, "T1"));
        CHECK(a.i0 == 1);
        CHECK(a.certified_up_to == 7);
        REQUIRE(a.tight_witness);
        CHECK(formatted(a.tight_witness->element) == std::vector<std::string>{"T1"});
        const auto b = artin_rees_index(ideal_of(r, "T1^2"));
        CHECK(b.i0 == 2);
        CHECK(b.certified_up_to == 6);
    }

    TEST_CASE("Artin-Rees index of a module")
    {
        const RingSpec r = ring_of(2, 8);
        const auto t1 = TruncatedSeries::variable(r, 0);
        const auto t2 = TruncatedSeries::variable(r, 1);
        const TruncatedSeries z(r);
        const auto res = artin_rees_index(ModuleSpec(r, 2, {{t1, z}, {z, t2}}));
        CHECK(res.i0 == 1);
        CHECK(res.certified_up_to == 7);
        CHECK(artin_rees_index(ModuleSpec(r, 2, {{t1, z}, {z, t2}}), 3).certified_up_to == 3);
        CHECK_THROWS_AS(artin_rees_index(ModuleSpec(r, 2, {{t1, z}}), 8), precondition_error);
    }

    TEST_CASE("Artin-Rees index agrees with the brute-force sweep")
    {
        Rng rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            const RingSpec r = ring_of(2, 7);
            std::vector<TruncatedSeries> gens;
            const long count = uniform_int(rng, 1, 2);
            for (long k = 0; k < count; ++k) {
                gens.push_back(random_series(r, 1, 3, rng, 2, 0.5));
            }
            const IdealSpec ideal(r, gens);
            const auto res = artin_rees_index(ideal);
            std::vector<oracle::PolyVec> og;
            for (const auto &g : gens) {
                og.push_back({oracle::from_series(g)});
            }
            const oracle::Ambient amb(2, 7, 1);
            CHECK(int(res.i0) == oracle::ar_index(amb, og, int(res.certified_up_to)));
        }
    }

    TEST_CASE("linear regular solver: worked examples")
    {
        const RingSpec r = ring_of(2, 8);
        const std::vector<TruncatedSeries> f{parse_poly("T1", r), parse_poly("T2^2", r)};
        const auto c = solve_linear_regular(f, {parse_poly("T2^2", r), parse_poly("-T1 + T1^5", r)}, 3);
        CHECK(formatted(c.output) == std::vector<std::string>{"T2^2", "-T1"});
        check_certificate(c);
        const auto zero = solve_linear_regular(f, {parse_poly("T1^4", r), parse_poly("T2^3", r)}, 2);
        CHECK(formatted(zero.output) == std::vector<std::string>{"0", "0"});
        const auto exact = solve_linear_regular(f, {parse_poly("T2^2*T1", r), parse_poly("-T1^2", r)}, 4);
        CHECK(exact.output == exact.input);
        check_certificate(exact);
    }

    TEST_CASE("linear regular solver: preconditions")
    {
        const RingSpec r = ring_of(2, 8);
        const std::vector<TruncatedSeries> f{parse_poly("T1", r), parse_poly("T2^2", r)};
        CHECK_THROWS_AS(solve_linear_regular(f, {parse_poly("T2", r), parse_poly("0", r)}, 3),
                        precondition_error);
        const std::vector<TruncatedSeries> unsorted{parse_poly("T2^2", r), parse_poly("T1", r)};
        CHECK_THROWS_AS(solve_linear_regular(unsorted, {parse_poly("0", r), parse_poly("0", r)}, 1),
                        precondition_error);
        const std::vector<TruncatedSeries> shared{parse_poly("T1", r), parse_poly("T1 + T2^2", r)};
        CHECK_THROWS_AS(solve_linear_regular(shared, {parse_poly("0", r), parse_poly("0", r)}, 1),
                        precondition_error);
        CHECK(monomial_regular({parse_poly("T1^2 + T2^3", r), parse_poly("T2^2", r)}));
        CHECK_FALSE(monomial_regular({parse_poly("T1*T2", r), parse_poly("T2^2", r)}));
    }

    TEST_CASE("linear regular solver: 100 random instances")
    {
        Rng rng(2718);
        const RingSpec r = ring_of(3, 11);
        int solved = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto inst = instances::linear_regular(rng, r, trial % 2 == 0 ? 2 : 3);
            const auto c = solve_linear_regular(inst.f, inst.x, inst.i);
            CHECK(dot(inst.f, c.output).is_zero());
            check_certificate(c);
            ++solved;
        }
        CHECK(solved == 100);
    }

    TEST_CASE("f X + h Y solver: worked examples")
    {
        const RingSpec r = ring_of(2, 9);
        const auto f = parse_poly("T1^2 + T2^3", r);
        const auto h = parse_poly("T1", r);
        const auto c = solve_fx_hy(2, f, h, parse_poly("T1 + T1^4", r), -f, 3);
        CHECK(c.output[0] == h);
        CHECK(c.output[1] == -f);
        check_certificate(c);
        const auto z = solve_fx_hy(2, f, h, TruncatedSeries(r), TruncatedSeries(r), 3);
        CHECK(z.output[0].is_zero());
        CHECK(z.output[1].is_zero());
        const auto w = parse_poly("1 + T2", r);
        const auto exact = solve_fx_hy(2, f, h, h * w, -(f * w), 2);
        CHECK((exact.output[0] - h * w).ord() >= ExtOrder::exact(3));
        CHECK((exact.output[1] + f * w).ord() >= ExtOrder::exact(3));
        check_certificate(exact);
    }

    TEST_CASE("f X + h Y solver: preconditions")
    {
        const RingSpec r = ring_of(2, 9);
        const auto h = parse_poly("T1", r);
        CHECK_THROWS_AS(check_fx_hy_shape(2, parse_poly("T1^2 + T1^3", r)), precondition_error);
        CHECK_THROWS_AS(check_fx_hy_shape(2, parse_poly("T1^2", r)), precondition_error);
        CHECK_THROWS_AS(check_fx_hy_shape(2, parse_poly("2*T1^2 + T2^3", r)), precondition_error);
        CHECK_NOTHROW(check_fx_hy_shape(1, parse_poly("T1 + T2^2", r)));
        CHECK_THROWS_AS(solve_fx_hy(2, parse_poly("T1^2 + T2^3", r), h, parse_poly("T1", r),
                                    TruncatedSeries(r), 3),
                        precondition_error);
        const auto div = divide_by_f(2, parse_poly("T1^2 + T2^3", r), parse_poly("T1^3 + T2", r));
        CHECK(format_series(div.quotient * parse_poly("T1^2 + T2^3", r) + div.remainder)
              == "T2 + T1^3");
    }

    TEST_CASE("f X + h Y solver: 100 random instances")
    {
        Rng rng(1618);
        const RingSpec r = ring_of(2, 12);
        int solved = 0;
        for (int attempts = 0; solved < 100 && attempts < 1000; ++attempts) {
            const auto inst = instances::fx_hy(rng, r);
            if (!inst) {
                continue;
            }
            const auto c = solve_fx_hy(inst->k, inst->f, inst->h, inst->x, inst->y, inst->i);
            CHECK((inst->f * c.output[0] + inst->h * c.output[1]).is_zero());
            check_certificate(c);
            ++solved;
        }
        CHECK(solved == 100);
    }

    TEST_CASE("uniform Artin-Rees scan")
    {
        const RingSpec r = ring_of(2, 8);
        const auto zero = stable_ar_scan(IdealSpec(r, {}),
                                         {parse_poly("T1", r), parse_poly("T1^2", r),
                                          parse_poly("T1*T2", r)},
                                         1, 0);
        CHECK(zero.all_hold);
        CHECK(zero.checks > 0);

        const IdealSpec cusp = ideal_of(r, "T1^2 + T2^3");
        const auto member = stable_ar_scan(cusp, {parse_poly("T1^2 + T2^3", r)}, 1, 0);
        CHECK(member.entries.front().skipped);
        CHECK(member.all_hold);

        const auto scan = stable_ar_scan(cusp,
                                         {parse_poly("T1", r), parse_poly("T2", r),
                                          parse_poly("T1^2", r), parse_poly("T1*T2", r),
                                          parse_poly("T2^2", r)},
                                         1, 2);
        REQUIRE(scan.grid.size() == 3);
        for (const auto &g : scan.grid) {
            CHECK(g.b_min >= 0);
        }
        const auto at_grid = stable_ar_scan(cusp, {parse_poly("T1", r), parse_poly("T2", r)}, 1,
                                            scan.grid.front().b_min);
        CHECK(at_grid.all_hold);
    }

    TEST_CASE("beta: smooth and linear systems")
    {
        const RingSpec r = ring_of(2, 5, 2);
        const auto smooth = PolySystem::parse(r, {"X1"}, {"X1"});
        for (unsigned i = 0; i <= 3; ++i) {
            CHECK(beta_lower_bound_bruteforce(smooth, i).beta == i);
        }
        const auto lin = PolySystem::parse(r, {"X1"}, {"T1*X1"});
        for (unsigned i = 0; i <= 3; ++i) {
            CHECK(beta_lower_bound_bruteforce(lin, i).beta == i + 1);
        }
        CHECK_THROWS_AS(beta_lower_bound_bruteforce(lin, 3, 10), budget_exceeded);
        CHECK_THROWS_AS(beta_lower_bound_bruteforce(PolySystem::parse(ring_of(2, 5), {"X1"}, {"X1"}), 1),
                        precondition_error);
    }

    TEST_CASE("beta: linear bound by the Artin-Rees index")
    {
        const RingSpec r = ring_of(2, 5, 2);
        const auto sys = PolySystem::parse(r, {"X1", "X2"}, {"T1*X1 + T2^2*X2"});
        const auto i0 = artin_rees_index(ideal_of(r, "T1, T2^2")).i0;
        for (unsigned i = 0; i <= 2; ++i) {
            CHECK(beta_lower_bound_bruteforce(sys, i).beta <= i + i0);
        }
    }

    TEST_CASE("beta: quadric cone with a deformed coefficient")
    {
        const RingSpec r = ring_of(3, 2, 2);
        const auto sys = PolySystem::parse(r, {"X1", "X2", "X3"}, {"X1*X2 - (T1*T2 - T3^2)*X3"});
        CHECK(beta_lower_bound_bruteforce(sys, 1).beta >= 1);
    }
}
