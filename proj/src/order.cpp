#include <artin/errors.hpp>
#include <artin/order.hpp>
#include <artin/sampling.hpp>

namespace artin
{

OrderFunction::OrderFunction(const IdealSpec &ideal) : ideal_(ideal), span_(span_ideal(ideal)) {}

ExtOrder OrderFunction::operator()(const TruncatedSeries &x) const
{
    return distance_order(x, span_);
}

ExtOrder nu(const IdealSpec &ideal, const TruncatedSeries &x)
{
    return OrderFunction(ideal)(x);
}

NuBarEstimate nu_bar_estimate(const IdealSpec &ideal, const TruncatedSeries &x, unsigned n_max)
{
    if (x.is_zero()) {
        throw precondition_error("Rees estimate needs a nonzero element");
    }
    if (n_max < 1) {
        throw precondition_error("n_max must be at least 1");
    }
    const OrderFunction nu_i(ideal);
    NuBarEstimate out;
    TruncatedSeries power = x;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) {
            power = power * x;
        }
        const ExtOrder v = nu_i(power);
        out.samples.push_back({n, v});
        if (!v.is_exact()) {
            out.saw_at_least = true;
            continue;
        }
        const Scalar ratio(v.value(), n);
        if (!out.estimate || ratio > *out.estimate) {
            out.estimate = ratio;
        }
    }
    if (out.estimate && *out.estimate * n_max > ideal.ring.trunc()) {
        out.truncation_limited = true;
    }
    return out;
}

namespace
{

long ceil_to_long(const Scalar &q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

struct PairRecord {
    std::size_t g;
    std::size_t h;
    ExtOrder nu_gh;
};

struct PairScan {
    std::vector<TruncatedSeries> elements;
    std::vector<ExtOrder> orders;
    std::vector<PairRecord> pairs;
};

PairScan scan_pairs(const IdealSpec &ideal, unsigned deg_max, const IclSampling &sampling)
{
    const RingSpec &ring = ideal.ring;
    if (deg_max < 1) {
        throw precondition_error("scan degree must be at least 1");
    }
    if (2 * deg_max > ring.trunc()) {
        throw precondition_error("scan degree " + std::to_string(deg_max)
                                 + " needs truncation at least " + std::to_string(2 * deg_max));
    }
    PairScan scan;
    switch (sampling.mode) {
    case IclSampling::Mode::exhaustive_prime:
        scan.elements = projective_elements(ring, 1, deg_max, sampling.budget);
        break;
    case IclSampling::Mode::random_rational: {
        scan.elements = monomial_elements(ring, 1, deg_max);
        Rng rng(sampling.seed);
        for (std::size_t k = 0; k < sampling.count; ++k) {
            scan.elements.push_back(random_series(ring, 1, deg_max, rng));
        }
        break;
    }
    case IclSampling::Mode::monomials_only:
        scan.elements = monomial_elements(ring, 1, deg_max);
        break;
    }
    const double n = double(scan.elements.size());
    const double total_pairs = n * (n + 1) / 2;
    if (total_pairs > sampling.budget) {
        throw budget_exceeded("scan needs " + count_text(total_pairs)
                                  + " pairs, budget is " + count_text(sampling.budget),
                              total_pairs);
    }

    const OrderFunction nu_i(ideal);
    for (const auto &e : scan.elements) {
        scan.orders.push_back(nu_i(e));
    }
    for (std::size_t i = 0; i < scan.elements.size(); ++i) {
        if (!scan.orders[i].is_exact()) {
            continue;
        }
        for (std::size_t j = i; j < scan.elements.size(); ++j) {
            if (!scan.orders[j].is_exact()) {
                continue;
            }
            if (scan.orders[i].value() + scan.orders[j].value() > 2 * deg_max) {
                continue;
            }
            scan.pairs.push_back({i, j, nu_i(scan.elements[i] * scan.elements[j])});
        }
    }
    return scan;
}

IclPair make_pair(const PairScan &scan, const PairRecord &r)
{
    return {scan.elements[r.g], scan.elements[r.h], scan.orders[r.g], scan.orders[r.h], r.nu_gh};
}

IclReport summarize(const IdealSpec &ideal, unsigned deg_max, const Scalar &a,
                    const PairScan &scan)
{
    if (a < 1) {
        throw precondition_error("ICL coefficient a must be at least 1");
    }
    IclReport rep{ideal, a, std::nullopt, {}, {}, deg_max, scan.elements.size(), scan.pairs.size(), {}};
    std::optional<Scalar> max_excess;
    for (const auto &r : scan.pairs) {
        if (!r.nu_gh.is_exact()) {
            rep.violations.push_back(make_pair(scan, r));
            continue;
        }
        const Scalar excess =
            Scalar(r.nu_gh.value()) - a * Scalar(scan.orders[r.g].value() + scan.orders[r.h].value());
        if (!max_excess || excess > *max_excess) {
            max_excess = excess;
        }
    }
    rep.certified_note = "scan over " + std::to_string(scan.elements.size())
                         + " elements of degree <= " + std::to_string(deg_max)
                         + ", pairs with nu(g)+nu(h) <= " + std::to_string(2 * deg_max)
                         + ", truncation " + std::to_string(ideal.ring.trunc());
    if (!rep.violations.empty()) {
        return rep;
    }
    long b = max_excess ? std::max(0L, ceil_to_long(*max_excess)) : 0;
    rep.b_min = b;
    for (const auto &r : scan.pairs) {
        const Scalar rhs = a * Scalar(scan.orders[r.g].value() + scan.orders[r.h].value()) + b;
        if (Scalar(r.nu_gh.value()) == rhs) {
            rep.attaining_pairs.push_back(make_pair(scan, r));
        }
    }
    return rep;
}

} // namespace

IclReport icl_scan(const IdealSpec &ideal, unsigned deg_max, const Scalar &a,
                   const IclSampling &sampling)
{
    if (a < 1) {
        throw precondition_error("ICL coefficient a must be at least 1");
    }
    return summarize(ideal, deg_max, a, scan_pairs(ideal, deg_max, sampling));
}

std::vector<IclEnvelopePoint> icl_envelope(const IdealSpec &ideal, unsigned deg_max,
                                           const IclSampling &sampling)
{
    const PairScan scan = scan_pairs(ideal, deg_max, sampling);
    std::vector<IclEnvelopePoint> out;
    for (const Scalar &a : {Scalar(1), Scalar(3, 2), Scalar(2)}) {
        out.push_back({a, summarize(ideal, deg_max, a, scan).b_min});
    }
    return out;
}

ValuationCheck valuation_check(const IdealSpec &ideal, unsigned deg_max, const IclSampling &sampling)
{
    const PairScan scan = scan_pairs(ideal, deg_max, sampling);
    ValuationCheck out;
    out.pairs_scanned = scan.pairs.size();
    for (const auto &r : scan.pairs) {
        // In range, an AtLeast product order already exceeds nu(g)+nu(h).
        if (r.nu_gh != scan.orders[r.g] + scan.orders[r.h]) {
            out.holds = false;
            out.counterexample = make_pair(scan, r);
            break;
        }
    }
    return out;
}

} // namespace artin
