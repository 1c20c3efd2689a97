#include <artin/artin_rees.hpp>
#include <artin/errors.hpp>
#include <artin/order.hpp>

namespace artin
{

namespace
{

long ceil_to_long(const Scalar &q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

unsigned certified_range(const ModuleSpec &module)
{
    const unsigned deg = module.max_generator_degree();
    return deg >= module.ring.trunc() ? 0 : module.ring.trunc() - deg;
}

} // namespace

ArIndexResult artin_rees_index(const ModuleSpec &module, std::optional<unsigned> check_up_to)
{
    ArIndexResult out{0, certified_range(module), std::nullopt, {}, module};
    if (check_up_to) {
        if (*check_up_to > out.certified_up_to) {
            throw precondition_error("requested range " + std::to_string(*check_up_to)
                                     + " exceeds certified range "
                                     + std::to_string(out.certified_up_to));
        }
        out.certified_up_to = *check_up_to;
    }
    const unsigned top = out.certified_up_to;
    std::vector<Subspace> powers;
    powers.reserve(top + 2);
    for (unsigned j = 0; j <= top + 1; ++j) {
        powers.push_back(span_m_power_times(module, j));
    }
    const Subspace &whole = powers.front();
    for (unsigned i = 0; i <= top; ++i) {
        const Subspace cut = intersect_m_power(whole, i);
        unsigned j = i;
        while (j > 0 && !contains(powers[j], cut)) {
            --j;
        }
        const unsigned shift = i - j;
        out.shifts.push_back(shift);
        if (shift > out.i0) {
            out.i0 = shift;
            for (const auto &[p, row] : cut.basis().rows()) {
                if (!powers[j + 1].basis().contains(row)) {
                    out.tight_witness = ArWitness{i, cut.space().decode_vector(row)};
                    break;
                }
            }
        }
    }
    return out;
}

ArIndexResult artin_rees_index(const IdealSpec &ideal, std::optional<unsigned> check_up_to)
{
    return artin_rees_index(ModuleSpec::from_ideal(ideal), check_up_to);
}

StableArReport stable_ar_scan(const IdealSpec &ideal, const std::vector<TruncatedSeries> &xs,
                              const Scalar &a, long b)
{
    if (a < 1 || b < 0) {
        throw precondition_error("stable Artin-Rees needs a >= 1 and b >= 0");
    }
    const OrderFunction nu_i(ideal);
    const std::vector<Scalar> grid_a{Scalar(1), Scalar(3, 2), Scalar(2)};
    // Per grid value: largest requirement from exact L_min and from lower bounds.
    std::vector<long> need_found(grid_a.size(), 0);
    std::vector<long> need_bound(grid_a.size(), 0);
    StableArReport rep{a, b, {}, true, 0, {}};
    for (const auto &x : xs) {
        StableEntry entry{x, nu_i(x), false, 0, {}};
        if (!entry.nu.is_exact()) {
            entry.skipped = true;
            rep.entries.push_back(std::move(entry));
            continue;
        }
        std::vector<TruncatedSeries> gens = ideal.generators;
        gens.push_back(x);
        const ModuleSpec joined = ModuleSpec::from_ideal(IdealSpec(ideal.ring, gens));
        entry.certified_up_to = certified_range(joined);
        const unsigned top = entry.certified_up_to;
        const Subspace whole = span_module(joined);
        std::vector<Subspace> cuts;
        for (unsigned l = 0; l <= top; ++l) {
            cuts.push_back(intersect_m_power(whole, l));
        }
        const unsigned nu_x = entry.nu.value();
        for (unsigned i = 0; i <= top; ++i) {
            const Subspace target = span_m_power_times(joined, i);
            StablePoint pt{i, top + 1, false, std::nullopt};
            for (unsigned l = 0; l <= top; ++l) {
                if (contains(target, cuts[l])) {
                    pt.l_min = l;
                    pt.l_min_found = true;
                    break;
                }
            }
            const long l_given = long(i) + ceil_to_long(a * nu_x + b);
            if (l_given <= long(top)) {
                pt.holds = contains(target, cuts[l_given]);
                ++rep.checks;
                if (!*pt.holds) {
                    rep.all_hold = false;
                }
            }
            for (std::size_t g = 0; g < grid_a.size(); ++g) {
                const long need = ceil_to_long(Scalar(long(pt.l_min) - long(i)) - grid_a[g] * nu_x);
                long &slot = pt.l_min_found ? need_found[g] : need_bound[g];
                slot = std::max(slot, need);
            }
            entry.points.push_back(pt);
        }
        rep.entries.push_back(std::move(entry));
    }
    for (std::size_t g = 0; g < grid_a.size(); ++g) {
        rep.grid.push_back({grid_a[g], std::max(need_found[g], need_bound[g]),
                            need_bound[g] > need_found[g]});
    }
    return rep;
}

} // namespace artin
