#include <algorithm>

#include <artin/bounds.hpp>
#include <artin/errors.hpp>

namespace artin
{

namespace
{

struct FormulaInfo {
    BoundFormula id;
    const char *name;
    std::vector<std::string> params;
    const char *expression;
};

const std::vector<FormulaInfo> &catalog()
{
    static const std::vector<FormulaInfo> table{
        {BoundFormula::prop43i, "prop43i", {"a", "nu", "iI", "b"}, "a*i + a*nu + a*iI + b"},
        {BoundFormula::prop43ii, "prop43ii", {"a", "c", "iI", "b"}, "(a+c)*(i+iI) + max(b, iI)"},
        {BoundFormula::thm45, "thm45", {"a", "nu", "iI", "b"}, "i + a*nu + iI + b"},
        {BoundFormula::cor48_artin, "cor48_artin", {"max_ord"}, "2*i + 3*max_ord"},
        {BoundFormula::ex433, "ex433", {"nu", "ord_g"}, "i + nu + ord_g"},
        {BoundFormula::ex434, "ex434", {"k", "nu"}, "i + max(k, nu+1)"},
        {BoundFormula::lem64,
         "lem64",
         {"a", "n", "iP", "iI", "b"},
         "(2a)^(floor(log2 n)+1)*(i+iP+iI) + b*sum_{j=0..floor(log2 n)} (2a)^j"},
        {BoundFormula::lem66, "lem66", {"n", "iI", "c"}, "n*ceil((i+iI)/n) + n*c"},
        {BoundFormula::prop72, "prop72", {"iI", "n", "c"}, "i + iI + n*(c+1)"},
        {BoundFormula::prop73, "prop73", {"iI", "t", "iJn", "n", "c"}, "i + iI + t*iJn + t*n*(c+1)"},
        {BoundFormula::prop74, "prop74", {"a", "n", "t"}, "floor((i-a)/(n*t)) - t*(a+n)"},
        {BoundFormula::lin31, "lin31", {"iI"}, "i + iI"},
    };
    return table;
}

const FormulaInfo &info(BoundFormula f)
{
    for (const auto &e : catalog()) {
        if (e.id == f) {
            return e;
        }
    }
    throw std::logic_error("unknown formula");
}

mpz_class floor_q(const mpq_class &q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class ceil_q(const mpq_class &q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

class Params
{
public:
    Params(BoundFormula f, const BoundParams &p) : name_(formula_name(f)), p_(p) {}

    mpq_class get(const std::string &key) const
    {
        auto it = p_.find(key);
        if (it == p_.end()) {
            throw precondition_error("missing parameter '" + key + "' for formula " + name_);
        }
        return it->second;
    }
    mpq_class nonneg(const std::string &key) const
    {
        const mpq_class v = get(key);
        if (v < 0) {
            throw precondition_error("parameter '" + key + "' must be >= 0");
        }
        return v;
    }
    mpq_class icl_a() const
    {
        const mpq_class v = get("a");
        if (v < 1) {
            throw precondition_error("parameter 'a' must be >= 1");
        }
        return v;
    }
    mpz_class positive_int(const std::string &key) const
    {
        const mpq_class v = get(key);
        if (v.get_den() != 1 || v < 1) {
            throw precondition_error("parameter '" + key + "' must be a positive integer");
        }
        return v.get_num();
    }

private:
    std::string name_;
    const BoundParams &p_;
};

} // namespace

const std::vector<BoundFormula> &all_bound_formulas()
{
    static const std::vector<BoundFormula> ids = [] {
        std::vector<BoundFormula> v;
        for (const auto &e : catalog()) {
            v.push_back(e.id);
        }
        return v;
    }();
    return ids;
}

std::string formula_name(BoundFormula f)
{
    return info(f).name;
}

BoundFormula formula_from_name(const std::string &name)
{
    for (const auto &e : catalog()) {
        if (name == e.name) {
            return e.id;
        }
    }
    throw precondition_error("unknown formula '" + name + "'");
}

const std::vector<std::string> &formula_parameters(BoundFormula f)
{
    return info(f).params;
}

std::string formula_expression(BoundFormula f)
{
    return info(f).expression;
}

mpz_class evaluate_bound(BoundFormula f, const BoundParams &params, long i)
{
    if (i < 0) {
        throw precondition_error("i must be >= 0");
    }
    const Params p(f, params);
    const mpq_class iq(i);
    switch (f) {
    case BoundFormula::prop43i: {
        const mpq_class a = p.icl_a();
        return floor_q(a * iq + a * p.nonneg("nu") + a * p.nonneg("iI") + p.nonneg("b"));
    }
    case BoundFormula::prop43ii: {
        const mpq_class a = p.icl_a();
        const mpq_class i_i = p.nonneg("iI");
        return floor_q((a + p.nonneg("c")) * (iq + i_i) + std::max(p.nonneg("b"), i_i));
    }
    case BoundFormula::thm45:
        return floor_q(iq + p.icl_a() * p.nonneg("nu") + p.nonneg("iI") + p.nonneg("b"));
    case BoundFormula::cor48_artin:
        return floor_q(2 * iq + 3 * p.nonneg("max_ord"));
    case BoundFormula::ex433:
        return floor_q(iq + p.nonneg("nu") + p.nonneg("ord_g"));
    case BoundFormula::ex434:
        return floor_q(iq + std::max(p.nonneg("k"), mpq_class(p.nonneg("nu") + 1)));
    case BoundFormula::lem64: {
        const mpq_class a2 = 2 * p.icl_a();
        const mpz_class n = p.positive_int("n");
        const unsigned long lg = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
        mpq_class power(1);
        mpq_class geometric(0);
        for (unsigned long j = 0; j <= lg; ++j) {
            geometric += power;
            power *= a2;
        }
        return floor_q(power * (iq + p.nonneg("iP") + p.nonneg("iI")) + p.nonneg("b") * geometric);
    }
    case BoundFormula::lem66: {
        const mpz_class n = p.positive_int("n");
        return n * ceil_q((iq + p.nonneg("iI")) / n) + floor_q(n * p.nonneg("c"));
    }
    case BoundFormula::prop72:
        return floor_q(iq + p.nonneg("iI") + p.positive_int("n") * (p.nonneg("c") + 1));
    case BoundFormula::prop73: {
        const mpq_class t(p.positive_int("t"));
        return floor_q(iq + p.nonneg("iI") + t * p.nonneg("iJn")
                       + t * p.positive_int("n") * (p.nonneg("c") + 1));
    }
    case BoundFormula::prop74: {
        const mpq_class a(p.positive_int("a"));
        const mpq_class n(p.positive_int("n"));
        const mpq_class t(p.positive_int("t"));
        return floor_q((iq - a) / (n * t)) - floor_q(t * (a + n));
    }
    case BoundFormula::lin31:
        return floor_q(iq + p.nonneg("iI"));
    }
    throw std::logic_error("unknown formula");
}

CrossCheckReport cross_check_bound(BoundFormula f, const BoundParams &params,
                                   const std::vector<std::pair<long, mpz_class>> &empirical)
{
    CrossCheckReport rep{f, {}, true};
    for (const auto &[i, measured] : empirical) {
        const mpz_class bound = evaluate_bound(f, params, i);
        const bool within = measured <= bound;
        rep.points.push_back({i, measured, bound, within});
        rep.all_within = rep.all_within && within;
    }
    return rep;
}

long quadratic_exceeds_affine(const mpq_class &alpha, const mpq_class &beta)
{
    long i = 0;
    while (mpq_class(i * i - 1) <= alpha * i + beta) {
        ++i;
    }
    return i;
}

} // namespace artin
