#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include <artin/artin_rees.hpp>
#include <artin/beta.hpp>
#include <artin/bounds.hpp>
#include <artin/cli.hpp>
#include <artin/errors.hpp>
#include <artin/order.hpp>
#include <artin/parse.hpp>
#include <artin/solvers.hpp>
#include <artin/witnesses.hpp>

namespace artin
{

using nlohmann::json;

json Report::to_json() const
{
    json j;
    j["command"] = command;
    j["ring"] = ring;
    j["params"] = params;
    j["result"] = result;
    j["certified_up_to"] = certified_up_to ? json(*certified_up_to) : json(nullptr);
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["warnings"] = warnings;
    return j;
}

namespace
{

std::string csv_cell(const json &v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    }
    return s;
}

} // namespace

std::string Report::to_csv() const
{
    std::ostringstream out;
    if (!csv_rows.empty()) {
        std::vector<std::string> keys;
        for (const auto &[k, v] : csv_rows.front().items()) {
            keys.push_back(k);
        }
        for (std::size_t c = 0; c < keys.size(); ++c) {
            out << (c ? "," : "") << keys[c];
        }
        out << "\n";
        for (const auto &row : csv_rows) {
            for (std::size_t c = 0; c < keys.size(); ++c) {
                out << (c ? "," : "") << (row.contains(keys[c]) ? csv_cell(row[keys[c]]) : "");
            }
            out << "\n";
        }
        return out.str();
    }
    out << "key,value\n";
    for (const auto &[k, v] : result.items()) {
        out << k << "," << csv_cell(v) << "\n";
    }
    return out.str();
}

namespace
{

json order_json(const ExtOrder &o)
{
    return o.is_exact() ? json(o.value()) : json(o.to_string());
}

json q_json(const mpq_class &q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return json(q.get_num().get_si());
    }
    return json(q.get_str());
}

json z_json(const mpz_class &z)
{
    return z.fits_slong_p() ? json(z.get_si()) : json(z.get_str());
}

json count_json(double v)
{
    if (v >= 0 && v < 9007199254740992.0 && v == static_cast<double>(static_cast<std::uint64_t>(v))) {
        return json(static_cast<std::uint64_t>(v));
    }
    return json(v);
}

json series_json(const std::vector<TruncatedSeries> &v)
{
    json a = json::array();
    for (const auto &s : v) {
        a.push_back(format_series(s));
    }
    return a;
}

mpq_class parse_rational(const std::string &text, const std::string &what)
{
    try {
        mpq_class q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument &) {
        throw precondition_error("malformed rational for " + what + ": '" + text + "'");
    }
}

std::vector<std::string> split_names(const std::string &text)
{
    std::vector<std::string> names;
    for (auto &n : split_list(text)) {
        const auto b = n.find_first_not_of(" \t");
        const auto e = n.find_last_not_of(" \t");
        names.push_back(n.substr(b, e - b + 1));
    }
    return names;
}

std::vector<TruncatedSeries> parse_series_list(const std::string &text, const RingSpec &ring)
{
    std::vector<TruncatedSeries> out;
    for (const auto &item : split_list(text)) {
        out.push_back(parse_poly(item, ring));
    }
    return out;
}

std::vector<std::vector<TruncatedSeries>> parse_module(const std::string &text, const RingSpec &ring)
{
    std::vector<std::vector<TruncatedSeries>> out;
    for (auto item : split_list(text)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        item = item.substr(b, e - b + 1);
        if (item.size() < 2 || !((item.front() == '(' && item.back() == ')')
                                 || (item.front() == '[' && item.back() == ']'))) {
            throw precondition_error("module generators must be written as (a,b,...)");
        }
        out.push_back(parse_series_list(item.substr(1, item.size() - 2), ring));
    }
    return out;
}

json pair_json(const IclPair &p)
{
    return json{{"g", format_series(p.g)},
                {"h", format_series(p.h)},
                {"nu_g", order_json(p.nu_g)},
                {"nu_h", order_json(p.nu_h)},
                {"nu_gh", order_json(p.nu_gh)}};
}

json certificate_json(const SolveCertificate &c)
{
    json prox = json::array();
    for (const auto &o : c.proximity) {
        prox.push_back(order_json(o));
    }
    bool meets = true;
    for (std::size_t j = 0; j < c.proximity.size(); ++j) {
        meets = meets && c.proximity[j] >= ExtOrder::exact(c.required_proximity[j]);
    }
    return json{{"input", series_json(c.input)},
                {"output", series_json(c.output)},
                {"level_i", c.level_i},
                {"proximity", prox},
                {"required_proximity", c.required_proximity},
                {"proximity_met", meets},
                {"residual_order", order_json(c.residual_order)},
                {"residual_zero", !c.residual_order.is_exact()},
                {"regularity_assumed", c.regularity_assumed},
                {"correction_steps", c.correction_steps}};
}

json family_json(const WitnessFamily &w)
{
    return json{{"i", w.i},
                {"x1", format_series(w.x1)},
                {"x2", format_series(w.x2)},
                {"x3", format_series(w.x3)},
                {"x4", format_series(w.x4)},
                {"residual", format_series(w.residual)},
                {"residual_order", order_json(w.residual_order)},
                {"vanishing_binomials", w.vanishing_binomials},
                {"x3_congruent_mod_m_i", w.x3_congruent},
                {"x1_initial_coprime_to_T1T2", w.x1_initial_coprime}};
}

json irr_json(const IrreducibilityCertificate &c)
{
    json j{{"i", c.i},
           {"p", c.p},
           {"search_space_size", count_json(c.search_space_size)},
           {"factorizations_found", c.factorizations_found},
           {"method", c.method}};
    if (c.counterexample) {
        j["counterexample"] = {format_series(c.counterexample->first),
                               format_series(c.counterexample->second)};
    }
    return j;
}

struct Globals {
    std::string vars = "T1,T2,T3";
    std::uint32_t characteristic = 0;
    unsigned trunc = 8;
    std::uint64_t seed = 1;
    double budget = 1e7;
    std::string format = "json";
    std::string out;
};

struct Options {
    std::string x, ideal, module, f, h, y, xs, system, unknowns, a = "1", sampling = "monomials",
                                                                   formula, points, affine;
    unsigned deg_max = 3, n_max = 4, i = 0, k = 1, count = 20;
    std::optional<unsigned> i_max, range, p;
    long b = 0;
    bool assume_regular = false, envelope = false;
    std::map<std::string, std::string> bound_params;
};

RingSpec make_ring(const Globals &g)
{
    const Field field = g.characteristic == 0 ? Field::rationals() : Field::prime(g.characteristic);
    return RingSpec(split_names(g.vars), field, g.trunc);
}

json ring_json(const RingSpec &ring)
{
    return json{{"vars", ring.var_names()},
                {"char", ring.field().characteristic()},
                {"trunc", ring.trunc()}};
}

void require(const std::string &value, const std::string &flag)
{
    if (value.empty()) {
        throw precondition_error("missing required option " + flag);
    }
}

BoundParams bound_params(const Options &o)
{
    BoundParams p;
    for (const auto &[k, v] : o.bound_params) {
        if (!v.empty()) {
            p[k] = parse_rational(v, k);
        }
    }
    return p;
}

json bound_params_json(const BoundParams &p)
{
    json j = json::object();
    for (const auto &[k, v] : p) {
        j[k] = q_json(v);
    }
    return j;
}


void handle(const std::string &name, const Globals &g, const Options &o, Report &rep)
{
    const RingSpec ring = make_ring(g);
    rep.command = name;
    rep.ring = ring_json(ring);

    if (name == "ord") {
        require(o.x, "--x");
        rep.params = {{"x", o.x}};
        json rows = json::array();
        for (const auto &x : parse_series_list(o.x, ring)) {
            rows.push_back({{"x", format_series(x)}, {"ord", order_json(x.ord())}});
        }
        rep.result = {{"values", rows}};
        rep.csv_rows = rows;
        rep.certified_up_to = ring.trunc();
    } else if (name == "nu") {
        require(o.x, "--x");
        rep.params = {{"ideal", o.ideal}, {"x", o.x}};
        const OrderFunction nu_i(IdealSpec(ring, parse_series_list(o.ideal, ring)));
        json rows = json::array();
        for (const auto &x : parse_series_list(o.x, ring)) {
            rows.push_back({{"x", format_series(x)}, {"nu", order_json(nu_i(x))}});
        }
        rep.result = {{"values", rows}};
        rep.csv_rows = rows;
        rep.certified_up_to = ring.trunc();
    } else if (name == "nubar") {
        require(o.x, "--x");
        rep.params = {{"ideal", o.ideal}, {"x", o.x}, {"n_max", o.n_max}};
        const IdealSpec ideal(ring, parse_series_list(o.ideal, ring));
        const TruncatedSeries x = parse_poly(o.x, ring);
        const NuBarEstimate est = nu_bar_estimate(ideal, x, o.n_max);
        json samples = json::array();
        for (const auto &s : est.samples) {
            samples.push_back({{"n", s.n}, {"nu", order_json(s.nu)}});
        }
        rep.result = {{"estimate", est.estimate ? q_json(*est.estimate) : json(nullptr)},
                      {"nu", order_json(est.samples.front().nu)},
                      {"samples", samples},
                      {"saw_at_least", est.saw_at_least},
                      {"truncation_limited", est.truncation_limited}};
        rep.csv_rows = samples;
        rep.certified_up_to = ring.trunc();
        if (est.truncation_limited) {
            rep.warnings.push_back("truncation-limited: n_max * estimate exceeds truncation");
        }
        if (est.saw_at_least) {
            rep.warnings.push_back("some nu(x^n) reached the truncation and was excluded");
        }
    } else if (name == "ar-index") {
        rep.params = {{"ideal", o.ideal}, {"module", o.module}};
        if (o.range) {
            rep.params["range"] = *o.range;
        }
        ArIndexResult res = [&] {
            if (!o.module.empty()) {
                const auto gens = parse_module(o.module, ring);
                const std::size_t arity = gens.empty() ? 1 : gens.front().size();
                return artin_rees_index(ModuleSpec(ring, arity, gens), o.range);
            }
            return artin_rees_index(IdealSpec(ring, parse_series_list(o.ideal, ring)), o.range);
        }();
        rep.result = {{"i0", res.i0}, {"certified_up_to", res.certified_up_to}, {"shifts", res.shifts}};
        if (res.tight_witness) {
            rep.result["tight_witness"] = {{"i", res.tight_witness->i},
                                           {"element", series_json(res.tight_witness->element)}};
        } else {
            rep.result["tight_witness"] = nullptr;
        }
        json rows = json::array();
        for (std::size_t i = 0; i < res.shifts.size(); ++i) {
            rows.push_back({{"i", i}, {"shift", res.shifts[i]}});
        }
        rep.csv_rows = rows;
        rep.certified_up_to = res.certified_up_to;
    } else if (name == "icl-scan" || name == "valcheck") {
        rep.params = {{"ideal", o.ideal}, {"deg_max", o.deg_max}, {"sampling", o.sampling}};
        const IdealSpec ideal(ring, parse_series_list(o.ideal, ring));
        IclSampling sampling;
        sampling.budget = g.budget;
        if (o.sampling == "random") {
            sampling.mode = IclSampling::Mode::random_rational;
            sampling.count = o.count;
            sampling.seed = g.seed;
            rep.seed = g.seed;
            rep.params["count"] = o.count;
        } else if (o.sampling == "exhaustive") {
            sampling.mode = IclSampling::Mode::exhaustive_prime;
        } else if (o.sampling != "monomials") {
            throw precondition_error("unknown sampling '" + o.sampling + "'");
        }
        rep.certified_up_to = 2 * o.deg_max;
        if (name == "valcheck") {
            const ValuationCheck vc = valuation_check(ideal, o.deg_max, sampling);
            rep.result = {{"holds", vc.holds},
                          {"pairs_scanned", vc.pairs_scanned},
                          {"counterexample",
                           vc.counterexample ? pair_json(*vc.counterexample) : json(nullptr)}};
            return;
        }
        const mpq_class a = parse_rational(o.a, "a");
        rep.params["a"] = q_json(a);
        const IclReport icl = icl_scan(ideal, o.deg_max, a, sampling);
        json attaining = json::array();
        json violations = json::array();
        for (const auto &p : icl.attaining_pairs) {
            attaining.push_back(pair_json(p));
        }
        for (const auto &p : icl.violations) {
            violations.push_back(pair_json(p));
        }
        rep.result = {{"a", q_json(icl.a)},
                      {"b_min", icl.b_min ? json(*icl.b_min) : json("unbounded-at-truncation")},
                      {"attaining_pairs", attaining},
                      {"violations", violations},
                      {"scan_degree", icl.scan_degree},
                      {"elements", icl.elements},
                      {"pairs_scanned", icl.pairs_scanned},
                      {"certified_note", icl.certified_note}};
        if (o.envelope) {
            json env = json::array();
            for (const auto &pt : icl_envelope(ideal, o.deg_max, sampling)) {
                env.push_back({{"a", q_json(pt.a)},
                               {"b_min", pt.b_min ? json(*pt.b_min) : json("unbounded-at-truncation")}});
            }
            rep.result["envelope"] = env;
        }
        json rows = json::array();
        for (const auto &p : icl.attaining_pairs) {
            json r = pair_json(p);
            r["kind"] = "attaining";
            rows.push_back(r);
        }
        for (const auto &p : icl.violations) {
            json r = pair_json(p);
            r["kind"] = "violation";
            rows.push_back(r);
        }
        rep.csv_rows = rows;
        if (!icl.b_min) {
            rep.warnings.push_back("unbounded-at-truncation: some product lies in the ideal "
                                   "while both factors do not");
        }
    } else if (name == "solve-linreg") {
        require(o.f, "--f");
        require(o.x, "--x");
        rep.params = {{"f", o.f}, {"x", o.x}, {"i", o.i}, {"assume_regular", o.assume_regular}};
        const SolveCertificate c = solve_linear_regular(parse_series_list(o.f, ring),
                                                        parse_series_list(o.x, ring), o.i,
                                                        o.assume_regular);
        rep.result = certificate_json(c);
        rep.certified_up_to = ring.trunc();
        if (c.regularity_assumed) {
            rep.warnings.push_back("regularity of initial forms asserted by caller, not verified");
        }
    } else if (name == "solve-fxhy") {
        require(o.f, "--f");
        require(o.h, "--h");
        rep.params = {{"k", o.k}, {"f", o.f}, {"h", o.h}, {"x", o.x}, {"y", o.y}, {"i", o.i}};
        const auto value = [&](const std::string &s) {
            return s.empty() ? TruncatedSeries(ring) : parse_poly(s, ring);
        };
        const SolveCertificate c = solve_fx_hy(o.k, parse_poly(o.f, ring), parse_poly(o.h, ring),
                                               value(o.x), value(o.y), o.i);
        rep.result = certificate_json(c);
        rep.certified_up_to = ring.trunc();
    } else if (name == "stable-ar") {
        require(o.xs, "--xs");
        const mpq_class a = parse_rational(o.a, "a");
        rep.params = {{"ideal", o.ideal}, {"xs", o.xs}, {"a", q_json(a)}, {"b", o.b}};
        const StableArReport st = stable_ar_scan(IdealSpec(ring, parse_series_list(o.ideal, ring)),
                                                 parse_series_list(o.xs, ring), a, o.b);
        json entries = json::array();
        json rows = json::array();
        long cert = -1;
        for (const auto &e : st.entries) {
            json pts = json::array();
            for (const auto &p : e.points) {
                json pj{{"i", p.i},
                        {"l_min", p.l_min},
                        {"l_min_found", p.l_min_found},
                        {"holds", p.holds ? json(*p.holds) : json(nullptr)}};
                pts.push_back(pj);
                pj["x"] = format_series(e.x);
                rows.push_back(pj);
            }
            entries.push_back({{"x", format_series(e.x)},
                               {"nu", order_json(e.nu)},
                               {"skipped", e.skipped},
                               {"certified_up_to", e.certified_up_to},
                               {"points", pts}});
            if (!e.skipped && (cert < 0 || long(e.certified_up_to) < cert)) {
                cert = e.certified_up_to;
            }
        }
        json grid = json::array();
        for (const auto &gp : st.grid) {
            grid.push_back({{"a", q_json(gp.a)},
                            {"b_min", gp.b_min},
                            {"lower_bound_only", gp.lower_bound_only}});
        }
        rep.result = {{"all_hold", st.all_hold}, {"checks", st.checks}, {"entries", entries},
                      {"grid", grid}};
        rep.csv_rows = rows;
        if (cert >= 0) {
            rep.certified_up_to = cert;
        }
    } else if (name == "beta-lb") {
        require(o.system, "--system");
        require(o.unknowns, "--unknowns");
        rep.params = {{"system", o.system}, {"unknowns", o.unknowns}, {"i", o.i}};
        const PolySystem sys = PolySystem::parse(ring, split_names(o.unknowns), split_list(o.system));
        unsigned lo = o.i, hi = o.i;
        if (o.i_max) {
            lo = 0;
            hi = *o.i_max;
            rep.params["i_max"] = hi;
        }
        json rows = json::array();
        for (unsigned i = lo; i <= hi; ++i) {
            const BetaResult b = beta_lower_bound_bruteforce(sys, i, g.budget);
            json r{{"i", i},
                   {"beta", b.beta},
                   {"classes", b.classes},
                   {"good_classes", b.good_classes},
                   {"nodes", b.nodes},
                   {"state_space", count_json(b.state_space)}};
            if (b.worst_class) {
                r["worst_class"] = series_json(*b.worst_class);
            }
            rows.push_back(r);
        }
        rep.result = {{"values", rows}};
        if (rows.size() == 1) {
            rep.result["beta"] = rows[0]["beta"];
        }
        rep.csv_rows = rows;
        rep.certified_up_to = ring.trunc();
    } else if (name == "witness") {
        if (o.i_max) {
            rep.params = {{"i_max", *o.i_max}};
            std::vector<std::uint32_t> primes{2};
            if (ring.field().is_prime_field()) {
                primes = {ring.field().characteristic()};
            }
            const LowerBoundReport lb = lower_bound_certificate(*o.i_max, ring, primes, g.budget);
            json entries = json::array();
            for (const auto &e : lb.entries) {
                json ej = family_json(e.family);
                ej["lower_bound"] = e.lower_bound;
                ej["certificate"] = e.certificate ? irr_json(*e.certificate) : json(nullptr);
                entries.push_back(ej);
                if (!e.family.vanishing_binomials.empty()) {
                    rep.warnings.push_back("i = " + std::to_string(e.family.i)
                                           + ": some binomial coefficients vanish in this field");
                }
            }
            rep.result = {{"entries", entries}, {"statement", lb.statement}};
            rep.csv_rows = entries;
            rep.certified_up_to = long(*o.i_max);
        } else {
            rep.params = {{"i", o.i}};
            const WitnessFamily w = monomial_witness_family(o.i, ring);
            rep.result = family_json(w);
            rep.certified_up_to = long(o.i);
            if (!w.vanishing_binomials.empty()) {
                rep.warnings.push_back("some binomial coefficients vanish in this field");
            }
        }
    } else if (name == "irr-check") {
        const std::uint32_t p = o.p ? *o.p : ring.field().characteristic();
        if (p == 0) {
            throw precondition_error("irr-check needs --p or a prime --char");
        }
        rep.params = {{"i", o.i}, {"p", p}};
        rep.result = irr_json(irreducibility_exhaustive(o.i, p, g.budget));
        rep.certified_up_to = long(o.i);
    } else if (name == "bound") {
        require(o.formula, "--formula");
        const BoundFormula f = formula_from_name(o.formula);
        const BoundParams params = bound_params(o);
        rep.params = bound_params_json(params);
        rep.params["formula"] = o.formula;
        rep.params["i"] = o.i;
        rep.result = {{"formula", o.formula},
                      {"expression", formula_expression(f)},
                      {"value", z_json(evaluate_bound(f, params, o.i))}};
        if (o.i_max) {
            rep.params["i_max"] = *o.i_max;
            json rows = json::array();
            for (unsigned i = 0; i <= *o.i_max; ++i) {
                rows.push_back({{"i", i}, {"bound", z_json(evaluate_bound(f, params, i))}});
            }
            rep.result["table"] = rows;
            rep.csv_rows = rows;
        }
    } else if (name == "cross-check") {
        if (!o.affine.empty()) {
            const auto parts = split_list(o.affine);
            if (parts.size() != 2) {
                throw precondition_error("--affine expects alpha,beta");
            }
            const mpq_class alpha = parse_rational(parts[0], "alpha");
            const mpq_class beta = parse_rational(parts[1], "beta");
            rep.params = {{"affine", {q_json(alpha), q_json(beta)}}};
            const long first = quadratic_exceeds_affine(alpha, beta);
            rep.result = {{"no_affine_bound", true},
                          {"first_exceeding_i", first},
                          {"lower_bound", "i^2 - 1"},
                          {"lower_bound_at_first", long(first) * first - 1}};
            return;
        }
        require(o.formula, "--formula");
        const BoundFormula f = formula_from_name(o.formula);
        const BoundParams params = bound_params(o);
        rep.params = bound_params_json(params);
        rep.params["formula"] = o.formula;
        std::vector<std::pair<long, mpz_class>> empirical;
        if (!o.system.empty()) {
            require(o.unknowns, "--unknowns");
            const unsigned hi = o.i_max.value_or(o.i);
            rep.params["system"] = o.system;
            rep.params["unknowns"] = o.unknowns;
            rep.params["i_max"] = hi;
            const PolySystem sys =
                PolySystem::parse(ring, split_names(o.unknowns), split_list(o.system));
            for (unsigned i = 0; i <= hi; ++i) {
                empirical.emplace_back(long(i), beta_lower_bound_bruteforce(sys, i, g.budget).beta);
            }
            rep.certified_up_to = ring.trunc();
        } else {
            require(o.points, "--points or --system");
            rep.params["points"] = o.points;
            for (const auto &item : split_list(o.points)) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) {
                    throw precondition_error("points are written i:value");
                }
                empirical.emplace_back(std::stol(item.substr(0, colon)),
                                       mpz_class(item.substr(colon + 1)));
            }
        }
        const CrossCheckReport cc = cross_check_bound(f, params, empirical);
        json rows = json::array();
        for (const auto &pt : cc.points) {
            rows.push_back({{"i", pt.i},
                            {"measured", z_json(pt.measured)},
                            {"bound", z_json(pt.bound)},
                            {"within", pt.within}});
        }
        rep.result = {{"formula", o.formula}, {"all_within", cc.all_within}, {"points", rows}};
        rep.csv_rows = rows;
        if (!cc.all_within) {
            rep.warnings.push_back("a measured value exceeds the bound");
        }
    }
}

} // namespace

CommandOutcome run_command(const std::vector<std::string> &argv)
{
    CLI::App app{"Exact computations in truncated power series rings", "artin-lab"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Options o;
    app.add_option("--vars", g.vars, "Comma-separated ring variables");
    app.add_option("--char", g.characteristic, "0 or a prime below 2^31");
    app.add_option("--trunc", g.trunc, "Truncation order D");
    app.add_option("--seed", g.seed, "Seed for random sampling");
    app.add_option("--budget", g.budget, "Cap on enumeration size and scanned pairs");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "Also write the report to this file");

    const std::vector<std::string> params{"a", "b", "c", "iI", "iP", "iJn", "n", "t", "nu", "k"};
    std::map<std::string, CLI::App *> subs;
    auto sub = [&](const std::string &name, const std::string &help) {
        CLI::App *s = app.add_subcommand(name, help);
        subs[name] = s;
        return s;
    };
    auto *ord = sub("ord", "m-adic order of series");
    ord->add_option("--x", o.x, "Series (list allowed)");
    auto *nu_cmd = sub("nu", "Order function modulo an ideal");
    nu_cmd->add_option("--ideal", o.ideal, "Generators");
    nu_cmd->add_option("--x", o.x, "Series (list allowed)");
    auto *nubar = sub("nubar", "Estimate of lim nu(x^n)/n");
    nubar->add_option("--ideal", o.ideal);
    nubar->add_option("--x", o.x);
    nubar->add_option("--nmax", o.n_max);
    auto *ar = sub("ar-index", "Artin-Rees index of an ideal or module");
    ar->add_option("--ideal", o.ideal);
    ar->add_option("--module", o.module, "Vectors such as (T1,0);(0,T2)");
    ar->add_option("--range", o.range, "Check only i up to this value");
    for (const char *name : {"icl-scan", "valcheck"}) {
        auto *s = sub(name, std::string(name) == "icl-scan" ? "Scan for ICL constants"
                                                            : "Test additivity of nu");
        s->add_option("--ideal", o.ideal);
        s->add_option("--deg-max", o.deg_max);
        s->add_option("--sampling", o.sampling, "monomials, random or exhaustive");
        s->add_option("--count", o.count, "Random elements added to the monomials");
        if (std::string(name) == "icl-scan") {
            s->add_option("--a", o.a, "ICL slope, e.g. 1 or 3/2");
            s->add_flag("--envelope", o.envelope, "Also scan a in {1, 3/2, 2}");
        }
    }
    auto *lin = sub("solve-linreg", "Exact solution of sum f_j X_j = 0");
    lin->add_option("--f", o.f);
    lin->add_option("--x", o.x);
    lin->add_option("--i", o.i);
    lin->add_flag("--assume-regular", o.assume_regular);
    auto *fxhy = sub("solve-fxhy", "Exact solution of f X + h Y = 0");
    fxhy->add_option("--k", o.k);
    fxhy->add_option("--f", o.f);
    fxhy->set_help_flag("--help", "Print this help message and exit");
    fxhy->add_option("--h", o.h);
    fxhy->add_option("--x", o.x);
    fxhy->add_option("--y", o.y);
    fxhy->add_option("--i", o.i);
    auto *stable = sub("stable-ar", "Uniform Artin-Rees inclusion scan");
    stable->add_option("--ideal", o.ideal);
    stable->add_option("--xs", o.xs);
    stable->add_option("--a", o.a);
    stable->add_option("--b", o.b);
    auto *beta = sub("beta-lb", "Exhaustive lower bound for the Artin function");
    beta->add_option("--system", o.system, "Equations in ring variables and unknowns");
    beta->add_option("--unknowns", o.unknowns);
    beta->add_option("--i", o.i);
    beta->add_option("--i-max", o.i_max, "Scan i = 0..i_max");
    auto *wit = sub("witness", "Lower-bound family for X1*X2 - X3*X4");
    wit->add_option("--i", o.i);
    wit->add_option("--i-max", o.i_max, "Families and certificates for i = 1..i_max");
    auto *irr = sub("irr-check", "Exhaustive irreducibility certificate");
    irr->add_option("--i", o.i);
    irr->add_option("--p", o.p);
    for (const char *name : {"bound", "cross-check"}) {
        auto *s = sub(name, std::string(name) == "bound" ? "Evaluate a bound formula"
                                                         : "Compare measurements with a bound");
        s->add_option("--formula", o.formula);
        s->add_option("--i", o.i);
        s->add_option("--i-max", o.i_max);
        for (const auto &pn : params) {
            s->add_option("--" + pn, o.bound_params[pn]);
        }
        s->add_option("--ord-g", o.bound_params["ord_g"]);
        s->add_option("--max-ord", o.bound_params["max_ord"]);
        if (std::string(name) == "cross-check") {
            s->add_option("--points", o.points, "Measured values i:v;i:v");
            s->add_option("--system", o.system);
            s->add_option("--unknowns", o.unknowns);
            s->add_option("--affine", o.affine, "alpha,beta vs the quadratic lower bound");
        }
    }

    CommandOutcome outcome;
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        std::ostringstream os;
        app.exit(e, os, os);
        outcome.output = os.str();
        return outcome;
    } catch (const CLI::ParseError &e) {
        outcome.exit_code = 2;
        outcome.error = std::string("usage error: ") + e.what();
        return outcome;
    }

    Report rep;
    try {
        std::string name;
        for (const auto &[n, s] : subs) {
            if (s->parsed()) {
                name = n;
            }
        }
        handle(name, g, o, rep);
    } catch (const budget_exceeded &e) {
        outcome.exit_code = 3;
        outcome.error = std::string("budget exceeded: ") + e.what();
        return outcome;
    } catch (const std::invalid_argument &e) {
        outcome.exit_code = 2;
        outcome.error = std::string("precondition violated: ") + e.what();
        return outcome;
    } catch (const std::domain_error &e) {
        outcome.exit_code = 2;
        outcome.error = std::string("precondition violated: ") + e.what();
        return outcome;
    }
    outcome.output = g.format == "csv" ? rep.to_csv() : rep.to_json().dump(2) + "\n";
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) {
            outcome.exit_code = 2;
            outcome.error = "cannot write " + g.out;
            return outcome;
        }
        f << outcome.output;
    }
    return outcome;
}

} // namespace artin
