#include <algorithm>

#include <artin/errors.hpp>
#include <artin/subspace.hpp>

namespace artin
{

SparseVec axpy(const Field &f, const SparseVec &v, const Scalar &c, const SparseVec &w)
{
    SparseVec out;
    out.reserve(v.size() + w.size());
    auto a = v.begin();
    auto b = w.begin();
    while (a != v.end() || b != w.end()) {
        if (b == w.end() || (a != v.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == v.end() || b->first < a->first) {
            out.emplace_back(b->first, f.mul(c, b->second));
            ++b;
        } else {
            Scalar s = f.add(a->second, f.mul(c, b->second));
            if (!Field::is_zero(s)) {
                out.emplace_back(a->first, std::move(s));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

SparseVec EchelonBasis::reduce(SparseVec v) const
{
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        // The row starts at this column, so entries before pos are untouched
        // and the entry at pos cancels.
        const Scalar c = field_.neg(v[pos].second);
        v = axpy(field_, v, c, it->second);
    }
    return v;
}

bool EchelonBasis::insert(const SparseVec &v)
{
    SparseVec r = reduce(v);
    if (r.empty()) {
        return false;
    }
    const Scalar lead_inv = field_.inv(r.front().second);
    for (auto &[col, val] : r) {
        val = field_.mul(val, lead_inv);
    }
    const std::size_t pivot = r.front().first;
    for (auto &[p, row] : rows_) {
        if (p > pivot) {
            break;
        }
        auto hit = std::lower_bound(row.begin(), row.end(), pivot,
                                    [](const auto &e, std::size_t c) { return e.first < c; });
        if (hit != row.end() && hit->first == pivot) {
            const Scalar c = field_.neg(hit->second);
            row = axpy(field_, row, c, r);
        }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

CoefficientSpace::CoefficientSpace(RingSpec ring, std::size_t arity)
    : ring_(std::move(ring)), arity_(arity), table_(&ring_.monomials())
{
    if (arity_ == 0) {
        throw precondition_error("arity must be at least 1");
    }
    ncols_ = arity_ * table_->size();
}

std::size_t CoefficientSpace::column(std::size_t component, const Monomial &m) const
{
    const unsigned d = m.degree();
    const std::size_t idx = table_->index_of(m);
    return arity_ * table_->degree_offset(d) + component * table_->degree_count(d)
           + (idx - table_->degree_offset(d));
}

std::size_t CoefficientSpace::degree_start(unsigned d) const
{
    if (d > ring_.trunc()) {
        return ncols_;
    }
    return arity_ * table_->degree_offset(d);
}

unsigned CoefficientSpace::degree_of(std::size_t col) const
{
    unsigned lo = 0;
    unsigned hi = ring_.trunc();
    while (lo < hi) {
        const unsigned mid = (lo + hi + 1) / 2;
        if (degree_start(mid) <= col) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::pair<std::size_t, const Monomial *> CoefficientSpace::decode(std::size_t col) const
{
    const unsigned d = degree_of(col);
    const std::size_t r = col - degree_start(d);
    const std::size_t cnt = table_->degree_count(d);
    return {r / cnt, &(*table_)[table_->degree_offset(d) + r % cnt]};
}

SparseVec CoefficientSpace::encode(const std::vector<TruncatedSeries> &v) const
{
    if (v.size() != arity_) {
        throw precondition_error("arity mismatch: expected " + std::to_string(arity_)
                                 + " components, got " + std::to_string(v.size()));
    }
    SparseVec out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!(v[k].ring() == ring_)) {
            throw precondition_error("incompatible rings");
        }
        for (const auto &[m, c] : v[k].terms()) {
            out.emplace_back(column(k, m), c);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

std::vector<TruncatedSeries> CoefficientSpace::decode_vector(const SparseVec &v) const
{
    std::vector<TruncatedSeries> out(arity_, TruncatedSeries(ring_));
    for (const auto &[col, c] : v) {
        auto [comp, mono] = decode(col);
        out[comp].add_term(*mono, c);
    }
    return out;
}

std::vector<std::vector<TruncatedSeries>> Subspace::basis_vectors() const
{
    std::vector<std::vector<TruncatedSeries>> out;
    for (const auto &[p, row] : basis_.rows()) {
        out.push_back(space_.decode_vector(row));
    }
    return out;
}

IdealSpec::IdealSpec(RingSpec r, std::vector<TruncatedSeries> gens)
    : ring(std::move(r)), generators(std::move(gens))
{
    for (const auto &g : generators) {
        if (!(g.ring() == ring)) {
            throw precondition_error("incompatible rings");
        }
    }
}

unsigned IdealSpec::max_generator_degree() const
{
    unsigned d = 0;
    for (const auto &g : generators) {
        d = std::max(d, g.max_degree());
    }
    return d;
}

ModuleSpec::ModuleSpec(RingSpec r, std::size_t p, std::vector<std::vector<TruncatedSeries>> gens)
    : ring(std::move(r)), arity(p), generators(std::move(gens))
{
    if (arity == 0) {
        throw precondition_error("arity must be at least 1");
    }
    for (const auto &g : generators) {
        if (g.size() != arity) {
            throw precondition_error("arity mismatch: generator has " + std::to_string(g.size())
                                     + " components, module arity is " + std::to_string(arity));
        }
        for (const auto &s : g) {
            if (!(s.ring() == ring)) {
                throw precondition_error("incompatible rings");
            }
        }
    }
}

ModuleSpec ModuleSpec::from_ideal(const IdealSpec &ideal)
{
    std::vector<std::vector<TruncatedSeries>> gens;
    for (const auto &g : ideal.generators) {
        gens.push_back({g});
    }
    return ModuleSpec(ideal.ring, 1, std::move(gens));
}

unsigned ModuleSpec::max_generator_degree() const
{
    unsigned d = 0;
    for (const auto &g : generators) {
        for (const auto &s : g) {
            d = std::max(d, s.max_degree());
        }
    }
    return d;
}

Subspace span_m_power_times(const ModuleSpec &module, unsigned j)
{
    Subspace out(CoefficientSpace(module.ring, module.arity));
    const auto &table = module.ring.monomials();
    const unsigned trunc = module.ring.trunc();
    for (const auto &g : module.generators) {
        const ExtOrder o = vector_ord(g);
        if (!o.is_exact()) {
            continue;
        }
        if (j + o.value() > trunc) {
            continue;
        }
        const std::size_t end = table.degree_offset(trunc - o.value() + 1);
        for (std::size_t idx = table.degree_offset(j); idx < end; ++idx) {
            std::vector<TruncatedSeries> prod;
            prod.reserve(g.size());
            for (const auto &s : g) {
                prod.push_back(s.times_monomial(table[idx]));
            }
            out.insert(prod);
        }
    }
    return out;
}

Subspace span_module(const ModuleSpec &module)
{
    return span_m_power_times(module, 0);
}

Subspace span_ideal(const IdealSpec &ideal)
{
    return span_module(ModuleSpec::from_ideal(ideal));
}

Subspace span_m_power(const RingSpec &ring, unsigned i, std::size_t arity)
{
    if (i > ring.trunc() + 1) {
        throw precondition_error("power of the maximal ideal must lie in [0, D+1], got "
                                 + std::to_string(i));
    }
    Subspace out(CoefficientSpace(ring, arity));
    const std::size_t start = out.space().degree_start(i);
    const Scalar one = ring.field().from_int(1);
    for (std::size_t col = start; col < out.space().ncols(); ++col) {
        out.insert_raw({{col, one}});
    }
    return out;
}

namespace
{

void check_same_space(const Subspace &u, const Subspace &v)
{
    if (!(u.ring() == v.ring())) {
        throw precondition_error("incompatible rings");
    }
    if (u.arity() != v.arity()) {
        throw precondition_error("arity mismatch");
    }
}

} // namespace

Subspace subspace_sum(const Subspace &u, const Subspace &v)
{
    check_same_space(u, v);
    Subspace out(u);
    for (const auto &[p, row] : v.basis().rows()) {
        out.insert_raw(row);
    }
    return out;
}

Subspace subspace_intersect(const Subspace &u, const Subspace &v)
{
    check_same_space(u, v);
    const std::size_t n = u.space().ncols();
    EchelonBasis stacked(u.ring().field(), 2 * n);
    for (const auto &[p, row] : u.basis().rows()) {
        SparseVec both(row);
        for (const auto &[c, val] : row) {
            both.emplace_back(c + n, val);
        }
        stacked.insert(both);
    }
    for (const auto &[p, row] : v.basis().rows()) {
        stacked.insert(row);
    }
    Subspace out(u.space());
    for (auto it = stacked.rows().lower_bound(n); it != stacked.rows().end(); ++it) {
        SparseVec tail;
        for (const auto &[c, val] : it->second) {
            tail.emplace_back(c - n, val);
        }
        out.insert_raw(tail);
    }
    return out;
}

Subspace intersect_m_power(const Subspace &u, unsigned n)
{
    Subspace out(u.space());
    const std::size_t start = u.space().degree_start(n);
    for (auto it = u.basis().rows().lower_bound(start); it != u.basis().rows().end(); ++it) {
        out.insert_raw(it->second);
    }
    return out;
}

bool contains(const Subspace &u, const Subspace &v)
{
    check_same_space(u, v);
    for (const auto &[p, row] : v.basis().rows()) {
        if (!u.basis().contains(row)) {
            return false;
        }
    }
    return true;
}

bool member(const std::vector<TruncatedSeries> &x, const Subspace &u)
{
    return u.basis().contains(u.space().encode(x));
}

bool member(const TruncatedSeries &x, const Subspace &u)
{
    return member(std::vector<TruncatedSeries>{x}, u);
}

std::vector<TruncatedSeries> normal_form(const std::vector<TruncatedSeries> &x, const Subspace &u)
{
    return u.space().decode_vector(u.basis().reduce(u.space().encode(x)));
}

ExtOrder distance_order(const std::vector<TruncatedSeries> &x, const Subspace &u)
{
    const SparseVec r = u.basis().reduce(u.space().encode(x));
    if (r.empty()) {
        return ExtOrder::at_least(u.ring().trunc() + 1);
    }
    return ExtOrder::exact(u.space().degree_of(r.front().first));
}

ExtOrder distance_order(const TruncatedSeries &x, const Subspace &u)
{
    return distance_order(std::vector<TruncatedSeries>{x}, u);
}

std::optional<std::vector<Scalar>> solve_combination(const Field &field, std::size_t ncols,
                                                     const std::vector<SparseVec> &vectors,
                                                     const SparseVec &target)
{
    // Rows (v_k | e_k); reducing (target | 0) to (0 | -c) yields the coefficients.
    EchelonBasis aug(field, ncols + vectors.size());
    const Scalar one = field.from_int(1);
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        SparseVec row(vectors[k]);
        row.emplace_back(ncols + k, one);
        aug.insert(row);
    }
    const SparseVec rem = aug.reduce(target);
    if (!rem.empty() && rem.front().first < ncols) {
        return std::nullopt;
    }
    std::vector<Scalar> coeffs(vectors.size(), Scalar(0));
    for (const auto &[c, val] : rem) {
        coeffs[c - ncols] = field.neg(val);
    }
    return coeffs;
}

} // namespace artin
