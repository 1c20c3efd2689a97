#include <artin/errors.hpp>
#include <artin/series.hpp>

namespace artin
{

ExtOrder operator+(const ExtOrder &a, const ExtOrder &b)
{
    if (!a.exact_) {
        return a;
    }
    if (!b.exact_) {
        return b;
    }
    return ExtOrder::exact(a.value_ + b.value_);
}

std::strong_ordering operator<=>(const ExtOrder &a, const ExtOrder &b)
{
    if (a.exact_ != b.exact_) {
        return a.exact_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
}

std::string ExtOrder::to_string() const
{
    return exact_ ? std::to_string(value_) : ">=" + std::to_string(value_);
}

TruncatedSeries TruncatedSeries::constant(const RingSpec &ring, const Scalar &c)
{
    return term(ring, Monomial::one(ring.num_vars()), c);
}

TruncatedSeries TruncatedSeries::variable(const RingSpec &ring, std::size_t index)
{
    if (index >= ring.num_vars()) {
        throw precondition_error("variable index out of range");
    }
    return term(ring, Monomial::variable(ring.num_vars(), index), ring.field().from_int(1));
}

TruncatedSeries TruncatedSeries::term(const RingSpec &ring, const Monomial &m, const Scalar &c)
{
    TruncatedSeries s(ring);
    s.add_term(m, ring.field().normalize(c));
    return s;
}

Scalar TruncatedSeries::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TruncatedSeries::add_term(const Monomial &m, const Scalar &c)
{
    if (m.degree() > ring_.trunc() || Field::is_zero(c)) {
        return;
    }
    const Field &f = ring_.field();
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = f.add(it->second, c);
        if (Field::is_zero(it->second)) {
            terms_.erase(it);
        }
    }
}

void TruncatedSeries::check_compatible(const TruncatedSeries &other) const
{
    if (!(ring_ == other.ring_)) {
        throw precondition_error("incompatible rings");
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &other) const
{
    check_compatible(other);
    TruncatedSeries r(*this);
    for (const auto &[m, c] : other.terms_) {
        r.add_term(m, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &other) const
{
    check_compatible(other);
    TruncatedSeries r(*this);
    const Field &f = ring_.field();
    for (const auto &[m, c] : other.terms_) {
        r.add_term(m, f.neg(c));
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    return scaled(ring_.field().from_int(-1));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &other) const
{
    check_compatible(other);
    TruncatedSeries r(ring_);
    const Field &f = ring_.field();
    const unsigned trunc = ring_.trunc();
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : other.terms_) {
            // Terms are sorted by degree, so the rest of this row is truncated.
            if (ma.degree() + mb.degree() > trunc) {
                break;
            }
            r.add_term(ma * mb, f.mul(ca, cb));
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar &c) const
{
    TruncatedSeries r(ring_);
    const Field &f = ring_.field();
    const Scalar cn = f.normalize(c);
    if (Field::is_zero(cn)) {
        return r;
    }
    for (const auto &[m, a] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), m, f.mul(a, cn));
    }
    return r;
}

TruncatedSeries TruncatedSeries::times_monomial(const Monomial &m) const
{
    TruncatedSeries r(ring_);
    for (const auto &[mm, c] : terms_) {
        if (mm.degree() + m.degree() > ring_.trunc()) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const
{
    TruncatedSeries result = constant(ring_, 1);
    TruncatedSeries base(*this);
    while (e > 0) {
        if (e & 1u) {
            result = result * base;
        }
        e >>= 1u;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

ExtOrder TruncatedSeries::ord() const
{
    if (terms_.empty()) {
        return ExtOrder::at_least(ring_.trunc() + 1);
    }
    return ExtOrder::exact(terms_.begin()->first.degree());
}

TruncatedSeries TruncatedSeries::homogeneous_part(unsigned d) const
{
    if (d > ring_.trunc()) {
        throw precondition_error("homogeneous degree " + std::to_string(d) + " exceeds truncation "
                                 + std::to_string(ring_.trunc()));
    }
    TruncatedSeries r(ring_);
    for (const auto &[m, c] : terms_) {
        if (m.degree() == d) {
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::initial_form() const
{
    if (terms_.empty()) {
        throw precondition_error("initial form of zero undefined");
    }
    return homogeneous_part(terms_.begin()->first.degree());
}

TruncatedSeries TruncatedSeries::jet_below(unsigned d) const
{
    TruncatedSeries r(ring_);
    for (const auto &[m, c] : terms_) {
        if (m.degree() >= d) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

unsigned TruncatedSeries::max_degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

ExtOrder vector_ord(const std::vector<TruncatedSeries> &v)
{
    if (v.empty()) {
        throw precondition_error("order of an empty vector");
    }
    ExtOrder best = v.front().ord();
    for (const auto &s : v) {
        best = std::min(best, s.ord());
    }
    return best;
}

} // namespace artin
