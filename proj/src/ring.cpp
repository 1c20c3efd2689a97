#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include <artin/errors.hpp>
#include <artin/ring.hpp>

namespace artin
{

Monomial::Monomial(std::vector<std::uint16_t> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u))
{
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power)
{
    std::vector<std::uint16_t> e(num_vars, 0);
    e.at(index) = static_cast<std::uint16_t>(power);
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial &other) const
{
    std::vector<std::uint16_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>(e[i] + other.exps_[i]);
    }
    Monomial m;
    m.exps_ = std::move(e);
    m.degree_ = degree_ + other.degree_;
    return m;
}

bool Monomial::divides(const Monomial &other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial &other) const
{
    std::vector<std::uint16_t> e(other.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint16_t>(e[i] - exps_[i]);
    }
    return Monomial(std::move(e));
}

bool GradedLess::operator()(const Monomial &a, const Monomial &b) const
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    // Same degree: T1-heavy monomials first.
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

std::size_t MonomialHash::operator()(const Monomial &m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h = (h ^ e) * 1099511628211ull;
    }
    return h;
}

namespace
{

// Exponent vectors of degree exactly d, T1-heaviest first.
void enumerate_degree(std::size_t n, unsigned d, std::vector<std::uint16_t> &cur, std::size_t pos,
                      std::vector<Monomial> &out)
{
    if (pos + 1 == n) {
        cur[pos] = static_cast<std::uint16_t>(d);
        out.emplace_back(cur);
        return;
    }
    for (int e = static_cast<int>(d); e >= 0; --e) {
        cur[pos] = static_cast<std::uint16_t>(e);
        enumerate_degree(n, d - static_cast<unsigned>(e), cur, pos + 1, out);
    }
    cur[pos] = 0;
}

} // namespace

MonomialTable::MonomialTable(std::size_t num_vars, unsigned trunc) : trunc_(trunc)
{
    offsets_.push_back(0);
    std::vector<std::uint16_t> cur(num_vars, 0);
    for (unsigned d = 0; d <= trunc; ++d) {
        enumerate_degree(num_vars, d, cur, 0, monomials_);
        offsets_.push_back(monomials_.size());
    }
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i], i);
    }
}

std::size_t MonomialTable::index_of(const Monomial &m) const
{
    auto it = index_.find(m);
    if (it == index_.end()) {
        throw std::out_of_range("monomial of degree " + std::to_string(m.degree())
                                + " exceeds truncation " + std::to_string(trunc_));
    }
    return it->second;
}

const MonomialTable &MonomialTable::get(std::size_t num_vars, unsigned trunc)
{
    static std::mutex mtx;
    static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialTable>> cache;
    std::lock_guard lock(mtx);
    auto &slot = cache[{num_vars, trunc}];
    if (!slot) {
        slot = std::make_unique<MonomialTable>(num_vars, trunc);
    }
    return *slot;
}

std::vector<std::string> default_var_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("T" + std::to_string(i));
    }
    return names;
}

RingSpec::RingSpec(std::size_t num_vars, Field field, unsigned trunc)
    : RingSpec(default_var_names(num_vars), field, trunc)
{
}

RingSpec::RingSpec(std::vector<std::string> var_names, Field field, unsigned trunc)
{
    if (var_names.empty()) {
        throw precondition_error("ring needs at least one variable");
    }
    if (trunc < 1) {
        throw precondition_error("truncation order must be at least 1");
    }
    auto sorted = var_names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw precondition_error("duplicate variable names");
    }
    data_ = std::make_shared<const Data>(Data{std::move(var_names), field, trunc});
}

const MonomialTable &RingSpec::monomials() const
{
    const mpz_class count = binomial(static_cast<unsigned>(num_vars()) + trunc(), trunc());
    if (count > 4000000) {
        throw precondition_error("coefficient space of " + count.get_str()
                                 + " monomials is too large for this truncation");
    }
    return MonomialTable::get(num_vars(), trunc());
}

mpz_class binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace artin
