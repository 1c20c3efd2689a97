#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <artin/series.hpp>

namespace artin
{

// Sparse coefficient vector, sorted by column, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

// Reduced row echelon basis of a subspace of field^ncols. Pivots are the
// lowest nonzero column of each row and every pivot column is zero in all
// other rows, so equal subspaces have identical bases.
class EchelonBasis
{
public:
    EchelonBasis(Field field, std::size_t ncols) : field_(field), ncols_(ncols) {}

    const Field &field() const noexcept
    {
        return field_;
    }
    std::size_t ncols() const noexcept
    {
        return ncols_;
    }
    std::size_t rank() const noexcept
    {
        return rows_.size();
    }
    // pivot column -> row, ascending.
    const std::map<std::size_t, SparseVec> &rows() const noexcept
    {
        return rows_;
    }

    // Remainder of v after eliminating every pivot column.
    SparseVec reduce(SparseVec v) const;
    // Adds v to the span; returns true when the rank grew.
    bool insert(const SparseVec &v);
    bool contains(const SparseVec &v) const
    {
        return reduce(v).empty();
    }

    friend bool operator==(const EchelonBasis &a, const EchelonBasis &b)
    {
        return a.field_ == b.field_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    Field field_;
    std::size_t ncols_;
    std::map<std::size_t, SparseVec> rows_;
};

// v + c * w.
SparseVec axpy(const Field &f, const SparseVec &v, const Scalar &c, const SparseVec &w);

// Indexing of (component, monomial) pairs of (k[T]/m^(D+1))^arity. Columns are
// degree-major: all degree-0 entries (component by component), then degree 1,
// and so on; inside one degree and component monomials follow GradedLess.
// This makes m^n a suffix of the columns.
class CoefficientSpace
{
public:
    CoefficientSpace(RingSpec ring, std::size_t arity);

    const RingSpec &ring() const noexcept
    {
        return ring_;
    }
    std::size_t arity() const noexcept
    {
        return arity_;
    }
    std::size_t ncols() const noexcept
    {
        return ncols_;
    }

    std::size_t column(std::size_t component, const Monomial &m) const;
    // First column of degree d; ncols() for d = D+1.
    std::size_t degree_start(unsigned d) const;
    unsigned degree_of(std::size_t col) const;
    std::pair<std::size_t, const Monomial *> decode(std::size_t col) const;

    SparseVec encode(const std::vector<TruncatedSeries> &v) const;
    std::vector<TruncatedSeries> decode_vector(const SparseVec &v) const;

    friend bool operator==(const CoefficientSpace &a, const CoefficientSpace &b)
    {
        return a.arity_ == b.arity_ && a.ring_ == b.ring_;
    }

private:
    RingSpec ring_;
    std::size_t arity_;
    const MonomialTable *table_;
    std::size_t ncols_;
};

// A finite-dimensional subspace of (k[T]/m^(D+1))^arity, e.g. the image of
// an ideal, a submodule, or a power of the maximal ideal.
class Subspace
{
public:
    explicit Subspace(CoefficientSpace space)
        : space_(std::move(space)), basis_(space_.ring().field(), space_.ncols())
    {
    }

    const CoefficientSpace &space() const noexcept
    {
        return space_;
    }
    const RingSpec &ring() const noexcept
    {
        return space_.ring();
    }
    std::size_t arity() const noexcept
    {
        return space_.arity();
    }
    std::size_t dim() const noexcept
    {
        return basis_.rank();
    }
    const EchelonBasis &basis() const noexcept
    {
        return basis_;
    }

    bool insert(const std::vector<TruncatedSeries> &v)
    {
        return basis_.insert(space_.encode(v));
    }
    bool insert_raw(const SparseVec &v)
    {
        return basis_.insert(v);
    }

    // Basis elements decoded back into vectors of series.
    std::vector<std::vector<TruncatedSeries>> basis_vectors() const;

    friend bool operator==(const Subspace &a, const Subspace &b)
    {
        return a.space_ == b.space_ && a.basis_ == b.basis_;
    }

private:
    CoefficientSpace space_;
    EchelonBasis basis_;
};

// I = (f_1, ..., f_p). An empty generator list is the zero ideal.
struct IdealSpec {
    RingSpec ring;
    std::vector<TruncatedSeries> generators;

    IdealSpec(RingSpec r, std::vector<TruncatedSeries> gens);
    unsigned max_generator_degree() const;
};

// Submodule of A^p generated by p-vectors.
struct ModuleSpec {
    RingSpec ring;
    std::size_t arity;
    std::vector<std::vector<TruncatedSeries>> generators;

    ModuleSpec(RingSpec r, std::size_t p, std::vector<std::vector<TruncatedSeries>> gens);
    static ModuleSpec from_ideal(const IdealSpec &ideal);
    unsigned max_generator_degree() const;
};

Subspace span_ideal(const IdealSpec &ideal);
Subspace span_module(const ModuleSpec &module);
// m^j * M: span of u * g for monomials u of degree >= j.
Subspace span_m_power_times(const ModuleSpec &module, unsigned j);
// m^i in arity components; i = D+1 gives the zero subspace.
Subspace span_m_power(const RingSpec &ring, unsigned i, std::size_t arity = 1);

Subspace subspace_sum(const Subspace &u, const Subspace &v);
// Zassenhaus intersection on the stacked bases.
Subspace subspace_intersect(const Subspace &u, const Subspace &v);
// U intersected with m^n; reads it off the echelon form directly.
Subspace intersect_m_power(const Subspace &u, unsigned n);
// V is a subset of U.
bool contains(const Subspace &u, const Subspace &v);
bool member(const std::vector<TruncatedSeries> &x, const Subspace &u);
bool member(const TruncatedSeries &x, const Subspace &u);

// Remainder of x modulo U; its lowest-degree part is not in U + m^(deg+1).
std::vector<TruncatedSeries> normal_form(const std::vector<TruncatedSeries> &x, const Subspace &u);
// max { n <= D+1 : x in U + m^n }, with AtLeast(D+1) when x is in U.
ExtOrder distance_order(const std::vector<TruncatedSeries> &x, const Subspace &u);
ExtOrder distance_order(const TruncatedSeries &x, const Subspace &u);

// Coefficients c with sum c_k vectors[k] = target, if any.
std::optional<std::vector<Scalar>> solve_combination(const Field &field, std::size_t ncols,
                                                     const std::vector<SparseVec> &vectors,
                                                     const SparseVec &target);

} // namespace artin
