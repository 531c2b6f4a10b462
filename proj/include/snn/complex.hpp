/**
 * Finite abstract simplicial complexes with deterministic per-dimension
 * indexing. Within each dimension the simplices are ordered
 * lexicographically by vertex sequence; every matrix row/column order in the
 * library is derived from that ordering.
 *
 * A complex is mutable while it is being built (insert_closure) and treated
 * as immutable afterwards; all query methods are const and safe for
 * concurrent readers.
 */
#ifndef SNN_COMPLEX_HPP
#define SNN_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "snn/simplex.hpp"

namespace snn {

class SimplicialComplex {
public:
    using Index = std::ptrdiff_t;

    SimplicialComplex() = default;

    /// Inserts a simplex together with all of its subsets, restoring
    /// closure under taking subsets. Idempotent.
    void insert_closure(const Simplex& s);

    /// -1 for the empty complex.
    int top_dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

    /// |K_p|; 0 for dimensions the complex does not reach.
    Index count(int p) const noexcept {
        if (p < 0 || p > top_dimension()) return 0;
        return static_cast<Index>(by_dim_[static_cast<std::size_t>(p)].size());
    }

    /// Per-dimension simplex counts for p = 0..top_dimension().
    std::vector<Index> counts() const;

    Index total_count() const noexcept;

    bool empty() const noexcept { return by_dim_.empty(); }

    /// The p-simplices in lexicographic order. Empty for out-of-range p.
    const std::vector<Simplex>& simplices(int p) const;

    bool contains(const Simplex& s) const;

    /// Position of s within the ordering of its dimension.
    std::optional<Index> position(const Simplex& s) const;

    /// All (p+1)-simplices having s as a face, in index order.
    /// Throws std::invalid_argument if s is not in the complex.
    std::vector<Simplex> cofaces(const Simplex& s) const;

    /// Length of the shortest chain of p-simplices linking a to b in which
    /// consecutive members share a face or a coface; 0 if a == b, and
    /// std::nullopt when no chain exists (infinite distance).
    /// Throws std::invalid_argument on dimension mismatch or unknown input.
    std::optional<int> simplicial_distance(const Simplex& a, const Simplex& b) const;

    /// Adjacency lists on K_p under the "shares a face or a coface"
    /// relation, indexed by position. Exposed for spectral locality checks.
    std::vector<std::vector<Index>> adjacency(int p) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }

private:
    // Authoritative store; std::set keeps each dimension sorted and unique.
    std::vector<std::set<Simplex>> by_dim_;

    // Lexicographic snapshots rebuilt lazily after inserts.
    mutable std::vector<std::vector<Simplex>> lists_;
    mutable bool fresh_ = true;

    void refresh() const;
};

}  // namespace snn

#endif
