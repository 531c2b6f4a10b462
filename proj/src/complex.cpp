#include "snn/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>

namespace snn {

void SimplicialComplex::insert_closure(const Simplex& s) {
    const int dim = s.dimension();
    if (dim >= static_cast<int>(by_dim_.size()))
        by_dim_.resize(static_cast<std::size_t>(dim) + 1);

    // Enumerate every non-empty subset of the vertex set. Author sets are
    // small (a handful of vertices), so the 2^(p+1) walk is cheap.
    const auto& verts = s.vertices();
    const std::size_t n = verts.size();
    if (n > 24)
        throw std::invalid_argument(
            "insert_closure: simplex with more than 24 vertices (closure would "
            "enumerate 2^" +
            std::to_string(n) + " subsets)");
    bool changed = false;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
        std::vector<VertexId> subset;
        subset.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            if (bits & (std::uint64_t(1) << k)) subset.push_back(verts[k]);
        const std::size_t d = subset.size() - 1;
        changed |= by_dim_[d].emplace(std::move(subset)).second;
    }
    if (changed) fresh_ = false;
}

void SimplicialComplex::refresh() const {
    if (fresh_) return;
    lists_.assign(by_dim_.size(), {});
    for (std::size_t p = 0; p < by_dim_.size(); ++p)
        lists_[p].assign(by_dim_[p].begin(), by_dim_[p].end());
    fresh_ = true;
}

std::vector<SimplicialComplex::Index> SimplicialComplex::counts() const {
    std::vector<Index> out;
    out.reserve(by_dim_.size());
    for (const auto& level : by_dim_) out.push_back(static_cast<Index>(level.size()));
    return out;
}

SimplicialComplex::Index SimplicialComplex::total_count() const noexcept {
    Index total = 0;
    for (const auto& level : by_dim_) total += static_cast<Index>(level.size());
    return total;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    static const std::vector<Simplex> kEmpty;
    if (p < 0 || p > top_dimension()) return kEmpty;
    refresh();
    return lists_[static_cast<std::size_t>(p)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const int p = s.dimension();
    if (p > top_dimension()) return false;
    return by_dim_[static_cast<std::size_t>(p)].count(s) > 0;
}

std::optional<SimplicialComplex::Index> SimplicialComplex::position(const Simplex& s) const {
    const auto& level = simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const {
    if (!contains(s))
        throw std::invalid_argument("cofaces: simplex " + s.to_string() +
                                    " is not in the complex");
    std::vector<Simplex> out;
    for (const Simplex& tau : simplices(s.dimension() + 1))
        if (tau.contains(s)) out.push_back(tau);
    return out;
}

std::vector<std::vector<SimplicialComplex::Index>> SimplicialComplex::adjacency(int p) const {
    const auto& level = simplices(p);
    const auto n = static_cast<std::size_t>(level.size());
    std::vector<std::set<Index>> nbrs(n);

    // Shared faces: group the p-simplices by each of their (p-1)-faces.
    if (p >= 1) {
        std::map<Simplex, std::vector<Index>> by_face;
        for (std::size_t i = 0; i < n; ++i)
            for (const Simplex& f : level[i].faces())
                by_face[f].push_back(static_cast<Index>(i));
        for (const auto& [face, members] : by_face)
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    nbrs[static_cast<std::size_t>(members[a])].insert(members[b]);
                    nbrs[static_cast<std::size_t>(members[b])].insert(members[a]);
                }
    }

    // Shared cofaces: the p-faces of each (p+1)-simplex are mutually adjacent.
    for (const Simplex& tau : simplices(p + 1)) {
        std::vector<Index> members;
        for (const Simplex& f : tau.faces()) {
            auto pos = position(f);
            if (pos) members.push_back(*pos);
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                nbrs[static_cast<std::size_t>(members[a])].insert(members[b]);
                nbrs[static_cast<std::size_t>(members[b])].insert(members[a]);
            }
    }

    std::vector<std::vector<Index>> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(nbrs[i].begin(), nbrs[i].end());
    return out;
}

std::optional<int> SimplicialComplex::simplicial_distance(const Simplex& a,
                                                          const Simplex& b) const {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("simplicial_distance: dimension mismatch (" +
                                    std::to_string(a.dimension()) + " vs " +
                                    std::to_string(b.dimension()) + ")");
    auto pa = position(a);
    auto pb = position(b);
    if (!pa || !pb)
        throw std::invalid_argument("simplicial_distance: simplex not in the complex");
    if (*pa == *pb) return 0;

    const auto adj = adjacency(a.dimension());
    std::vector<int> dist(adj.size(), -1);
    std::deque<Index> queue;
    dist[static_cast<std::size_t>(*pa)] = 0;
    queue.push_back(*pa);
    while (!queue.empty()) {
        Index cur = queue.front();
        queue.pop_front();
        for (Index nb : adj[static_cast<std::size_t>(cur)]) {
            if (dist[static_cast<std::size_t>(nb)] != -1) continue;
            dist[static_cast<std::size_t>(nb)] = dist[static_cast<std::size_t>(cur)] + 1;
            if (nb == *pb) return dist[static_cast<std::size_t>(nb)];
            queue.push_back(nb);
        }
    }
    return std::nullopt;
}

}  // namespace snn
