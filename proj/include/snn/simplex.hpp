/**
 * Abstract simplices: finite sets of vertices kept as strictly increasing
 * integer sequences. The sorted order fixes the orientation convention used
 * by every coboundary sign in the library.
 */
#ifndef SNN_SIMPLEX_HPP
#define SNN_SIMPLEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace snn {

/// Dense per-complex vertex identifier.
using VertexId = int;

class Simplex {
public:
    /// Canonicalizes by sorting. Rejects empty vertex lists, negative ids,
    /// and duplicate vertices.
    explicit Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty())
            throw std::invalid_argument("Simplex: empty vertex list");
        std::sort(vertices_.begin(), vertices_.end());
        if (vertices_.front() < 0)
            throw std::invalid_argument("Simplex: negative vertex id");
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("Simplex: duplicate vertex id");
    }

    Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    /// Dimension p; a simplex of p+1 vertices has dimension p.
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

    std::size_t size() const noexcept { return vertices_.size(); }
    VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    /// The p+1 faces of dimension p-1, ordered by omitted vertex index
    /// i = 0..p. Vertices have no faces; the empty set is not represented.
    std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        if (dimension() < 1) return out;
        out.reserve(vertices_.size());
        for (std::size_t omit = 0; omit < vertices_.size(); ++omit) {
            std::vector<VertexId> face;
            face.reserve(vertices_.size() - 1);
            for (std::size_t k = 0; k < vertices_.size(); ++k)
                if (k != omit) face.push_back(vertices_[k]);
            out.emplace_back(std::move(face));
        }
        return out;
    }

    /// True if other is a subset of this simplex (both sorted).
    bool contains(const Simplex& other) const {
        return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                             other.vertices_.end());
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(vertices_[i]);
        }
        return s;
    }

    friend bool operator==(const Simplex& a, const Simplex& b) = default;
    /// Lexicographic order on vertex sequences; defines all index orders.
    friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

private:
    std::vector<VertexId> vertices_;
};

}  // namespace snn

#endif
