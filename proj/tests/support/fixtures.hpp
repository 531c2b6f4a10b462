/**
 * Shared test fixtures: the four-paper coauthorship toy dataset (vertices
 * A,B,C,D mapped to 0,1,2,3) and a bounded random-complex generator for
 * property tests.
 */
#ifndef SNN_TESTS_FIXTURES_HPP
#define SNN_TESTS_FIXTURES_HPP

#include <sstream>
#include <vector>

#include "snn/complex.hpp"
#include "snn/ingest.hpp"
#include "snn/linalg.hpp"
#include "snn/rng.hpp"

namespace snn::testing {

// Papers: {A,B,C} cited 100, {A,B} cited 50, {A,D} cited 10, {C,D} cited 4.
inline Corpus toy_corpus() {
    Corpus corpus;
    corpus.papers = {
        {"paper1", {0, 1, 2}, 100},
        {"paper2", {0, 1}, 50},
        {"paper3", {0, 3}, 10},
        {"paper4", {2, 3}, 4},
    };
    return corpus;
}

inline std::string toy_corpus_tsv() {
    return "paper1\t0;1;2\t100\n"
           "paper2\t0;1\t50\n"
           "paper3\t0;3\t10\n"
           "paper4\t2;3\t4\n";
}

// K_0 = {A,B,C,D}, K_1 = {AB,AC,AD,BC,CD}, K_2 = {ABC}.
inline SimplicialComplex toy_complex() {
    SimplicialComplex complex;
    complex.insert_closure(Simplex{0, 1, 2});
    complex.insert_closure(Simplex{0, 1});
    complex.insert_closure(Simplex{0, 3});
    complex.insert_closure(Simplex{2, 3});
    return complex;
}

inline Vector<double> toy_vertex_cochain() {
    Vector<double> v(4);
    v << 160, 150, 104, 14;
    return v;
}

inline Vector<double> toy_edge_cochain() {
    Vector<double> v(5);
    v << 150, 100, 10, 100, 4;  // AB, AC, AD, BC, CD
    return v;
}

inline Matrix<double> toy_degree1_laplacian() {
    Matrix<double> m(5, 5);
    m << 3, 0, 1, 0, 0,   //
        0, 3, 1, 0, -1,   //
        1, 1, 2, 0, 1,    //
        0, 0, 0, 3, -1,   //
        0, -1, 1, -1, 2;  // rows/cols: AB, AC, AD, BC, CD
    return m;
}

/// Random complex with at most max_simplices simplices in total, built by
/// inserting random maximal simplices until the budget would be exceeded.
inline SimplicialComplex random_complex(Rng& rng, SimplicialComplex::Index max_simplices = 50,
                                        int max_vertices = 8, int max_dim = 3) {
    SimplicialComplex complex;
    const int n_vertices = 3 + static_cast<int>(rng.uniform_below(
                                   static_cast<std::uint64_t>(max_vertices - 2)));
    const int attempts = 4 + static_cast<int>(rng.uniform_below(12));
    for (int a = 0; a < attempts; ++a) {
        const int dim = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_dim) + 1));
        if (dim + 1 > n_vertices) continue;
        std::vector<VertexId> pool(static_cast<std::size_t>(n_vertices));
        for (int v = 0; v < n_vertices; ++v) pool[static_cast<std::size_t>(v)] = v;
        rng.shuffle(pool);
        pool.resize(static_cast<std::size_t>(dim) + 1);
        SimplicialComplex candidate = complex;
        candidate.insert_closure(Simplex(pool));
        if (candidate.total_count() > max_simplices) continue;
        complex = std::move(candidate);
    }
    if (complex.empty()) complex.insert_closure(Simplex{0, 1});
    return complex;
}

}  // namespace snn::testing

#endif
